#pragma once

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <vector>

#include "strata/affweyl.hpp"
#include "strata/error.hpp"

namespace strata {

// A parahoric subgroup: a proper subset of the affine simple reflections
// together with the finite group W_K it generates, materialized eagerly.
class Parahoric {
 public:
  Parahoric(const GroupCtx& ctx, std::vector<int> gen_indices)
      : ctx_id_(ctx.id()), gens_(std::move(gen_indices)) {
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    for (int i : gens_)
      if (i < 0 || i >= ctx.n_affine_gens())
        throw lattice_error("parahoric generator index out of range");
    if (static_cast<int>(gens_.size()) == ctx.n_affine_gens())
      throw lattice_error("the full affine generator set spans an infinite group");
    if (!ctx.sigma().trivial()) {
      for (int i : gens_) {
        const int j = ctx.sigma_gen(i);
        if (!std::binary_search(gens_.begin(), gens_.end(), j))
          throw lattice_error("parahoric generator set is not sigma-stable");
      }
    }
    materialize(ctx);
  }

  std::uint32_t ctx_id() const { return ctx_id_; }
  const std::vector<int>& gens() const { return gens_; }
  const std::vector<Elt>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains_gen(int i) const {
    return std::binary_search(gens_.begin(), gens_.end(), i);
  }

  bool contains(const GroupCtx& ctx, const Elt& e) const {
    ctx.check(e);
    for (const Elt& x : elements_)
      if (x == e) return true;
    return false;
  }

  // Longest element of W_K (unique).
  const Elt& longest_element() const { return elements_.back(); }

 private:
  void materialize(const GroupCtx& ctx) {
    std::unordered_set<Elt, EltHash> seen;
    std::deque<Elt> queue;
    Elt e = ctx.identity();
    seen.insert(e);
    queue.push_back(e);
    const std::size_t guard = 1u << 24;
    while (!queue.empty()) {
      Elt w = queue.front();
      queue.pop_front();
      for (int i : gens_) {
        Elt ws = ctx.multiply(w, ctx.generator(i));
        if (seen.insert(ws).second) queue.push_back(ws);
        if (seen.size() > guard)
          throw internal_error("parahoric closure does not terminate");
      }
    }
    elements_.assign(seen.begin(), seen.end());
    sort_elements(ctx, elements_);
  }

  std::uint32_t ctx_id_;
  std::vector<int> gens_;
  std::vector<Elt> elements_;
};

// ^K w: the unique minimal-length element of W_K w, by greedy descent.
inline Elt min_in_left_coset(const GroupCtx& ctx, const Parahoric& K, Elt w) {
  ctx.check(w);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : K.gens()) {
      if (w.perm.left_descent(i)) {
        w = ctx.multiply(ctx.generator(i), w);
        moved = true;
      }
    }
  }
  return w;
}

// w^K: the unique minimal-length element of w W_K.
inline Elt min_in_right_coset(const GroupCtx& ctx, const Parahoric& K, Elt w) {
  ctx.check(w);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : K.gens()) {
      if (w.perm.right_descent(i)) {
        w = ctx.multiply(w, ctx.generator(i));
        moved = true;
      }
    }
  }
  return w;
}

inline bool in_min_left_cosets(const GroupCtx& ctx, const Parahoric& K, const Elt& w) {
  ctx.check(w);
  for (int i : K.gens())
    if (w.perm.left_descent(i)) return false;
  return true;
}

// x_w: the unique minimal-length element of W_K w W_K.
inline Elt min_double_rep(const GroupCtx& ctx, const Parahoric& K, Elt w) {
  ctx.check(w);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : K.gens()) {
      if (w.perm.left_descent(i)) {
        w = ctx.multiply(ctx.generator(i), w);
        moved = true;
      }
      if (w.perm.right_descent(i)) {
        w = ctx.multiply(w, ctx.generator(i));
        moved = true;
      }
    }
  }
  return w;
}

inline bool is_min_double_rep(const GroupCtx& ctx, const Parahoric& K, const Elt& w) {
  ctx.check(w);
  for (int i : K.gens())
    if (w.perm.left_descent(i) || w.perm.right_descent(i)) return false;
  return true;
}

// ^K w_K: the unique maximal-length element of {^K(wv) : v in W_K},
// the ordinary representative of the double coset of w.
inline Elt max_section_rep(const GroupCtx& ctx, const Parahoric& K, const Elt& w) {
  ctx.check(w);
  if (!is_min_double_rep(ctx, K, w))
    throw membership_error("max_section_rep requires a minimal double coset representative");
  Elt best = w;
  int best_len = ctx.length_unbounded(w.perm);
  bool tie = false;
  for (const Elt& v : K.elements()) {
    Elt z = min_in_left_coset(ctx, K, ctx.multiply(w, v));
    const int len = ctx.length_unbounded(z.perm);
    if (len > best_len) {
      best = z;
      best_len = len;
      tie = false;
    } else if (len == best_len && !(z == best)) {
      tie = true;
    }
  }
  if (tie) throw internal_error("maximal section representative is not unique");
  return best;
}

// _K w^K: the unique maximal-length element of {(vw)^K : v in W_K}.
inline Elt max_section_rep_left(const GroupCtx& ctx, const Parahoric& K, const Elt& w) {
  ctx.check(w);
  if (!is_min_double_rep(ctx, K, w))
    throw membership_error("max_section_rep_left requires a minimal double coset representative");
  Elt best = w;
  int best_len = ctx.length_unbounded(w.perm);
  bool tie = false;
  for (const Elt& v : K.elements()) {
    Elt z = min_in_right_coset(ctx, K, ctx.multiply(v, w));
    const int len = ctx.length_unbounded(z.perm);
    if (len > best_len) {
      best = z;
      best_len = len;
      tie = false;
    } else if (len == best_len && !(z == best)) {
      tie = true;
    }
  }
  if (tie) throw internal_error("maximal section representative is not unique");
  return best;
}

// l(_K w^K) = l(^K w_K); holds for every minimal double coset
// representative, and is exercised as a property test.
inline bool length_lemma_check(const GroupCtx& ctx, const Parahoric& K, const Elt& w) {
  const Elt right = max_section_rep(ctx, K, w);
  const Elt left = max_section_rep_left(ctx, K, w);
  return ctx.length_unbounded(right.perm) == ctx.length_unbounded(left.perm);
}

// J_w = J_K  intersect  Ad(w^{-1})(J_K): the generators s of W_K whose
// conjugate w s w^{-1} is again a simple reflection of W_K.
inline std::vector<int> type_Jw(const GroupCtx& ctx, const Parahoric& K, const Elt& w) {
  ctx.check(w);
  if (!is_min_double_rep(ctx, K, w))
    throw membership_error("type_Jw requires a minimal double coset representative");
  const Elt winv = ctx.invert(w);
  std::vector<int> out;
  for (int s : K.gens()) {
    const Elt conj = ctx.multiply(ctx.multiply(w, ctx.generator(s)), winv);
    for (int t : K.gens()) {
      if (conj == ctx.generator(t)) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

// ^J W_K: minimal-length representatives of W_J \ W_K, sorted by
// (length, word).
inline std::vector<Elt> jw_min_reps(const GroupCtx& ctx, const Parahoric& K,
                                    const std::vector<int>& J) {
  for (int j : J)
    if (!K.contains_gen(j))
      throw membership_error("jw_min_reps: J must be a subset of the parahoric generators");
  std::vector<Elt> reps;
  for (const Elt& v : K.elements()) {
    bool minimal = true;
    for (int j : J)
      if (v.perm.left_descent(j)) {
        minimal = false;
        break;
      }
    if (minimal) reps.push_back(v);
  }
  sort_elements(ctx, reps);
  return reps;
}

}  // namespace strata
