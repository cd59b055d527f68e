#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "strata/admissible.hpp"
#include "strata/affweyl.hpp"
#include "strata/error.hpp"
#include "strata/parabolic.hpp"
#include "strata/siegel_model.hpp"

namespace strata {

// Finite labelled poset: the full relation as a bit matrix plus the
// Hasse cover edges (its transitive reduction).
struct Poset {
  struct Node {
    Elt elt;
    std::string label;
    int dim = 0;
    std::optional<int> p_rank;
  };

  std::vector<Node> nodes;
  std::vector<std::vector<bool>> leq;
  std::vector<std::pair<int, int>> covers;  // (lower, upper) index pairs

  bool leq_at(int i, int j) const {
    return leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

// Build a poset from nodes and a relation callback; validates the
// partial order axioms and computes the transitive reduction.
inline Poset make_poset(std::vector<Poset::Node> nodes,
                        const std::function<bool(const Elt&, const Elt&)>& rel) {
  Poset p;
  p.nodes = std::move(nodes);
  const std::size_t n = p.nodes.size();
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p.leq[i][j] = rel(p.nodes[i].elt, p.nodes[j].elt);
  for (std::size_t i = 0; i < n; ++i)
    if (!p.leq[i][i]) throw internal_error("order relation is not reflexive");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && p.leq[i][j] && p.leq[j][i])
        throw internal_error("order relation is not antisymmetric");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (p.leq[i][j] && p.leq[j][k] && !p.leq[i][k])
          throw internal_error("order relation is not transitive");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !p.leq[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && p.leq[i][k] && p.leq[k][j]) cover = false;
      if (cover) p.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

inline std::vector<int> minimal_elements(const Poset& p) {
  std::vector<int> out;
  for (std::size_t j = 0; j < p.nodes.size(); ++j) {
    bool minimal = true;
    for (std::size_t i = 0; i < p.nodes.size(); ++i)
      if (i != j && p.leq[i][j]) minimal = false;
    if (minimal) out.push_back(static_cast<int>(j));
  }
  return out;
}

inline std::vector<int> maximal_elements(const Poset& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < p.nodes.size(); ++j)
      if (i != j && p.leq[i][j]) maximal = false;
    if (maximal) out.push_back(static_cast<int>(i));
  }
  return out;
}

// x1 <=_{K,sigma} x2: some y in W_K has y x1 sigma(y)^{-1} <= x2 in
// Bruhat order. Both arguments must be minimal in their left W_K-coset.
inline bool ksigma_leq(const GroupCtx& ctx, const Parahoric& K, const Elt& x1,
                       const Elt& x2) {
  ctx.check(x1);
  ctx.check(x2);
  if (!in_min_left_cosets(ctx, K, x1) || !in_min_left_cosets(ctx, K, x2))
    throw membership_error("ksigma_leq requires elements of ^K W~");
  for (const Elt& y : K.elements()) {
    const Elt conj =
        ctx.multiply(ctx.multiply(y, x1), ctx.invert(ctx.sigma_apply(y)));
    if (ctx.bruhat_leq_nocap(conj, x2)) return true;
  }
  return false;
}

// KR closure order: Bruhat order on the minimal double coset
// representatives. Node dimensions are l(^K w_K).
inline Poset bruhat_poset(const GroupCtx& ctx, const AdmissibleSet& adm,
                          const Parahoric& K) {
  std::vector<Poset::Node> nodes;
  for (const Elt& w : kr_set(ctx, adm, K)) {
    Poset::Node node{w, element_label(ctx, w),
                     ctx.length_unbounded(max_section_rep(ctx, K, w).perm),
                     std::nullopt};
    nodes.push_back(std::move(node));
  }
  return make_poset(std::move(nodes), [&ctx](const Elt& a, const Elt& b) {
    return ctx.bruhat_leq_nocap(a, b);
  });
}

// EKOR closure order: <=_{K,sigma} on ^K Adm. Node dimensions are l(x).
inline Poset ekor_poset(const GroupCtx& ctx, const AdmissibleSet& adm,
                        const Parahoric& K) {
  std::vector<Poset::Node> nodes;
  for (const Elt& x : ekor_set(ctx, adm, K)) {
    Poset::Node node{x, element_label(ctx, x), ctx.length(x), p_rank(x)};
    nodes.push_back(std::move(node));
  }
  return make_poset(std::move(nodes), [&ctx, &K](const Elt& a, const Elt& b) {
    return ksigma_leq(ctx, K, a, b);
  });
}

// Bruhat order restricted to ^K Adm (coarser than <=_{K,sigma}).
inline Poset ekor_bruhat_poset(const GroupCtx& ctx, const AdmissibleSet& adm,
                               const Parahoric& K) {
  std::vector<Poset::Node> nodes;
  for (const Elt& x : ekor_set(ctx, adm, K)) {
    Poset::Node node{x, element_label(ctx, x), ctx.length(x), p_rank(x)};
    nodes.push_back(std::move(node));
  }
  return make_poset(std::move(nodes), [&ctx](const Elt& a, const Elt& b) {
    return ctx.bruhat_leq_nocap(a, b);
  });
}

// Index map on generators of a finite group, defined at least on the
// type J of the zip datum.
using GenTwist = std::function<int(int)>;

// Orbit closure order on ^J W for a finite Weyl group W with twist:
// w' precedes w iff some y in W_J satisfies y w' x twist(y)^{-1} x^{-1} <= w,
// where x is the minimal-length element of W_{K'} w0 W_{twist(J)} and
// K' = w0 twist(J) w0. Node dimensions are dim P + l(w), the parabolic
// dimension computed from root counts with torus rank = semisimple rank.
inline Poset zip_order(const GroupCtx& ctx, const Parahoric& W,
                       const std::vector<int>& J, const GenTwist& twist) {
  for (int j : J)
    if (!W.contains_gen(j))
      throw membership_error("zip_order: J must consist of generators of W");

  const Elt w0 = W.longest_element();
  std::vector<int> twisted_J;
  for (int j : J) {
    const int t = twist(j);
    if (!W.contains_gen(t))
      throw membership_error("zip_order: twist must map J into the generators of W");
    twisted_J.push_back(t);
  }
  std::sort(twisted_J.begin(), twisted_J.end());

  // K' = conjugate of the twisted type by the longest element.
  std::vector<int> Kprime;
  const Elt w0inv = ctx.invert(w0);
  for (int j : twisted_J) {
    const Elt conj = ctx.multiply(ctx.multiply(w0, ctx.generator(j)), w0inv);
    for (int t : W.gens())
      if (conj == ctx.generator(t)) Kprime.push_back(t);
  }
  if (Kprime.size() != twisted_J.size())
    throw internal_error("longest element fails to permute the twisted type");
  std::sort(Kprime.begin(), Kprime.end());

  // Minimal element x of W_{K'} w0 W_{twist(J)}.
  Elt x = w0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : Kprime)
      if (x.perm.left_descent(i)) {
        x = ctx.multiply(ctx.generator(i), x);
        moved = true;
      }
    for (int i : twisted_J)
      if (x.perm.right_descent(i)) {
        x = ctx.multiply(x, ctx.generator(i));
        moved = true;
      }
  }
  const Elt xinv = ctx.invert(x);

  // twist(y) for y in W_J through its reduced word (all letters lie in J).
  auto twist_elt = [&](const Elt& y) {
    Word word = ctx.reduced_word_unbounded(y.perm);
    Elt out = ctx.identity();
    for (int letter : word.letters)
      out = ctx.multiply(out, ctx.generator(twist(letter)));
    return out;
  };

  std::vector<Elt> WJ;
  for (const Elt& y : W.elements()) {
    Word word = ctx.reduced_word_unbounded(y.perm);
    bool inside = true;
    for (int letter : word.letters)
      if (std::find(J.begin(), J.end(), letter) == J.end()) inside = false;
    if (inside) WJ.push_back(y);
  }

  const int NK = ctx.length_unbounded(w0.perm);
  int NJ = 0;
  for (const Elt& y : WJ) NJ = std::max(NJ, ctx.length_unbounded(y.perm));
  const int dim_P = NK + NJ + static_cast<int>(W.gens().size());

  std::vector<Poset::Node> nodes;
  for (const Elt& v : jw_min_reps(ctx, W, J)) {
    Poset::Node node{v, element_label(ctx, v),
                     dim_P + ctx.length_unbounded(v.perm), std::nullopt};
    nodes.push_back(std::move(node));
  }

  auto rel = [&](const Elt& a, const Elt& b) {
    for (const Elt& y : WJ) {
      const Elt lhs = ctx.multiply(
          ctx.multiply(ctx.multiply(y, a), ctx.multiply(x, ctx.invert(twist_elt(y)))),
          xinv);
      if (ctx.bruhat_leq_nocap(lhs, b)) return true;
    }
    return false;
  };
  return make_poset(std::move(nodes), rel);
}

// JSON rendering of a poset: nodes carry word/dim/p-rank, covers are
// (lower, upper) index pairs into the node list.
inline std::string to_json(const Poset& p) {
  std::ostringstream os;
  os << "{\"nodes\":[";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    if (i) os << ",";
    os << "{\"word\":\"" << p.nodes[i].label << "\",\"dim\":" << p.nodes[i].dim;
    if (p.nodes[i].p_rank) os << ",\"p_rank\":" << *p.nodes[i].p_rank;
    os << "}";
  }
  os << "],\"covers\":[";
  for (std::size_t k = 0; k < p.covers.size(); ++k) {
    if (k) os << ",";
    os << "[" << p.covers[k].first << "," << p.covers[k].second << "]";
  }
  os << "]}";
  return os.str();
}

// Deterministic Graphviz rendering; edges run from lower to higher strata.
inline std::string to_dot(const Poset& p, bool with_dims = true) {
  std::ostringstream os;
  os << "digraph closure {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << p.nodes[i].label;
    if (with_dims) {
      os << "\\ndim " << p.nodes[i].dim;
      if (p.nodes[i].p_rank) os << ", p-rank " << *p.nodes[i].p_rank;
    }
    os << "\"];\n";
  }
  for (const auto& [lo, hi] : p.covers)
    os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace strata
