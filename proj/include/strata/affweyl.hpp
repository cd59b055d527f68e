#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strata/error.hpp"
#include "strata/perm.hpp"
#include "strata/rational.hpp"

namespace strata {

// Integer cocharacter vector of length 2g, subject to the model's
// lattice constraints (for GSp: u_1+u_2g = ... = u_g+u_{g+1}).
using Coweight = std::vector<int>;

// A reduced expression: product of the listed simple reflections,
// multiplied on the right by the omega-th power of the length-zero
// generator of Omega.
struct Word {
  std::vector<int> letters;
  int omega = 0;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters == b.letters && a.omega == b.omega;
  }
};

// Diagram automorphism data: a permutation of the affine generator
// indices together with its realization on windows (conjugation by a
// fixed permutation; absent means the identity).
struct SigmaAction {
  std::vector<int> gen_map;
  std::optional<AffSimPerm> window_conj;
  int order = 1;

  bool trivial() const { return !window_conj.has_value(); }

  static SigmaAction identity(int n_gens) {
    SigmaAction s;
    s.gen_map.resize(static_cast<std::size_t>(n_gens));
    for (int i = 0; i < n_gens; ++i) s.gen_map[static_cast<std::size_t>(i)] = i;
    s.order = 1;
    return s;
  }
};

// One group element in canonical (window) form. Length and reduced word
// are computed on demand through the owning context.
struct Elt {
  AffSimPerm perm;
  std::uint32_t ctx_id;

  int omega() const { return perm.kappa(); }

  friend bool operator==(const Elt& a, const Elt& b) { return a.perm == b.perm; }
  friend bool operator!=(const Elt& a, const Elt& b) { return !(a == b); }
  friend bool operator<(const Elt& a, const Elt& b) { return a.perm < b.perm; }
};

struct EltHash {
  std::size_t operator()(const Elt& e) const { return AffSimPermHash{}(e.perm); }
};

// Ambient extended affine Weyl group W~ = W_a x| Omega, realized on affine
// similitude permutations. Immutable after construction: the BFS length
// ball is materialized once, so concurrent readers are safe.
class GroupCtx {
 public:
  GroupCtx(std::vector<AffSimPerm> gens, AffSimPerm tau, Coweight mu,
           std::vector<int> finite_gen_indices,
           std::vector<std::pair<int, int>> positive_root_pairs,
           std::vector<std::vector<int>> simple_coroots, SigmaAction sigma,
           int length_cap)
      : id_(next_id()),
        gens_(std::move(gens)),
        tau_(std::move(tau)),
        tau_inv_(tau_.inverse()),
        mu_(std::move(mu)),
        finite_gens_(std::move(finite_gen_indices)),
        pos_pairs_(std::move(positive_root_pairs)),
        simple_coroots_(std::move(simple_coroots)),
        sigma_(std::move(sigma)),
        cap_(length_cap) {
    for (const auto& s : gens_) {
      if (!s.compose(s).is_identity())
        throw internal_error("generator does not square to the identity");
    }
    if (static_cast<int>(sigma_.gen_map.size()) != n_affine_gens())
      throw internal_error("sigma does not cover the generator set");
    for (int i = 0; i < n_affine_gens(); ++i) {
      if (sigma_apply_perm(gens_[static_cast<std::size_t>(i)]) !=
          gens_[static_cast<std::size_t>(sigma_.gen_map[static_cast<std::size_t>(i)])])
        throw internal_error("sigma window action disagrees with its index map");
    }
    build_ball();
  }

  GroupCtx(const GroupCtx&) = delete;
  GroupCtx& operator=(const GroupCtx&) = delete;

  std::uint32_t id() const { return id_; }
  int g() const { return tau_.g(); }
  int n_affine_gens() const { return static_cast<int>(gens_.size()); }
  int length_cap() const { return cap_; }
  const Coweight& mu() const { return mu_; }
  const std::vector<int>& finite_gen_indices() const { return finite_gens_; }
  const std::vector<std::pair<int, int>>& positive_root_pairs() const {
    return pos_pairs_;
  }
  const SigmaAction& sigma() const { return sigma_; }

  Elt make(AffSimPerm p) const { return Elt{std::move(p), id_}; }
  Elt identity() const { return make(AffSimPerm::identity(g())); }
  Elt generator(int i) const {
    return make(gens_.at(static_cast<std::size_t>(i)));
  }
  Elt tau_generator() const { return make(tau_); }

  Elt omega_power(int k) const {
    AffSimPerm p = AffSimPerm::identity(g());
    const AffSimPerm& step = k >= 0 ? tau_ : tau_inv_;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) p = step.compose(p);
    return make(p);
  }

  void check(const Elt& e) const {
    if (e.ctx_id != id_)
      throw context_mismatch("element belongs to a different group context");
  }

  // Group law; the right factor acts first.
  Elt multiply(const Elt& a, const Elt& b) const {
    check(a);
    check(b);
    return make(a.perm.compose(b.perm));
  }

  Elt invert(const Elt& a) const {
    check(a);
    return make(a.perm.inverse());
  }

  int kappa(const Elt& a) const {
    check(a);
    return a.perm.kappa();
  }

  // W_a-component of a = w_a * tau^kappa(a).
  AffSimPerm wa_part(const AffSimPerm& p) const {
    const int c = p.kappa();
    if (c == 0) return p;
    return p.compose(omega_power(-c).perm);
  }

  bool in_ball(const Elt& a) const {
    check(a);
    return ball_.find(wa_part(a.perm)) != ball_.end();
  }

  // Length from the materialized BFS ball (the oracle of record).
  int length(const Elt& a) const {
    check(a);
    auto it = ball_.find(wa_part(a.perm));
    if (it == ball_.end())
      throw cap_exceeded("element lies outside the materialized ball (cap " +
                         std::to_string(cap_) + ")");
    return it->second;
  }

  // Length by greedy descent reduction; exact for any element, used by
  // the coset machinery where intermediate products may exceed the cap.
  int length_unbounded(const AffSimPerm& p) const {
    AffSimPerm w = wa_part(p);
    int len = 0;
    while (true) {
      int i = min_left_descent(w);
      if (i < 0) {
        if (!w.is_identity())
          throw internal_error("descent-free non-identity W_a element");
        return len;
      }
      w = gens_[static_cast<std::size_t>(i)].compose(w);
      ++len;
    }
  }

  bool left_descent(const Elt& a, int i) const {
    check(a);
    return a.perm.left_descent(i);
  }
  bool right_descent(const Elt& a, int i) const {
    check(a);
    return a.perm.right_descent(i);
  }

  // Lexicographically least reduced word, via the minimal left descent.
  Word reduced_word(const Elt& a) const {
    check(a);
    require_in_ball(a.perm);
    return reduced_word_unbounded(a.perm);
  }

  Word reduced_word_unbounded(const AffSimPerm& p) const {
    Word word;
    word.omega = p.kappa();
    AffSimPerm w = wa_part(p);
    while (true) {
      int i = min_left_descent(w);
      if (i < 0) break;
      word.letters.push_back(i);
      w = gens_[static_cast<std::size_t>(i)].compose(w);
    }
    return word;
  }

  Elt word_to_elt(const Word& word) const {
    AffSimPerm p = omega_power(word.omega).perm;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
      p = gens_.at(static_cast<std::size_t>(*it)).compose(p);
    return make(p);
  }

  // Bruhat order on W~: equal Omega-components and comparable W_a-parts.
  bool bruhat_leq(const Elt& a, const Elt& b) const {
    check(a);
    check(b);
    require_in_ball(a.perm);
    require_in_ball(b.perm);
    return bruhat_leq_nocap(a, b);
  }

  bool bruhat_leq_nocap(const Elt& a, const Elt& b) const {
    if (a.perm.kappa() != b.perm.kappa()) return false;
    const AffSimPerm va = wa_part(a.perm);
    const AffSimPerm wb = wa_part(b.perm);
    return bruhat_rec(va, length_unbounded(va), wb, length_unbounded(wb));
  }

  Elt translation(const Coweight& lambda) const {
    validate_coweight(lambda);
    const int n = 2 * g();
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      w[static_cast<std::size_t>(i - 1)] =
          i + n * lambda[static_cast<std::size_t>(i - 1)];
    return make(AffSimPerm(std::move(w)));
  }

  // The length-zero element with the same Kottwitz component as t^mu.
  Elt tau_element(const Coweight& mu) const {
    return omega_power(translation(mu).perm.kappa());
  }

  Elt sigma_apply(const Elt& a) const {
    check(a);
    return make(sigma_apply_perm(a.perm));
  }

  AffSimPerm sigma_apply_perm(const AffSimPerm& p) const {
    if (sigma_.trivial()) return p;
    return sigma_.window_conj->compose(p).compose(sigma_.window_conj->inverse());
  }

  int sigma_gen(int i) const {
    return sigma_.gen_map.at(static_cast<std::size_t>(i));
  }

  void validate_coweight(const Coweight& lambda) const {
    const int n = 2 * g();
    if (static_cast<int>(lambda.size()) != n)
      throw lattice_error("coweight has wrong length");
    const int s = lambda[0] + lambda[static_cast<std::size_t>(n - 1)];
    for (int i = 1; i <= n; ++i)
      if (lambda[static_cast<std::size_t>(i - 1)] +
              lambda[static_cast<std::size_t>(n - i)] != s)
        throw lattice_error("coweight violates the similitude constraint");
  }

  // --- root/coweight pairings (exact) ---

  template <typename T>
  T root_pairing(const std::pair<int, int>& pair, const std::vector<T>& v) const {
    return v[static_cast<std::size_t>(pair.first - 1)] -
           v[static_cast<std::size_t>(pair.second - 1)];
  }

  // Simple roots are the functionals u_i - u_{i+1}, i = 1..g.
  template <typename T>
  T simple_root_pairing(int i, const std::vector<T>& v) const {
    return v[static_cast<std::size_t>(i - 1)] - v[static_cast<std::size_t>(i)];
  }

  template <typename T>
  T two_rho_pairing(const std::vector<T>& v) const {
    T acc{};
    for (const auto& pr : pos_pairs_) acc += root_pairing(pr, v);
    return acc;
  }

  template <typename T>
  bool is_dominant(const std::vector<T>& v) const {
    for (int i = 1; i <= g(); ++i)
      if (simple_root_pairing(i, v) < T{0}) return false;
    return true;
  }

  // Finite generator s_i acting on coordinate vectors.
  template <typename T>
  void apply_finite_gen(int i, std::vector<T>& v) const {
    const int n = 2 * g();
    if (i < 1 || i > g()) throw internal_error("finite generator index out of range");
    std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
    if (i < g())
      std::swap(v[static_cast<std::size_t>(n - i - 1)],
                v[static_cast<std::size_t>(n - i)]);
  }

  template <typename T>
  std::vector<T> dominant_rep(std::vector<T> v) const {
    bool moved = true;
    int guard = 0;
    while (moved) {
      moved = false;
      for (int i = 1; i <= g(); ++i) {
        if (simple_root_pairing(i, v) < T{0}) {
          apply_finite_gen(i, v);
          moved = true;
        }
      }
      if (++guard > 1 << 22) throw internal_error("dominant_rep does not terminate");
    }
    return v;
  }

  std::vector<Coweight> w0_orbit(const Coweight& lambda) const {
    validate_coweight(lambda);
    std::vector<Coweight> orbit{lambda};
    std::deque<Coweight> queue{lambda};
    while (!queue.empty()) {
      Coweight v = queue.front();
      queue.pop_front();
      for (int i = 1; i <= g(); ++i) {
        Coweight u = v;
        apply_finite_gen(i, u);
        if (std::find(orbit.begin(), orbit.end(), u) == orbit.end()) {
          orbit.push_back(u);
          queue.push_back(u);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
  }

  // Coefficients of d in the simple coroot basis; d must have no central
  // component (guaranteed when comparing classes of equal kappa).
  std::vector<Rat> coroot_coefficients(const std::vector<Rat>& d) const {
    const int n = 2 * g();
    if (static_cast<int>(d.size()) != n)
      throw lattice_error("vector has wrong length");
    if (d[0] + d[static_cast<std::size_t>(n - 1)] != Rat(0))
      throw lattice_error("vector has a nonzero central component");
    std::vector<Rat> coeff(static_cast<std::size_t>(g()));
    Rat prefix(0);
    for (int i = 1; i <= g(); ++i) {
      prefix += d[static_cast<std::size_t>(i - 1)];
      coeff[static_cast<std::size_t>(i - 1)] = prefix;
    }
    // Verify the expansion reproduces d on all 2g coordinates.
    std::vector<Rat> check(static_cast<std::size_t>(n), Rat(0));
    for (int i = 1; i <= g(); ++i) {
      const Rat c = coeff[static_cast<std::size_t>(i - 1)];
      const auto& v = simple_coroots_[static_cast<std::size_t>(i - 1)];
      for (int k = 0; k < n; ++k)
        check[static_cast<std::size_t>(k)] += c * Rat(v[static_cast<std::size_t>(k)]);
    }
    for (int k = 0; k < n; ++k)
      if (check[static_cast<std::size_t>(k)] != d[static_cast<std::size_t>(k)])
        throw lattice_error("vector lies outside the coroot lattice span");
    return coeff;
  }

  const std::vector<std::vector<int>>& simple_coroots() const {
    return simple_coroots_;
  }

  // All W_a elements of length <= cap, sorted by (length, window).
  const std::vector<AffSimPerm>& ball_elements() const { return ball_sorted_; }

  int min_left_descent(const AffSimPerm& w) const {
    for (int i = 0; i < n_affine_gens(); ++i)
      if (w.left_descent(i)) return i;
    return -1;
  }

  int min_right_descent(const AffSimPerm& w) const {
    for (int i = 0; i < n_affine_gens(); ++i)
      if (w.right_descent(i)) return i;
    return -1;
  }

 private:
  static std::uint32_t next_id() {
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1);
  }

  void require_in_ball(const AffSimPerm& p) const {
    if (ball_.find(wa_part(p)) == ball_.end())
      throw cap_exceeded("element lies outside the materialized ball (cap " +
                         std::to_string(cap_) + ")");
  }

  void build_ball() {
    const AffSimPerm e = AffSimPerm::identity(g());
    ball_.emplace(e, 0);
    std::deque<AffSimPerm> frontier{e};
    int depth = 0;
    while (depth < cap_ && !frontier.empty()) {
      std::deque<AffSimPerm> next;
      for (const AffSimPerm& w : frontier) {
        for (const AffSimPerm& s : gens_) {
          AffSimPerm ws = w.compose(s);
          if (ball_.emplace(ws, depth + 1).second) next.push_back(std::move(ws));
        }
      }
      frontier.swap(next);
      ++depth;
    }
    ball_sorted_.reserve(ball_.size());
    for (const auto& kv : ball_) ball_sorted_.push_back(kv.first);
    std::sort(ball_sorted_.begin(), ball_sorted_.end(),
              [this](const AffSimPerm& a, const AffSimPerm& b) {
                const int la = ball_.at(a), lb = ball_.at(b);
                if (la != lb) return la < lb;
                return a < b;
              });
  }

  bool bruhat_rec(const AffSimPerm& v, int lv, const AffSimPerm& w, int lw) const {
    if (lv > lw) return false;
    if (lv == lw) return v == w;
    const int i = min_left_descent(w);
    const AffSimPerm& s = gens_[static_cast<std::size_t>(i)];
    const AffSimPerm sw = s.compose(w);
    if (v.left_descent(i)) return bruhat_rec(s.compose(v), lv - 1, sw, lw - 1);
    return bruhat_rec(v, lv, sw, lw - 1);
  }

  std::uint32_t id_;
  std::vector<AffSimPerm> gens_;
  AffSimPerm tau_;
  AffSimPerm tau_inv_;
  Coweight mu_;
  std::vector<int> finite_gens_;
  std::vector<std::pair<int, int>> pos_pairs_;
  std::vector<std::vector<int>> simple_coroots_;
  SigmaAction sigma_;
  int cap_;
  std::unordered_map<AffSimPerm, int, AffSimPermHash> ball_;
  std::vector<AffSimPerm> ball_sorted_;
};

// (length, lex-least word, omega) sort used for all deterministic outputs.
inline bool word_order_less(const GroupCtx& ctx, const Elt& a, const Elt& b) {
  const int la = ctx.length_unbounded(a.perm), lb = ctx.length_unbounded(b.perm);
  if (la != lb) return la < lb;
  const Word wa = ctx.reduced_word_unbounded(a.perm);
  const Word wb = ctx.reduced_word_unbounded(b.perm);
  if (wa.letters != wb.letters) return wa.letters < wb.letters;
  return wa.omega < wb.omega;
}

inline void sort_elements(const GroupCtx& ctx, std::vector<Elt>& v) {
  std::sort(v.begin(), v.end(), [&ctx](const Elt& a, const Elt& b) {
    return word_order_less(ctx, a, b);
  });
}

// "s0 s1 tau" style rendering of the lex-least reduced word.
inline std::string word_label(const Word& w) {
  std::string out;
  for (int i : w.letters) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(i);
  }
  if (w.omega != 0) {
    if (!out.empty()) out += ' ';
    out += "tau";
    if (w.omega != 1) out += '^' + std::to_string(w.omega);
  }
  if (out.empty()) out = "e";
  return out;
}

inline std::string element_label(const GroupCtx& ctx, const Elt& e) {
  return word_label(ctx.reduced_word_unbounded(e.perm));
}

}  // namespace strata
