#pragma once

#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "strata/affweyl.hpp"
#include "strata/error.hpp"
#include "strata/perm.hpp"

namespace strata {

// Level structure for GSp_{2g}: a nonempty subset J of {0..g}. The
// attached parahoric is generated by the complementary reflections
// {s_i : i in {0..g} \ J}.
struct SiegelLevel {
  std::set<int> J;

  explicit SiegelLevel(std::set<int> indices) : J(std::move(indices)) {
    if (J.empty()) throw lattice_error("level subset must be nonempty");
  }
};

namespace siegel {

inline int default_cap(int g) { return g * (g + 1) / 2 + 2; }

// Generators of the extended affine Weyl group of GSp_{2g} as affine
// similitude permutations:
//   s_i = (i,i+1)(2g-i,2g+1-i) for 1 <= i <= g-1,
//   s_g = (g,g+1),
//   s_0 = translation by (-1,0,...,0,1) followed by (1,2g),
//   tau(i) = i + g.
inline std::vector<int> gen_window(int g, int i) {
  const int n = 2 * g;
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) w[static_cast<std::size_t>(k - 1)] = k;
  if (i == 0) {
    w[0] = 0;
    w[static_cast<std::size_t>(n - 1)] = n + 1;
  } else if (i == g) {
    std::swap(w[static_cast<std::size_t>(g - 1)], w[static_cast<std::size_t>(g)]);
  } else {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    std::swap(w[static_cast<std::size_t>(n - i - 1)], w[static_cast<std::size_t>(n - i)]);
  }
  return w;
}

inline std::vector<int> tau_window(int g) {
  const int n = 2 * g;
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) w[static_cast<std::size_t>(k - 1)] = k + g;
  return w;
}

// Positive roots as coordinate-difference functionals u_i - u_j on the
// similitude lattice, one representative per functional (pairs (i,j) and
// (2g+1-j,2g+1-i) restrict to the same functional and are deduplicated;
// the self-paired i+j = 2g+1 pairs are the long roots).
inline std::vector<std::pair<int, int>> positive_root_pairs(int g) {
  const int n = 2 * g;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (i + j <= n + 1) pairs.emplace_back(i, j);
  return pairs;
}

// Simple coroots in window coordinates: for i < g the short coroot
// e_i - e_{i+1} + e_{2g-i} - e_{2g+1-i}, for i = g the long-root coroot
// e_g - e_{g+1}.
inline std::vector<std::vector<int>> simple_coroot_vectors(int g) {
  const int n = 2 * g;
  std::vector<std::vector<int>> coroots;
  for (int i = 1; i <= g; ++i) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    v[static_cast<std::size_t>(i)] = -1;
    if (i < g) {
      v[static_cast<std::size_t>(n - i - 1)] += 1;
      v[static_cast<std::size_t>(n - i)] -= 1;
    }
    coroots.push_back(std::move(v));
  }
  return coroots;
}

inline Coweight minuscule_mu(int g) {
  Coweight mu(static_cast<std::size_t>(2 * g), 0);
  for (int i = 0; i < g; ++i) mu[static_cast<std::size_t>(i)] = 1;
  return mu;
}

}  // namespace siegel

// Context for the split group GSp_{2g} with the Siegel cocharacter
// mu = (1,...,1,0,...,0) and trivial Frobenius action on the diagram.
inline std::shared_ptr<GroupCtx> gsp_context(int g, int length_cap = -1) {
  if (g < 1) throw lattice_error("genus must be at least 1");
  if (length_cap < 0) length_cap = siegel::default_cap(g);
  std::vector<AffSimPerm> gens;
  for (int i = 0; i <= g; ++i) gens.emplace_back(siegel::gen_window(g, i));
  std::vector<int> finite;
  for (int i = 1; i <= g; ++i) finite.push_back(i);
  auto ctx = std::make_shared<GroupCtx>(
      std::move(gens), AffSimPerm(siegel::tau_window(g)), siegel::minuscule_mu(g),
      std::move(finite), siegel::positive_root_pairs(g),
      siegel::simple_coroot_vectors(g), SigmaAction::identity(g + 1), length_cap);
  // Pairing self-test: <mu, 2rho> must equal g(g+1)/2.
  std::vector<int> mu_int(ctx->mu().begin(), ctx->mu().end());
  if (ctx->two_rho_pairing(mu_int) != g * (g + 1) / 2)
    throw internal_error("positive root data fails the <mu,2rho> self-test");
  return ctx;
}

// A gsp context whose diagram automorphism is conjugation by tau (an
// order-2 automorphism fixing Omega pointwise). The split group has
// trivial sigma; this variant exists to exercise sigma-dependent code.
inline std::shared_ptr<GroupCtx> gsp_context_tau_twisted(int g, int length_cap = -1) {
  if (g < 1) throw lattice_error("genus must be at least 1");
  if (length_cap < 0) length_cap = siegel::default_cap(g);
  std::vector<AffSimPerm> gens;
  for (int i = 0; i <= g; ++i) gens.emplace_back(siegel::gen_window(g, i));
  std::vector<int> finite;
  for (int i = 1; i <= g; ++i) finite.push_back(i);
  AffSimPerm tau(siegel::tau_window(g));
  SigmaAction sigma;
  sigma.gen_map.resize(static_cast<std::size_t>(g + 1));
  for (int i = 0; i <= g; ++i) {
    AffSimPerm image = tau.compose(gens[static_cast<std::size_t>(i)]).compose(tau.inverse());
    int target = -1;
    for (int j = 0; j <= g; ++j)
      if (image == gens[static_cast<std::size_t>(j)]) target = j;
    if (target < 0) throw internal_error("tau conjugation does not permute the generators");
    sigma.gen_map[static_cast<std::size_t>(i)] = target;
  }
  sigma.window_conj = tau;
  sigma.order = 2;
  return std::make_shared<GroupCtx>(
      std::move(gens), std::move(tau), siegel::minuscule_mu(g), std::move(finite),
      siegel::positive_root_pairs(g), siegel::simple_coroot_vectors(g),
      std::move(sigma), length_cap);
}

// Number of etale fixed points of the affine permutation in one period.
// Meaningful on admissible elements, where it computes the p-rank of the
// corresponding stratum.
inline int p_rank(const AffSimPerm& x) { return x.fixed_points(); }

inline int p_rank(const Elt& x) { return p_rank(x.perm); }

// Generator indices of the parahoric attached to a level subset J:
// the complement of J inside {0..g}.
inline std::vector<int> level_to_parahoric_gens(int g, const SiegelLevel& level) {
  for (int j : level.J)
    if (j < 0 || j > g) throw lattice_error("level index outside 0..g");
  std::vector<int> gens;
  for (int i = 0; i <= g; ++i)
    if (level.J.count(i) == 0) gens.push_back(i);
  return gens;
}

// Number of irreducible components of the moduli space at level J:
// 1 for |J| = 1, otherwise prod_j (i_j - i_{j-1} + 1).
inline long long component_count(const SiegelLevel& level) {
  if (level.J.size() <= 1) return 1;
  long long prod = 1;
  int prev = -1;
  bool first = true;
  for (int i : level.J) {
    if (!first) prod *= (i - prev + 1);
    prev = i;
    first = false;
  }
  return prod;
}

}  // namespace strata
