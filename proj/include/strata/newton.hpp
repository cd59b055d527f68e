#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "strata/admissible.hpp"
#include "strata/affweyl.hpp"
#include "strata/error.hpp"
#include "strata/rational.hpp"

namespace strata {

// Dominant rational Newton cocharacter nu(w).
struct NewtonPoint {
  std::vector<Rat> nu;

  friend bool operator==(const NewtonPoint& a, const NewtonPoint& b) {
    return a.nu == b.nu;
  }
  friend bool operator!=(const NewtonPoint& a, const NewtonPoint& b) {
    return !(a == b);
  }
  friend bool operator<(const NewtonPoint& a, const NewtonPoint& b) {
    return std::lexicographical_compare(a.nu.begin(), a.nu.end(), b.nu.begin(),
                                        b.nu.end());
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (i) s += ",";
      s += nu[i].str();
    }
    return s + ")";
  }
};

// nu(w) = dominant representative of lambda/n, where the n-fold
// sigma-twisted power w sigma(w) ... sigma^{n-1}(w) is the translation
// t^lambda. Needs no length ball: only window arithmetic.
inline NewtonPoint newton_point(const GroupCtx& ctx, const Elt& w) {
  ctx.check(w);
  AffSimPerm product = w.perm;
  AffSimPerm twisted = w.perm;
  const int bound = 2 * ctx.sigma().order *
                    (2 * ctx.g()) * (2 * ctx.g()) * (2 * ctx.g());
  for (int n = 1; n <= bound; ++n) {
    if (n % ctx.sigma().order == 0 && product.is_translation()) {
      const std::vector<int> lambda = product.translation_coweight();
      std::vector<Rat> nu(lambda.size());
      for (std::size_t i = 0; i < lambda.size(); ++i)
        nu[i] = Rat(lambda[i], n);
      return NewtonPoint{ctx.dominant_rep(std::move(nu))};
    }
    twisted = ctx.sigma_apply_perm(twisted);
    product = product.compose(twisted);
  }
  throw internal_error("twisted powers never reach a translation");
}

// Straightness through the Newton point: l(w) = <nu(w), 2 rho>.
inline bool is_sigma_straight(const GroupCtx& ctx, const Elt& w) {
  const int len = ctx.length(w);
  const NewtonPoint nu = newton_point(ctx, w);
  return Rat(len) == ctx.two_rho_pairing(nu.nu);
}

// One sigma-conjugacy class with kappa = mu^natural and nu <= mu-bar,
// tagged with a sigma-straight representative inside ^K Adm.
struct BClass {
  NewtonPoint nu;
  int kappa = 0;
  bool basic = false;
  Elt straight_rep;
  int leaf_dim = 0;
};

inline bool is_central(const GroupCtx& ctx, const NewtonPoint& nu) {
  for (int i = 1; i <= ctx.g(); ++i)
    if (ctx.simple_root_pairing(i, nu.nu) != Rat(0)) return false;
  return true;
}

// Enumerate B(G,{mu}) through the sigma-straight admissible elements;
// every class must contain a straight representative lying in ^K Adm
// (failure indicates an implementation bug, not a data condition).
inline std::vector<BClass> b_set(const GroupCtx& ctx, const AdmissibleSet& adm,
                                 const Parahoric& K) {
  std::vector<BClass> classes;
  for (const Elt& x : adm.elements) {
    if (!is_sigma_straight(ctx, x)) continue;
    const NewtonPoint nu = newton_point(ctx, x);
    BClass* found = nullptr;
    for (BClass& c : classes)
      if (c.nu == nu) found = &c;
    if (!found) {
      BClass c{nu, x.perm.kappa(), is_central(ctx, nu), x, 0};
      classes.push_back(c);
      found = &classes.back();
      found->leaf_dim = -1;
    }
    if (found->leaf_dim < 0 && in_min_left_cosets(ctx, K, x)) {
      found->straight_rep = x;
      found->leaf_dim = ctx.length(x);
    }
  }
  for (const BClass& c : classes)
    if (c.leaf_dim < 0)
      throw internal_error("a Newton class has no straight representative in ^K Adm");
  std::sort(classes.begin(), classes.end(), [&ctx](const BClass& a, const BClass& b) {
    const Rat pa = ctx.two_rho_pairing(a.nu.nu), pb = ctx.two_rho_pairing(b.nu.nu);
    if (pa != pb) return pa < pb;
    return a.nu < b.nu;
  });
  return classes;
}

// Dominance order on B(G,{mu}): equal kappa and nu_2 - nu_1 a
// nonnegative rational combination of the positive coroots.
inline bool b_leq(const GroupCtx& ctx, const BClass& b1, const BClass& b2) {
  if (b1.kappa != b2.kappa) return false;
  std::vector<Rat> d(b2.nu.nu.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = b2.nu.nu[i] - b1.nu.nu[i];
  for (const Rat& c : ctx.coroot_coefficients(d))
    if (c < Rat(0)) return false;
  return true;
}

// Central leaf dimension attached to a straight element: l(x), which
// equals <nu(x), 2 rho> on straight elements.
inline int leaf_dimension(const GroupCtx& ctx, const Elt& x) {
  if (!is_sigma_straight(ctx, x))
    throw membership_error("leaf_dimension requires a sigma-straight element");
  return ctx.length(x);
}

inline int leaf_dimension(const BClass& b) { return b.leaf_dim; }

// Coefficient report for the Hodge-Newton criterion of one non-basic class.
struct HnClassReport {
  NewtonPoint nu;
  std::vector<Rat> coefficients;  // of mu_dom - nu in the simple coroot basis
  bool has_zero_orbit = false;
};

struct HnReport {
  bool decomposable = true;
  std::vector<HnClassReport> classes;  // non-basic classes only
};

// Criterion: for every non-basic class write mu_dom - nu in the simple
// coroot basis and require a sigma-orbit of simple coroots on which all
// coefficients vanish. Validated on the split Siegel data.
inline HnReport fully_hn_decomposable(const GroupCtx& ctx, const AdmissibleSet& adm) {
  // sigma-orbits of the finite simple indices 1..g (singletons when the
  // automorphism does not stabilize the finite diagram).
  std::vector<std::vector<int>> orbits;
  std::vector<bool> used(static_cast<std::size_t>(ctx.g() + 1), false);
  for (int i = 1; i <= ctx.g(); ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    std::vector<int> orbit;
    int j = i;
    while (j >= 1 && j <= ctx.g() && !used[static_cast<std::size_t>(j)]) {
      used[static_cast<std::size_t>(j)] = true;
      orbit.push_back(j);
      j = ctx.sigma_gen(j);
    }
    orbits.push_back(orbit);
  }

  std::vector<Rat> mu_rat(adm.mu.size());
  for (std::size_t i = 0; i < adm.mu.size(); ++i) mu_rat[i] = Rat(adm.mu[i]);
  mu_rat = ctx.dominant_rep(std::move(mu_rat));

  std::vector<NewtonPoint> seen;
  HnReport report;
  for (const Elt& x : adm.elements) {
    if (!is_sigma_straight(ctx, x)) continue;
    const NewtonPoint nu = newton_point(ctx, x);
    if (std::find(seen.begin(), seen.end(), nu) != seen.end()) continue;
    seen.push_back(nu);
    if (is_central(ctx, nu)) continue;
    HnClassReport cls;
    cls.nu = nu;
    std::vector<Rat> d(mu_rat.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = mu_rat[i] - nu.nu[i];
    cls.coefficients = ctx.coroot_coefficients(d);
    for (const auto& orbit : orbits) {
      bool all_zero = true;
      for (int i : orbit)
        if (cls.coefficients[static_cast<std::size_t>(i - 1)] != Rat(0))
          all_zero = false;
      if (all_zero) {
        cls.has_zero_orbit = true;
        break;
      }
    }
    report.decomposable = report.decomposable && cls.has_zero_orbit;
    report.classes.push_back(std::move(cls));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const HnClassReport& a, const HnClassReport& b) { return a.nu < b.nu; });
  return report;
}

}  // namespace strata
