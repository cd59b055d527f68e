#pragma once

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "strata/affweyl.hpp"
#include "strata/error.hpp"
#include "strata/parabolic.hpp"

namespace strata {

// The mu-admissible set: all w with w <= t^{mu'} for some mu' in the
// W_0-orbit of mu, together with the maximal translations themselves.
struct AdmissibleSet {
  Coweight mu;
  std::vector<Elt> elements;  // sorted by (length, word)
  std::vector<Elt> maximals;  // the orbit translations t^{mu'}
  std::uint32_t ctx_id = 0;

  bool contains(const Elt& x) const {
    return std::find(elements.begin(), elements.end(), x) != elements.end();
  }
};

// Subword closure construction: enumerate all subwords of one reduced
// word per maximal translation. Every subword product is Bruhat-below
// its word, so the result is downward closed by construction.
inline AdmissibleSet admissible_set(const GroupCtx& ctx, const Coweight& mu) {
  ctx.validate_coweight(mu);
  if (!ctx.is_dominant(mu))
    throw lattice_error("admissible_set requires a dominant cocharacter");
  AdmissibleSet adm;
  adm.mu = mu;
  adm.ctx_id = ctx.id();
  std::unordered_set<Elt, EltHash> seen;
  for (const Coweight& m : ctx.w0_orbit(mu)) {
    const Elt t = ctx.translation(m);
    adm.maximals.push_back(t);
    const Word word = ctx.reduced_word(t);  // cap-exceeded if l(t^mu) > cap
    const std::size_t n = word.letters.size();
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
      Word sub;
      sub.omega = word.omega;
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) sub.letters.push_back(word.letters[k]);
      seen.insert(ctx.word_to_elt(sub));
    }
  }
  adm.elements.assign(seen.begin(), seen.end());
  sort_elements(ctx, adm.elements);
  sort_elements(ctx, adm.maximals);
  return adm;
}

// Independent route: filter the whole materialized ball of the coset
// W_a tau^{kappa(t^mu)} through the defining Bruhat inequalities.
inline std::vector<Elt> admissible_by_ball_filter(const GroupCtx& ctx,
                                                  const Coweight& mu) {
  ctx.validate_coweight(mu);
  if (!ctx.is_dominant(mu))
    throw lattice_error("admissible_by_ball_filter requires a dominant cocharacter");
  std::vector<Elt> maximals;
  for (const Coweight& m : ctx.w0_orbit(mu)) maximals.push_back(ctx.translation(m));
  const int c = ctx.translation(mu).perm.kappa();
  const Elt shift = ctx.omega_power(c);
  std::vector<Elt> out;
  for (const AffSimPerm& wa : ctx.ball_elements()) {
    const Elt x = ctx.multiply(ctx.make(wa), shift);
    for (const Elt& t : maximals) {
      if (ctx.bruhat_leq_nocap(x, t)) {
        out.push_back(x);
        break;
      }
    }
  }
  sort_elements(ctx, out);
  return out;
}

// ^K Adm: the admissible elements that are minimal in their left
// W_K-coset.
inline std::vector<Elt> ekor_set(const GroupCtx& ctx, const AdmissibleSet& adm,
                                 const Parahoric& K) {
  std::vector<Elt> out;
  for (const Elt& x : adm.elements)
    if (in_min_left_cosets(ctx, K, x)) out.push_back(x);
  return out;  // adm.elements is already sorted
}

// The same set computed through double cosets, as Adm^K intersect ^K W~ =
// { ^K(x u) : x in Adm, u in W_K }. Agreement with ekor_set is a nontrivial
// coincidence of the two index sets; the test suites assert it.
inline std::vector<Elt> ekor_set_via_double_cosets(const GroupCtx& ctx,
                                                   const AdmissibleSet& adm,
                                                   const Parahoric& K) {
  std::unordered_set<Elt, EltHash> seen;
  for (const Elt& x : adm.elements)
    for (const Elt& u : K.elements())
      seen.insert(min_in_left_coset(ctx, K, ctx.multiply(x, u)));
  std::vector<Elt> out(seen.begin(), seen.end());
  sort_elements(ctx, out);
  return out;
}

// Adm_K: minimal double coset representatives of W_K Adm W_K.
inline std::vector<Elt> kr_set(const GroupCtx& ctx, const AdmissibleSet& adm,
                               const Parahoric& K) {
  std::unordered_set<Elt, EltHash> seen;
  std::vector<Elt> out;
  for (const Elt& x : adm.elements) {
    Elt rep = min_double_rep(ctx, K, x);
    if (seen.insert(rep).second) out.push_back(rep);
  }
  sort_elements(ctx, out);
  return out;
}

// Projection of an EKOR index to its KR type.
inline Elt ekor_to_kr(const GroupCtx& ctx, const AdmissibleSet& adm,
                      const Parahoric& K, const Elt& x) {
  ctx.check(x);
  if (!adm.contains(x) || !in_min_left_cosets(ctx, K, x))
    throw membership_error("ekor_to_kr requires an element of ^K Adm");
  return min_double_rep(ctx, K, x);
}

// Fiber of ^K Adm over a KR type w, computed as a filter and validated
// against the parametrization w * ^{J_w} W_K.
inline std::vector<Elt> kr_fiber(const GroupCtx& ctx, const AdmissibleSet& adm,
                                 const Parahoric& K, const Elt& w) {
  ctx.check(w);
  if (!is_min_double_rep(ctx, K, w) || !adm.contains(w))
    throw membership_error("kr_fiber requires a KR type (minimal admissible double coset rep)");
  std::vector<Elt> fiber;
  for (const Elt& x : ekor_set(ctx, adm, K))
    if (min_double_rep(ctx, K, x) == w) fiber.push_back(x);
  std::vector<Elt> param;
  for (const Elt& v : jw_min_reps(ctx, K, type_Jw(ctx, K, w)))
    param.push_back(ctx.multiply(w, v));
  sort_elements(ctx, param);
  if (param != fiber)
    throw internal_error("KR fiber disagrees with the w * ^{J_w} W_K parametrization");
  return fiber;
}

// The two sections of the projection ^K Adm ->> Adm_K: the w-ordinary
// representative ^K w_K (fiber maximum) and the w-superspecial
// representative x_w = w (fiber minimum).
inline Elt ordinary_section(const GroupCtx& ctx, const AdmissibleSet& adm,
                            const Parahoric& K, const Elt& w) {
  ctx.check(w);
  if (!is_min_double_rep(ctx, K, w) || !adm.contains(w))
    throw membership_error("ordinary_section requires a KR type");
  const Elt rep = max_section_rep(ctx, K, w);
  if (!adm.contains(rep))
    throw internal_error("ordinary representative escapes the admissible set");
  return rep;
}

inline Elt superspecial_section(const GroupCtx& ctx, const AdmissibleSet& adm,
                                const Parahoric& K, const Elt& w) {
  ctx.check(w);
  if (!is_min_double_rep(ctx, K, w) || !adm.contains(w))
    throw membership_error("superspecial_section requires a KR type");
  return w;
}

}  // namespace strata
