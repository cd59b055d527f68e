#pragma once

#include <utility>
#include <vector>

#include "strata/admissible.hpp"
#include "strata/orders.hpp"
#include "strata/parabolic.hpp"

namespace strata {

// Weyl-combinatorial shadow of the algebraic zip datum attached to a KR
// type w: the type J_w, its image under sigma' = sigma o Ad(w), and the
// EKOR fiber w * ^{J_w} W_K.
struct ZipDatum {
  Elt w;
  std::vector<int> Jw;
  std::vector<int> sigma_prime_Jw;
  std::vector<Elt> fiber;
};

inline ZipDatum zip_datum(const GroupCtx& ctx, const AdmissibleSet& adm,
                          const Parahoric& K, const Elt& w) {
  ctx.check(w);
  if (!is_min_double_rep(ctx, K, w) || !adm.contains(w))
    throw membership_error("zip_datum requires a KR type");
  ZipDatum z{w, type_Jw(ctx, K, w), {}, {}};
  const Elt winv = ctx.invert(w);
  for (int s : z.Jw) {
    const Elt conj =
        ctx.sigma_apply(ctx.multiply(ctx.multiply(w, ctx.generator(s)), winv));
    int target = -1;
    for (int t : K.gens())
      if (conj == ctx.generator(t)) target = t;
    if (target < 0)
      throw internal_error("sigma' does not map J_w into the parahoric generators");
    z.sigma_prime_Jw.push_back(target);
  }
  z.fiber = kr_fiber(ctx, adm, K, w);  // validates the parametrization
  return z;
}

// Orbit closure order inside one KR fiber, via the zip order on
// ^{J_w} W_K twisted by sigma' and transported along x -> w x. Node
// dimensions are the EKOR dimensions l(w) + l(x) = l(wx). The result is
// checked against the restriction of the ambient <=_{K,sigma} order.
inline Poset eo_poset_in_fiber(const GroupCtx& ctx, const Parahoric& K,
                               const ZipDatum& z) {
  const Elt winv = ctx.invert(z.w);
  GenTwist twist = [&ctx, &K, &z, &winv](int s) {
    const Elt conj =
        ctx.sigma_apply(ctx.multiply(ctx.multiply(z.w, ctx.generator(s)), winv));
    for (int t : K.gens())
      if (conj == ctx.generator(t)) return t;
    throw internal_error("twist applied outside J_w");
  };
  const Poset inner = zip_order(ctx, K, z.Jw, twist);
  std::vector<Poset::Node> nodes;
  for (const Poset::Node& n : inner.nodes) {
    const Elt x = ctx.multiply(z.w, n.elt);
    nodes.push_back(
        Poset::Node{x, element_label(ctx, x), ctx.length_unbounded(x.perm), p_rank(x)});
  }
  Poset p;
  p.nodes = std::move(nodes);
  p.leq = inner.leq;
  p.covers = inner.covers;
  // Cross-check: the fiber order must agree with the ambient EKOR order.
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    for (std::size_t j = 0; j < p.nodes.size(); ++j)
      if (p.leq[i][j] != ksigma_leq(ctx, K, p.nodes[i].elt, p.nodes[j].elt))
        throw internal_error("fiber zip order disagrees with <=_{K,sigma}");
  return p;
}

// (ordinary, superspecial) = (max, min) of the fiber order; these are
// the two sections ^K w_K and x_w of the KR projection.
inline std::pair<Elt, Elt> ordinary_and_superspecial(const GroupCtx& ctx,
                                                     const Parahoric& K,
                                                     const ZipDatum& z) {
  const Poset p = eo_poset_in_fiber(ctx, K, z);
  const std::vector<int> maxs = maximal_elements(p);
  const std::vector<int> mins = minimal_elements(p);
  if (maxs.size() != 1 || mins.size() != 1)
    throw internal_error("fiber order lacks unique extremes");
  const Elt ordinary = p.nodes[static_cast<std::size_t>(maxs[0])].elt;
  const Elt superspecial = p.nodes[static_cast<std::size_t>(mins[0])].elt;
  if (!(ordinary == max_section_rep(ctx, K, z.w)) || !(superspecial == z.w))
    throw internal_error("fiber extremes disagree with the two sections");
  return {ordinary, superspecial};
}

}  // namespace strata
