#pragma once

#include <optional>
#include <vector>

#include "strata/admissible.hpp"
#include "strata/newton.hpp"
#include "strata/siegel_model.hpp"

namespace strata {

// One EKOR index with its geometric decorations: dimension l(x), p-rank,
// KR type, straightness flag and Newton class.
struct StratumRecord {
  Elt elt;
  int dim = 0;
  std::optional<int> p_rank;
  Elt kr_type;
  bool sigma_straight = false;
  std::optional<BClass> newton;
};

inline std::vector<StratumRecord> decorate(const GroupCtx& ctx,
                                           const AdmissibleSet& adm,
                                           const Parahoric& K) {
  const std::vector<BClass> classes = b_set(ctx, adm, K);
  std::vector<StratumRecord> records;
  for (const Elt& x : ekor_set(ctx, adm, K)) {
    StratumRecord r{x, ctx.length(x), p_rank(x), min_double_rep(ctx, K, x),
                    is_sigma_straight(ctx, x), std::nullopt};
    const NewtonPoint nu = newton_point(ctx, x);
    for (const BClass& c : classes)
      if (c.nu == nu) r.newton = c;
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace strata
