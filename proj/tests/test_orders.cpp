#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strata/gsp4_reference.hpp"
#include "strata/orders.hpp"
#include "strata/siegel_model.hpp"

using namespace strata;

namespace {

std::vector<std::pair<std::string, std::string>> cover_labels(const Poset& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [lo, hi] : p.covers)
    out.emplace_back(p.nodes[static_cast<std::size_t>(lo)].label,
                     p.nodes[static_cast<std::size_t>(hi)].label);
  std::sort(out.begin(), out.end());
  return out;
}

struct Fixture {
  std::shared_ptr<GroupCtx> ctx = gsp_context(2);
  AdmissibleSet adm = admissible_set(*ctx, ctx->mu());
  Parahoric parahoric(const std::vector<int>& J_list) const {
    std::set<int> J(J_list.begin(), J_list.end());
    return Parahoric(*ctx, level_to_parahoric_gens(2, SiegelLevel{J}));
  }
};

}  // namespace

TEST_CASE("ksigma order examples at Klingen level") {
  Fixture f;
  Parahoric K = f.parahoric({0, 1});
  const Elt s0tau = f.ctx->word_to_elt({{0}, 1});
  const Elt s12tau = f.ctx->word_to_elt({{1, 2}, 1});
  CHECK(ksigma_leq(*f.ctx, K, s0tau, s12tau));       // via conjugation by s2
  CHECK_FALSE(f.ctx->bruhat_leq(s0tau, s12tau));     // strictly finer than Bruhat
  CHECK(ksigma_leq(*f.ctx, K, s0tau, s0tau));        // reflexive
  CHECK_FALSE(ksigma_leq(*f.ctx, K, s12tau, s0tau));
  CHECK_THROWS_AS(ksigma_leq(*f.ctx, K, f.ctx->word_to_elt({{2}, 1}), s0tau),
                  membership_error);
}

TEST_CASE("Bruhat implies ksigma on every level") {
  Fixture f;
  for (const auto& t : gsp4_reference::levels()) {
    Parahoric K = f.parahoric(t.J);
    const std::vector<Elt> ekor = ekor_set(*f.ctx, f.adm, K);
    for (const Elt& a : ekor)
      for (const Elt& b : ekor)
        if (f.ctx->bruhat_leq(a, b)) CHECK(ksigma_leq(*f.ctx, K, a, b));
  }
}

TEST_CASE("EKOR closure posets match the reference diagrams") {
  Fixture f;
  for (const auto& t : gsp4_reference::levels()) {
    Parahoric K = f.parahoric(t.J);
    const Poset p = ekor_poset(*f.ctx, f.adm, K);
    auto expected = t.ekor_covers;
    std::sort(expected.begin(), expected.end());
    CHECK(cover_labels(p) == expected);
    // Unique minimum tau; maximal elements are the translations in ^K W~.
    const auto mins = minimal_elements(p);
    REQUIRE(mins.size() == 1);
    CHECK(p.nodes[static_cast<std::size_t>(mins[0])].label == "tau");
    std::vector<std::string> maxima;
    for (int i : maximal_elements(p))
      maxima.push_back(p.nodes[static_cast<std::size_t>(i)].label);
    std::sort(maxima.begin(), maxima.end());
    auto expected_max = t.ekor_maximals;
    std::sort(expected_max.begin(), expected_max.end());
    CHECK(maxima == expected_max);
    for (const std::string& m : maxima) {
      const bool is_translation =
          std::find(gsp4_reference::maximal_translations().begin(),
                    gsp4_reference::maximal_translations().end(),
                    m) != gsp4_reference::maximal_translations().end();
      CHECK(is_translation);
    }
  }
}

TEST_CASE("KR closure posets match the reference diagrams") {
  Fixture f;
  for (const auto& t : gsp4_reference::levels()) {
    Parahoric K = f.parahoric(t.J);
    const Poset p = bruhat_poset(*f.ctx, f.adm, K);
    auto expected = t.kr_covers;
    std::sort(expected.begin(), expected.end());
    CHECK(cover_labels(p) == expected);
    // KR dimensions are the lengths of the ordinary representatives.
    for (const auto& n : p.nodes)
      CHECK(n.dim ==
            f.ctx->length_unbounded(max_section_rep(*f.ctx, K, n.elt).perm));
  }
}

TEST_CASE("at Iwahori level the EKOR order is the Bruhat order") {
  Fixture f;
  Parahoric iwahori = f.parahoric({0, 1, 2});
  const Poset ekor = ekor_poset(*f.ctx, f.adm, iwahori);
  const Poset kr = bruhat_poset(*f.ctx, f.adm, iwahori);
  CHECK(ekor.covers == kr.covers);
  for (std::size_t i = 0; i < ekor.nodes.size(); ++i)
    CHECK(ekor.nodes[i].elt == kr.nodes[i].elt);
  CHECK(ekor.leq == kr.leq);
}

TEST_CASE("ksigma regularity on the twisted context") {
  // Conjugation-by-tau sigma: the order axioms still hold.
  auto ctx = gsp_context_tau_twisted(2);
  const AdmissibleSet adm = admissible_set(*ctx, ctx->mu());
  Parahoric K(*ctx, {0, 2});
  const std::vector<Elt> ekor = ekor_set(*ctx, adm, K);
  for (const Elt& a : ekor) CHECK(ksigma_leq(*ctx, K, a, a));
  for (const Elt& a : ekor)
    for (const Elt& b : ekor)
      if (ksigma_leq(*ctx, K, a, b) && ksigma_leq(*ctx, K, b, a)) CHECK(a == b);
  CHECK_NOTHROW(ekor_poset(*ctx, adm, K));  // make_poset validates the axioms
}

TEST_CASE("zip order on a finite Weyl group") {
  Fixture f;
  Parahoric W = f.parahoric({0});  // W_K = <s1, s2>, finite C_2
  auto id_twist = [](int i) { return i; };

  // J = all generators: ^J W = {e}.
  const Poset all = zip_order(*f.ctx, W, {1, 2}, id_twist);
  CHECK(all.nodes.size() == 1);
  CHECK(all.covers.empty());

  // J empty: ^J W = W and the order refines length with minimum e.
  const Poset free = zip_order(*f.ctx, W, {}, id_twist);
  CHECK(free.nodes.size() == 8);
  const auto mins = minimal_elements(free);
  REQUIRE(mins.size() == 1);
  CHECK(free.nodes[static_cast<std::size_t>(mins[0])].elt == f.ctx->identity());
  for (const auto& [lo, hi] : free.covers)
    CHECK(f.ctx->length_unbounded(free.nodes[static_cast<std::size_t>(lo)].elt.perm) <
          f.ctx->length_unbounded(free.nodes[static_cast<std::size_t>(hi)].elt.perm));

  // |^J W| = 4 for J = {s1}.
  const Poset half = zip_order(*f.ctx, W, {1}, id_twist);
  CHECK(half.nodes.size() == 4);
  // Dimension labels step by l(w) on top of the parabolic offset.
  for (const auto& [lo, hi] : half.covers)
    CHECK(half.nodes[static_cast<std::size_t>(lo)].dim <
          half.nodes[static_cast<std::size_t>(hi)].dim);
}

TEST_CASE("DOT and JSON poset serialization") {
  Fixture f;
  Parahoric K = f.parahoric({0, 1});
  const Poset p = ekor_poset(*f.ctx, f.adm, K);
  const std::string dot = to_dot(p);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("tau") != std::string::npos);
  CHECK(dot == to_dot(ekor_poset(*f.ctx, f.adm, K)));  // deterministic
  const std::string js = to_json(p);
  CHECK(js.find("\"nodes\"") != std::string::npos);
  CHECK(js.find("\"covers\"") != std::string::npos);

  // Two-node chain renders a single edge.
  std::vector<Poset::Node> nodes;
  nodes.push_back({f.ctx->identity(), "e", 0, std::nullopt});
  nodes.push_back({f.ctx->generator(1), "s1", 1, std::nullopt});
  const Poset chain = make_poset(std::move(nodes), [&](const Elt& a, const Elt& b) {
    return f.ctx->bruhat_leq_nocap(a, b);
  });
  CHECK(chain.covers == std::vector<std::pair<int, int>>{{0, 1}});
  const Poset empty = make_poset({}, [](const Elt&, const Elt&) { return true; });
  CHECK(to_dot(empty).find("digraph") != std::string::npos);
  CHECK(to_json(empty) == "{\"nodes\":[],\"covers\":[]}");
}

TEST_CASE("covers regenerate the relation by transitive closure") {
  Fixture f;
  for (const auto& t : gsp4_reference::levels()) {
    Parahoric K = f.parahoric(t.J);
    const Poset p = ekor_poset(*f.ctx, f.adm, K);
    const std::size_t n = p.nodes.size();
    std::vector<std::vector<bool>> closure(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) closure[i][i] = true;
    for (const auto& [lo, hi] : p.covers)
      closure[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (closure[i][k] && closure[k][j]) closure[i][j] = true;
    CHECK(closure == p.leq);
  }
}
