#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "strata/affweyl.hpp"
#include "strata/siegel_model.hpp"

using namespace strata;

namespace {

Elt word_elt(const GroupCtx& ctx, std::initializer_list<int> letters, int omega = 1) {
  Word w;
  w.letters = letters;
  w.omega = omega;
  return ctx.word_to_elt(w);
}

// Independent Bruhat oracle: v <= w iff some subword of a fixed reduced
// word of w multiplies to v.
bool bruhat_subword_oracle(const GroupCtx& ctx, const Elt& v, const Elt& w) {
  if (v.perm.kappa() != w.perm.kappa()) return false;
  const Word ww = ctx.reduced_word(w);
  const std::size_t n = ww.letters.size();
  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    Word sub;
    sub.omega = ww.omega;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) sub.letters.push_back(ww.letters[k]);
    if (ctx.word_to_elt(sub) == v) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("generator windows match the explicit realization") {
  auto ctx = gsp_context(2);
  CHECK(ctx->generator(0).perm.window() == std::vector<int>{0, 2, 3, 5});
  CHECK(ctx->generator(1).perm.window() == std::vector<int>{2, 1, 4, 3});
  CHECK(ctx->generator(2).perm.window() == std::vector<int>{1, 3, 2, 4});
  CHECK(ctx->tau_generator().perm.window() == std::vector<int>{3, 4, 5, 6});
  for (int i = 0; i <= 2; ++i) {
    const Elt s = ctx->generator(i);
    CHECK(ctx->multiply(s, s) == ctx->identity());
  }
}

TEST_CASE("multiplication convention: tau s2 = s0 tau") {
  auto ctx = gsp_context(2);
  const Elt tau = ctx->tau_generator();
  CHECK(ctx->multiply(tau, ctx->generator(2)) == ctx->multiply(ctx->generator(0), tau));
  CHECK(ctx->multiply(tau, ctx->generator(0)) == ctx->multiply(ctx->generator(2), tau));
  CHECK(ctx->multiply(tau, ctx->generator(1)) == ctx->multiply(ctx->generator(1), tau));
  // e is a two-sided unit.
  const Elt x = word_elt(*ctx, {0, 1});
  CHECK(ctx->multiply(ctx->identity(), x) == x);
  CHECK(ctx->multiply(x, ctx->identity()) == x);
}

TEST_CASE("mixed-context multiplication is rejected") {
  auto a = gsp_context(2);
  auto b = gsp_context(2);
  CHECK_THROWS_AS(a->multiply(a->identity(), b->identity()), context_mismatch);
}

TEST_CASE("inversion") {
  auto ctx = gsp_context(2);
  const Elt tau = ctx->tau_generator();
  CHECK(ctx->multiply(ctx->invert(tau), tau) == ctx->identity());
  for (int i = 0; i <= 2; ++i)
    CHECK(ctx->invert(ctx->generator(i)) == ctx->generator(i));
  const Coweight mu = {1, 1, 0, 0};
  const Coweight neg = {-1, -1, 0, 0};
  CHECK(ctx->invert(ctx->translation(mu)) == ctx->translation(neg));
}

TEST_CASE("length and reduced words") {
  auto ctx = gsp_context(2);
  CHECK(ctx->length(ctx->tau_generator()) == 0);
  CHECK(ctx->length(ctx->generator(1)) == 1);
  const Elt x = word_elt(*ctx, {0, 1, 0});
  CHECK(ctx->length(x) == 3);
  const Word w = ctx->reduced_word(x);
  CHECK(w.letters == std::vector<int>{0, 1, 0});
  CHECK(w.omega == 1);
  CHECK(ctx->reduced_word(ctx->tau_generator()).letters.empty());
  CHECK(ctx->reduced_word(ctx->tau_generator()).omega == 1);
  CHECK(ctx->reduced_word(ctx->identity()).letters.empty());
  CHECK(ctx->reduced_word(ctx->identity()).omega == 0);
  // Every reduced word remultiplies to its element.
  for (const AffSimPerm& p : ctx->ball_elements()) {
    const Elt e = ctx->make(p);
    const Word word = ctx->reduced_word(e);
    CHECK(ctx->word_to_elt(word) == e);
    CHECK(static_cast<int>(word.letters.size()) == ctx->length(e));
  }
}

TEST_CASE("cap contract") {
  auto small = gsp_context(2, 2);
  const Elt big = word_elt(*small, {0, 1, 0});
  CHECK_THROWS_AS(small->length(big), cap_exceeded);
  CHECK_THROWS_AS(small->reduced_word(big), cap_exceeded);
  CHECK(small->length_unbounded(big.perm) == 3);
}

TEST_CASE("length is subadditive and generators shift it by one") {
  auto ctx = gsp_context(2, 6);
  std::mt19937 rng(20240811);
  const auto& ball = ctx->ball_elements();
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Elt a = ctx->make(ball[pick(rng)]);
    const Elt b = ctx->make(ball[pick(rng)]);
    const int la = ctx->length_unbounded(a.perm);
    const int lb = ctx->length_unbounded(b.perm);
    const int lab = ctx->length_unbounded(ctx->multiply(a, b).perm);
    CHECK(lab <= la + lb);
    for (int i = 0; i <= 2; ++i) {
      const int lsa = ctx->length_unbounded(ctx->multiply(ctx->generator(i), a).perm);
      CHECK(std::abs(lsa - la) == 1);
    }
  }
}

TEST_CASE("descent tests agree with the BFS ball") {
  for (int g : {1, 2, 3}) {
    auto ctx = gsp_context(g, g == 3 ? 5 : 4);
    for (const AffSimPerm& p : ctx->ball_elements()) {
      const int lp = ctx->length(ctx->make(p));
      for (int i = 0; i <= g; ++i) {
        const AffSimPerm sp = ctx->generator(i).perm.compose(p);
        const AffSimPerm ps = p.compose(ctx->generator(i).perm);
        const int lsp = ctx->length_unbounded(sp);
        const int lps = ctx->length_unbounded(ps);
        CHECK(p.left_descent(i) == (lsp < lp));
        CHECK(p.right_descent(i) == (lps < lp));
      }
    }
  }
}

TEST_CASE("bruhat order matches the subword oracle and is a partial order") {
  auto ctx = gsp_context(2, 4);
  std::vector<Elt> ball;
  for (const AffSimPerm& p : ctx->ball_elements()) ball.push_back(ctx->make(p));
  // Exhaustive check on the radius-4 ball of the tau-coset.
  const Elt tau = ctx->tau_generator();
  std::vector<Elt> coset;
  for (const Elt& e : ball) coset.push_back(ctx->multiply(e, tau));
  for (const Elt& a : coset)
    for (const Elt& b : coset)
      CHECK(ctx->bruhat_leq(a, b) == bruhat_subword_oracle(*ctx, a, b));
  for (const Elt& a : coset) CHECK(ctx->bruhat_leq(a, a));
  for (const Elt& a : coset)
    for (const Elt& b : coset)
      if (ctx->bruhat_leq(a, b) && ctx->bruhat_leq(b, a)) CHECK(a == b);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, coset.size() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const Elt& a = coset[pick(rng)];
    const Elt& b = coset[pick(rng)];
    const Elt& c = coset[pick(rng)];
    if (ctx->bruhat_leq(a, b) && ctx->bruhat_leq(b, c)) CHECK(ctx->bruhat_leq(a, c));
  }
}

TEST_CASE("bruhat order compares only within an Omega coset") {
  auto ctx = gsp_context(2);
  const Elt tau = ctx->tau_generator();
  const Elt s0tau = ctx->multiply(ctx->generator(0), tau);
  CHECK(ctx->bruhat_leq(tau, s0tau));
  CHECK_FALSE(ctx->bruhat_leq(s0tau, ctx->multiply(ctx->generator(1), tau)));
  CHECK_FALSE(ctx->bruhat_leq(ctx->identity(), tau));  // different Omega parts
  const Elt s02tau = word_elt(*ctx, {0, 2});
  const Elt s021tau = word_elt(*ctx, {0, 2, 1});
  CHECK(ctx->bruhat_leq(s02tau, s021tau));
}

TEST_CASE("translations and tau elements") {
  auto ctx = gsp_context(2);
  CHECK(ctx->translation({0, 0, 0, 0}) == ctx->identity());
  const Elt tau2 = ctx->multiply(ctx->tau_generator(), ctx->tau_generator());
  CHECK(ctx->translation({1, 1, 1, 1}) == tau2);
  const Elt t = ctx->translation({1, 1, 0, 0});
  CHECK(ctx->length(t) == 3);
  CHECK(t.perm.kappa() == 1);
  CHECK_THROWS_AS(ctx->translation({1, 0, 0, 0}), lattice_error);
  // The length-zero element in the coset of t^mu.
  CHECK(ctx->tau_element({1, 1, 0, 0}) == ctx->tau_generator());
  CHECK(ctx->tau_element({0, 0, 0, 0}) == ctx->identity());
  CHECK(ctx->tau_element({1, 1, 0, 0}).perm.kappa() ==
        ctx->translation({1, 1, 0, 0}).perm.kappa());
  // tau has the explicit window of the realization: ((0,0,1,1),(13)(24)).
  const Elt explicit_tau = ctx->make(AffSimPerm({3, 4, 5, 6}));
  CHECK(ctx->tau_element({1, 1, 0, 0}) == explicit_tau);
}

TEST_CASE("length-zero elements are exactly the Omega part") {
  auto ctx = gsp_context(2, 4);
  for (const AffSimPerm& p : ctx->ball_elements())
    if (ctx->length_unbounded(p) == 0) CHECK(p.is_identity());
  for (int k : {-2, -1, 0, 1, 2, 3}) {
    CHECK(ctx->length_unbounded(ctx->omega_power(k).perm) == 0);
    CHECK(ctx->omega_power(k).perm.kappa() == k);
  }
}

TEST_CASE("sigma is trivial for the split context and conjugation by tau permutes generators") {
  auto ctx = gsp_context(2);
  const Elt x = word_elt(*ctx, {0, 1});
  CHECK(ctx->sigma_apply(x) == x);
  const Elt tau = ctx->tau_generator();
  const Elt tinv = ctx->invert(tau);
  CHECK(ctx->multiply(ctx->multiply(tau, ctx->generator(1)), tinv) == ctx->generator(1));
  CHECK(ctx->multiply(ctx->multiply(tau, ctx->generator(2)), tinv) == ctx->generator(0));
  CHECK(ctx->multiply(ctx->multiply(tau, ctx->generator(0)), tinv) == ctx->generator(2));
}

TEST_CASE("a nontrivial diagram automorphism acts by its index map") {
  auto ctx = gsp_context_tau_twisted(2);
  CHECK(ctx->sigma_gen(0) == 2);
  CHECK(ctx->sigma_gen(2) == 0);
  CHECK(ctx->sigma_gen(1) == 1);
  for (int i = 0; i <= 2; ++i)
    CHECK(ctx->sigma_apply(ctx->generator(i)) == ctx->generator(ctx->sigma_gen(i)));
  const Elt x = word_elt(*ctx, {0, 1, 0});
  CHECK(ctx->sigma_apply(ctx->sigma_apply(x)) == x);  // order 2
  // Braid orders are preserved.
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      if (i == j) continue;
      auto order_of = [&](int a, int b) {
        Elt prod = ctx->multiply(ctx->generator(a), ctx->generator(b));
        Elt acc = prod;
        int order = 1;
        while (!(acc == ctx->identity()) && order < 32) {
          acc = ctx->multiply(acc, prod);
          ++order;
        }
        return order;
      };
      CHECK(order_of(i, j) == order_of(ctx->sigma_gen(i), ctx->sigma_gen(j)));
    }
}

TEST_CASE("a context is safe for concurrent readers") {
  auto ctx = gsp_context(2);
  const Elt x = word_elt(*ctx, {0, 1, 0});
  std::vector<std::thread> workers;
  std::atomic<int> failures{0};
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&] {
      for (int i = 0; i < 500; ++i) {
        if (ctx->length(x) != 3) ++failures;
        if (ctx->reduced_word(x).letters != std::vector<int>{0, 1, 0}) ++failures;
        if (!ctx->bruhat_leq(ctx->tau_generator(), x)) ++failures;
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(failures.load() == 0);
}

TEST_CASE("word order sorting is stable and deterministic") {
  auto ctx = gsp_context(2, 3);
  std::vector<Elt> elems;
  for (const AffSimPerm& p : ctx->ball_elements()) elems.push_back(ctx->make(p));
  std::vector<Elt> shuffled = elems;
  std::reverse(shuffled.begin(), shuffled.end());
  sort_elements(*ctx, shuffled);
  std::vector<Elt> sorted = elems;
  sort_elements(*ctx, sorted);
  CHECK(shuffled == sorted);
  CHECK(word_label(Word{{0, 1, 0}, 1}) == "s0 s1 s0 tau");
  CHECK(word_label(Word{{}, 0}) == "e");
  CHECK(word_label(Word{{}, 2}) == "tau^2");
}
