#include "support.hpp"
#include "tanglekit/colored.hpp"

using namespace tanglekit;

namespace {

RationalTangle rt(std::initializer_list<std::int64_t> e) { return build_rational(TwistVector(e)); }
const RatFunc kDelta(tk_test::delta());

}  // namespace

TEST_SUITE("colored") {
  TEST_CASE("cabled crossing matches the cabled diagram") {
    for (int n = 1; n <= 2; ++n)
      for (int s : {1, -1}) {
        const auto d = rational_to_diagram(rt({s}));
        const TLElement direct = to_tl_element(state_sum(cable(d, n)));
        CHECK(cabled_crossing(n, s) == direct);
      }
  }

  TEST_CASE("colored tangle agrees with the cabled state sum") {
    StateSumOptions opt;
    opt.max_crossings = 40;
    for (auto tv : {TwistVector{2}, TwistVector{1, 1}, TwistVector{-1, 2}, TwistVector{2, -1, 1}}) {
      const RationalTangle t = build_rational(tv);
      for (int n = 1; n <= 2; ++n) CHECK(colored_tangle(t, n) == colored_tangle(rational_to_diagram(t), n, opt));
    }
  }

  TEST_CASE("basis tangles") {
    for (int n = 1; n <= 3; ++n) {
      const auto g = colored_expand(RationalTangle::infinity(), n);
      CHECK(g[0] == RatFunc(1));
      for (int i = 1; i <= n; ++i) CHECK(g[i].is_zero());
    }
    const auto g0 = colored_expand(rt({0}), 1);
    CHECK(g0 == std::vector<RatFunc>{kDelta.inverse(), RatFunc(1)});
  }

  TEST_CASE("basis is orthogonal under the trace pairing") {
    for (int n = 1; n <= 2; ++n) {
      const auto& b = bni_basis(n);
      REQUIRE(b.size() == static_cast<std::size_t>(n + 1));
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          const RatFunc p = trace_pairing(b[i], b[j]);
          if (i != j) {
            CHECK(p.is_zero());
          } else {
            const RatFunc th = quantum_theta(n, i);
            CHECK(p == th * th / quantum_delta(2 * i));
          }
        }
    }
  }

  TEST_CASE("expansion reconstructs the colored tangle") {
    for (auto tv : {TwistVector{3, 2, -3}, TwistVector{-2, 3, 2}, TwistVector{1}}) {
      const RationalTangle t = build_rational(tv);
      for (int n = 1; n <= 2; ++n) CHECK(colored_reconstruct(colored_expand(t, n), n) == colored_tangle(t, n));
    }
  }

  TEST_CASE("colored ratios") {
    const ColoredRatios r = colored_ratios({kDelta.inverse(), RatFunc(1)});
    CHECK(r.ratios == std::vector<RatFunc>{kDelta.inverse()});
    CHECK(r.normalizer == 1);
    CHECK_FALSE(r.flagged);
    const ColoredRatios z = colored_ratios({RatFunc(0), RatFunc(0), RatFunc(LaurentPoly::A(3))});
    for (const auto& x : z.ratios) CHECK(x.is_zero());
    const ColoredRatios f = colored_ratios({RatFunc(2), RatFunc(0)});
    CHECK(f.flagged);
    CHECK(f.normalizer == 0);
    CHECK_THROWS_AS(colored_ratios({RatFunc(0), RatFunc(0)}), Error);
  }

  TEST_CASE("colored ratios agree on isotopic tangles") {
    const auto a = colored_ratios(colored_expand(rt({-2, 3, 2}), 2));
    const auto b = colored_ratios(colored_expand(rt({3, -2, 3}), 2));
    CHECK(a.ratios == b.ratios);
    const auto c = colored_ratios(colored_expand(rt({2, 2, 2}), 2));
    CHECK(a.ratios == c.ratios);
  }

  TEST_CASE("theta of the trivial bubble is the quantum dimension") {
    for (int n = 1; n <= 4; ++n) CHECK(quantum_theta(n, 0) == quantum_delta(n));
    CHECK(quantum_theta(1, 1) == quantum_delta(2));
  }

  TEST_CASE("invalid colors") {
    CHECK_THROWS_AS(cluster_projector(0), Error);
    CHECK_THROWS_AS(cabled_crossing(1, 2), Error);
    CHECK_THROWS_AS(colored_reconstruct({RatFunc(1)}, 2), Error);
  }
}
