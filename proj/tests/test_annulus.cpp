#include "support.hpp"
#include "tanglekit/annulus.hpp"
#include "tanglekit/colored.hpp"

using namespace tanglekit;

namespace {

RationalTangle rt(std::initializer_list<std::int64_t> e) { return build_rational(TwistVector(e)); }
SolidTorusRationalLink link(std::initializer_list<std::int64_t> e) { return {rt(e)}; }
const RatFunc kDelta(tk_test::delta());

AnnulusElement z(int k, const RatFunc& c = RatFunc(1)) { return AnnulusElement::z_power(k, c); }

}  // namespace

TEST_SUITE("annulus") {
  TEST_CASE("closure of basis tangles") {
    CHECK(closure_bracket(RationalTangle::infinity()) == z(0, kDelta));
    CHECK(closure_bracket(rt({0})) == z(2));
    // alpha delta + beta z^2 with (alpha, beta) = (A, A^-1)
    AnnulusElement one = z(0, kDelta * RatFunc(LaurentPoly::A(1)));
    one += z(2, RatFunc(LaurentPoly::A(-1)));
    CHECK(closure_bracket(rt({1})) == one);
  }

  TEST_CASE("closure agrees with the annulus state sum") {
    CHECK(closure_bracket(RationalTangle::infinity()) == closure_bracket(rational_to_diagram(RationalTangle::infinity())));
    for (const auto& tv : tk_test::random_vectors(29, 40, 9)) {
      const RationalTangle t = build_rational(tv);
      CHECK(closure_bracket(t) == closure_bracket(rational_to_diagram(t)));
    }
  }

  TEST_CASE("chebyshev coordinates") {
    CHECK(chebyshev_convert(z(2)) == std::vector<RatFunc>{1, 0, 1});
    CHECK(chebyshev_convert(z(0)) == std::vector<RatFunc>{1});
    CHECK(chebyshev_convert(z(3)) == std::vector<RatFunc>{0, 2, 0, 1});
    AnnulusElement s4 = z(4);
    s4 += z(2, RatFunc(-3));
    s4 += z(0, RatFunc(1));
    CHECK(chebyshev_convert(s4) == std::vector<RatFunc>{0, 0, 0, 0, 1});
    for (const auto& tv : tk_test::random_vectors(31, 20)) {
      const AnnulusElement e = closure_bracket(build_rational(tv));
      CHECK(from_chebyshev(chebyshev_convert(e)) == e);
    }
  }

  TEST_CASE("link fractions and equivalence") {
    CHECK(link_fraction(link({-2, 3, 2})) == ExtRational(12, 5));
    CHECK(link_fraction(link({0})) == ExtRational(0));
    CHECK(link_fraction(link({3, 2, -3})) == ExtRational(-18, 7));
    CHECK(links_equivalent(link({-2, 3, 2}), link({3, -2, 3})));
    CHECK_FALSE(links_equivalent(link({1}), link({0})));
    CHECK(link_fraction_from_closure(closure_bracket(rt({3, 2, -3}))) == ExtRational(-18, 7));
    for (const auto& tv : tk_test::random_vectors(37, 50)) {
      const RationalTangle t = build_rational(tv);
      const ExtRational f = t.fraction();
      if (f.is_infinite()) continue;
      const SolidTorusRationalLink c{build_rational(canonical_form(f))};
      CHECK(links_equivalent({t}, c));
      CHECK(homotopy_type({t}) == homotopy_type(c));
    }
  }

  TEST_CASE("homotopy types") {
    CHECK(homotopy_type(SolidTorusRationalLink{RationalTangle::infinity()}) == HomotopyType::TwoComponent);
    CHECK(homotopy_type(ExtRational(12, 5)) == HomotopyType::TrivialKnot);
    CHECK(homotopy_type(ExtRational(1)) == HomotopyType::WindingKnot);
    CHECK(to_string(HomotopyType::WindingKnot) == "winding_knot");
  }

  TEST_CASE("colored closures") {
    AnnulusElement s2 = z(2);
    s2 += z(0, RatFunc(-1));
    CHECK(colored_closure({RatFunc(0), RatFunc(1)}, 1) == s2);
    for (int n = 1; n <= 3; ++n) {
      std::vector<RatFunc> g(n + 1);
      g[0] = 1;
      CHECK(colored_closure(g, n) == z(0, quantum_delta(n)));
    }
    CHECK(colored_closure(RationalTangle::infinity(), 1) == z(0, kDelta));
    // at color one the colored closure is the ordinary closure
    for (auto tv : {TwistVector{2}, TwistVector{3, 2, -3}, TwistVector{-1, 1}})
      CHECK(colored_closure(build_rational(tv), 1) == closure_bracket(build_rational(tv)));
  }

  TEST_CASE("bubble collapse by direct closure") {
    for (int n = 1; n <= 2; ++n) {
      const auto& b = bni_basis(n);
      for (int i = 0; i <= n; ++i) {
        std::vector<RatFunc> cheb(2 * i + 1);
        cheb[2 * i] = quantum_theta(n, i) / quantum_delta(2 * i);
        const AnnulusElement expected = from_chebyshev(cheb);
        CHECK(cluster_closure(b[i]) == expected);
        AnnulusElement direct;
        for (const auto& [m, c] : b[i].terms())
          direct += annulus_from_expansion(state_sum(solid_torus_closure(tk_test::matching_diagram(m)))).scaled(c);
        CHECK(direct == expected);
      }
    }
  }

  TEST_CASE("gamma ratio invariants") {
    CHECK(gamma_ratio_invariants(z(0, kDelta)).empty());
    const auto r = gamma_ratio_invariants(z(2));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == RatFunc(1));
    CHECK(r[1].is_zero());
    CHECK(gamma_ratio_invariants(colored_closure(rt({-2, 3, 2}), 2)) == gamma_ratio_invariants(colored_closure(rt({3, -2, 3}), 2)));
    CHECK_THROWS_AS(gamma_ratio_invariants(AnnulusElement()), Error);
  }

  TEST_CASE("counterexample") {
    const CounterexampleReport r = counterexample_check();
    CHECK(r.llk_t1 == 1);
    CHECK(r.llk_t2 == 2);
    CHECK(r.distinguished_by_llk);
    CHECK(r.closures_skein_equal);
    CHECK(r.closure_t1 == r.closure_t2);
  }
}
