#include "support.hpp"
#include "tanglekit/bracket2.hpp"

using namespace tanglekit;

namespace {

RationalTangle rt(std::initializer_list<std::int64_t> e) { return build_rational(TwistVector(e)); }
const LaurentPoly A = LaurentPoly::A(1);
const LaurentPoly Ainv = LaurentPoly::A(-1);

}  // namespace

TEST_SUITE("bracket2") {
  TEST_CASE("basis tangles and one crossing") {
    CHECK(bracket_vector(rt({0})) == BracketVec2{0, 1});
    CHECK(bracket_vector(RationalTangle::infinity()) == BracketVec2{1, 0});
    CHECK(bracket_vector(rt({1})) == BracketVec2{A, Ainv});
  }

  TEST_CASE("two crossings match a hand expansion") {
    // [inf]+[inf] = delta [inf], [inf]+[0] = [0]+[inf] = [inf], [0]+[0] = [0]
    const BracketVec2 v = bracket_vector(rt({2}));
    CHECK(v.alpha == -LaurentPoly::A(4) + LaurentPoly(1));
    CHECK(v.beta == LaurentPoly::A(-2));
    CHECK(v == oracle_bracket(rational_to_diagram(rt({2}))));
  }

  TEST_CASE("transfer matrices agree with the state sum") {
    for (const auto& tv : tk_test::random_vectors(17, 60, 9)) {
      const RationalTangle t = build_rational(tv);
      CHECK(bracket_vector(t) == oracle_bracket(rational_to_diagram(t)));
    }
  }

  TEST_CASE("mirror transport") {
    CHECK(mirror_transport(BracketVec2{0, 1}, MirrorOp::Invert) == BracketVec2{1, 0});
    const BracketVec2 one{A, Ainv};
    CHECK(mirror_transport(one, MirrorOp::Negate) == BracketVec2{Ainv, A});
    CHECK(c_invariant(mirror_transport(one, MirrorOp::Negate)) == ExtRational(-1));
    CHECK(mirror_transport(one, MirrorOp::Invert) == one);
    CHECK(c_invariant(mirror_transport(one, MirrorOp::Invert)) == ExtRational(1));
    for (const auto& tv : tk_test::random_vectors(19, 40)) {
      const RationalTangle t = build_rational(tv);
      const BracketVec2 v = bracket_vector(t);
      CHECK(mirror_transport(v, MirrorOp::Negate) == bracket_vector(tangle_negate(t)));
      CHECK(mirror_transport(v, MirrorOp::Invert) == bracket_vector(tangle_invert(t)));
    }
  }

  TEST_CASE("ratio invariant") {
    CHECK(ratio_invariant(BracketVec2{0, 1}) == RatFunc(0));
    CHECK(ratio_invariant(BracketVec2{A, Ainv}) == RatFunc(LaurentPoly::A(2)));
    CHECK_FALSE(ratio_invariant(BracketVec2{1, 0}).has_value());
    CHECK_THROWS_AS(ratio_invariant(BracketVec2{0, 0}), Error);
    CHECK(ratio_invariant(bracket_vector(rt({-2, 3, 2}))) == ratio_invariant(bracket_vector(rt({3, -2, 3}))));
  }

  TEST_CASE("arithmetic invariant") {
    CHECK(c_invariant(BracketVec2{A, Ainv}) == ExtRational(1));
    CHECK(c_invariant(bracket_vector(rt({-2, 3, 2}))) == ExtRational(12, 5));
    CHECK(c_invariant(BracketVec2{0, 1}) == ExtRational(0));
    CHECK(c_invariant(BracketVec2{1, 0}).is_infinite());
  }

  TEST_CASE("arithmetic invariant equals the fraction") {
    for (const auto& tv : tk_test::random_vectors(23, 200)) {
      const auto pq = tk_test::fraction_pair(tv.entries());
      CHECK(tk_test::same_fraction(c_invariant(bracket_vector(build_rational(tv))), pq));
    }
  }
}
