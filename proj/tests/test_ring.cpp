#include "support.hpp"

using namespace tanglekit;
using tk_test::delta;

TEST_SUITE("ring") {
  TEST_CASE("laurent products") {
    CHECK(laurent_mul(LaurentPoly::A(1), LaurentPoly::A(-1)) == LaurentPoly(1));
    const LaurentPoly expected = LaurentPoly::A(4) + LaurentPoly(2) + LaurentPoly::A(-4);
    CHECK(laurent_mul(delta(), delta()) == expected);
    CHECK(laurent_mul(delta(), LaurentPoly()).is_zero());
    CHECK(loop_value() == delta());
  }

  TEST_CASE("canonical text") {
    const LaurentPoly p = -LaurentPoly::A(3) + LaurentPoly(2) + LaurentPoly::A(-2);
    CHECK(p.to_string() == "-A^3 + 2 + A^-2");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly::A(1).to_string() == "A");
  }

  TEST_CASE("bar and shift") {
    const LaurentPoly p = LaurentPoly::A(3) + LaurentPoly(Rational(5), -1);
    CHECK(p.bar().bar() == p);
    CHECK(p.bar() == LaurentPoly::A(-3) + LaurentPoly(Rational(5), 1));
    CHECK(p.shifted(2) == p * LaurentPoly::A(2));
  }

  TEST_CASE("rational function normalization") {
    CHECK(ratfunc_normalize(LaurentPoly::A(2), LaurentPoly::A(1)) == RatFunc(LaurentPoly::A(1)));
    CHECK(ratfunc_normalize(delta() * LaurentPoly::A(3), delta()) == RatFunc(LaurentPoly::A(3)));
    CHECK(ratfunc_normalize(LaurentPoly(), delta()).is_zero());
    CHECK_THROWS_AS(ratfunc_normalize(LaurentPoly(1), LaurentPoly()), Error);
  }

  TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-3, 3), e(-4, 4);
    auto rp = [&] {
      LaurentPoly p;
      for (int k = 0; k < 3; ++k) p += LaurentPoly(Rational(c(rng)), e(rng));
      return p;
    };
    for (int trial = 0; trial < 60; ++trial) {
      LaurentPoly n1 = rp(), n2 = rp(), d1 = rp(), d2 = rp();
      if (d1.is_zero() || d2.is_zero()) continue;
      const RatFunc x(n1, d1), y(n2, d2);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) - y == x);
      if (!y.is_zero()) CHECK((x / y) * y == x);
      if (!x.is_zero()) CHECK(x * x.inverse() == RatFunc(1));
    }
  }

  TEST_CASE("gcd and exact quotient") {
    const LaurentPoly a = delta() * (LaurentPoly::A(1) + LaurentPoly(1));
    const LaurentPoly b = delta() * (LaurentPoly::A(1) - LaurentPoly(1));
    const LaurentPoly g = poly_gcd(a, b);
    CHECK(exact_quotient(a, g) * g == a);
    CHECK(exact_quotient(b, g) * g == b);
    CHECK_THROWS_AS(exact_quotient(LaurentPoly::A(2) + LaurentPoly(1), LaurentPoly::A(1) + LaurentPoly(1)), Error);
  }

  TEST_CASE("evaluation at a primitive eighth root of unity") {
    CHECK(eval_zeta8(LaurentPoly::A(4)) == Zeta8Element(-1));
    CHECK(eval_zeta8(delta()).is_zero());
    CHECK(eval_zeta8(LaurentPoly(1)) == Zeta8Element(1));
    CHECK(eval_zeta8(LaurentPoly::A(2)) == Zeta8Element::i());
    CHECK(eval_zeta8(LaurentPoly::A(8)) == Zeta8Element(1));
    const Zeta8Element x(1, 2, 0, -1);
    CHECK(x * x.inverse() == Zeta8Element(1));
  }
}
