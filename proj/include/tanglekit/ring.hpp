#pragma once

// Exact scalars for skein computations: Laurent polynomials in A with
// rational coefficients, the field Q(A), and the cyclotomic quotient
// Q[A]/(A^4 + 1) used to evaluate at A = sqrt(i).

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tanglekit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

/**
 * @brief Sparse Laurent polynomial sum_k c_k A^k with c_k in Q.
 *
 * No zero coefficient is ever stored, so structural equality is
 * mathematical equality.
 */
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  LaurentPoly(const Rational& c, int exponent = 0);

  static LaurentPoly monomial(const Rational& c, int exponent) { return LaurentPoly(c, exponent); }
  static LaurentPoly A(int exponent = 1) { return LaurentPoly(Rational(1), exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exponent() const;
  int max_exponent() const;
  Rational coeff(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(int k) const;  // multiply by A^k
  LaurentPoly bar() const;           // A -> A^-1
  LaurentPoly pow(unsigned k) const;

  // Canonical text: exponents descending, e.g. "-A^3 + 2 + A^-2".
  std::string to_string() const;

 private:
  void add_term(int exponent, const Rational& c);
  Terms terms_;
};

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q);

// Primitive integer gcd with lowest exponent 0 (units and A-powers dropped).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
// a / b when b divides a in Q[A, A^-1]; throws otherwise.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

// delta = -A^2 - A^-2, the value of a contractible loop.
const LaurentPoly& loop_value();

/**
 * @brief Element of Q(A) in canonical form.
 *
 * Numerator and denominator have integer coefficients with no common
 * polynomial factor and no common integer content; the denominator has
 * lowest exponent 0 with a positive constant term.
 */
class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const LaurentPoly& p);         // NOLINT
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == LaurentPoly(1); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc inverse() const;
  RatFunc bar() const;
  std::string to_string() const;

 private:
  struct Canonical {};
  RatFunc(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  LaurentPoly num_;
  LaurentPoly den_;
};

RatFunc ratfunc_normalize(const LaurentPoly& num, const LaurentPoly& den);

/**
 * @brief c0 + c1 A + c2 A^2 + c3 A^3 modulo A^4 = -1.
 *
 * A is a primitive 8th root of unity, so A^2 plays the role of i.
 */
class Zeta8Element {
 public:
  Zeta8Element() = default;
  Zeta8Element(const Rational& c0, const Rational& c1 = 0, const Rational& c2 = 0, const Rational& c3 = 0)
      : c_{c0, c1, c2, c3} {}

  static Zeta8Element i() { return Zeta8Element(0, 0, 1, 0); }

  const Rational& operator[](int k) const { return c_[k]; }
  bool is_zero() const;
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  Zeta8Element& operator+=(const Zeta8Element& o);
  Zeta8Element& operator-=(const Zeta8Element& o);
  friend Zeta8Element operator+(Zeta8Element a, const Zeta8Element& b) { return a += b; }
  friend Zeta8Element operator-(Zeta8Element a, const Zeta8Element& b) { return a -= b; }
  friend Zeta8Element operator*(const Zeta8Element& a, const Zeta8Element& b);
  friend Zeta8Element operator-(const Zeta8Element& a);
  friend bool operator==(const Zeta8Element& a, const Zeta8Element& b) { return a.c_ == b.c_; }

  // Galois action A -> A^k for odd k.
  Zeta8Element galois(int k) const;
  Zeta8Element inverse() const;

  std::string to_string() const;

 private:
  std::array<Rational, 4> c_{};
};

Zeta8Element eval_zeta8(const LaurentPoly& p);

}  // namespace tanglekit
