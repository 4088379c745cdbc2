#include "tanglekit/ring.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace tanglekit {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c, int exponent) {
  if (c != 0) terms_.emplace(exponent, c);
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r(1), base = *this;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    Rational c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << 'A';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

const LaurentPoly& loop_value() {
  static const LaurentPoly delta = -LaurentPoly::A(2) - LaurentPoly::A(-2);
  return delta;
}

// ---------------------------------------------------------------------------
// Dense integer polynomials used for gcd computations.

namespace {

using ZPoly = std::vector<mpz_class>;  // index = power of A, no trailing zeros

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_exact(ZPoly& p, const mpz_class& c) {
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

ZPoly primitive(ZPoly p) {
  trim(p);
  if (p.empty()) return p;
  mpz_class c = content(p);
  if (p.back() < 0) c = -c;
  divide_exact(p, c);
  return p;
}

// lc(b)^(deg a - deg b + 1) * a mod b
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
  }
  return a;
}

ZPoly gcd_primitive(ZPoly a, ZPoly b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return ZPoly{1};
    ZPoly r = primitive(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Exact quotient a / b over Z; b must divide a.
ZPoly divide_poly(ZPoly a, const ZPoly& b) {
  if (b.size() == 1) {
    divide_exact(a, b[0]);
    return a;
  }
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - 1 - db;
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    q[shift] = qc;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= qc * b[k];
    trim(a);
  }
  if (!a.empty()) throw Error("inexact polynomial division");
  trim(q);
  return q;
}

// p = scale * A^shift * poly, with poly primitive integer and poly[0] != 0.
struct Split {
  Rational scale;
  int shift = 0;
  ZPoly poly;
};

Split split(const LaurentPoly& p) {
  Split s;
  s.shift = p.min_exponent();
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  s.poly.assign(static_cast<std::size_t>(p.max_exponent() - s.shift + 1), 0);
  for (const auto& [e, c] : p.terms()) {
    mpz_class v = c.get_num() * (den_lcm / c.get_den());
    s.poly[static_cast<std::size_t>(e - s.shift)] = v;
  }
  mpz_class cont = content(s.poly);
  divide_exact(s.poly, cont);
  s.scale = Rational(cont, den_lcm);
  s.scale.canonicalize();
  return s;
}

LaurentPoly from_zpoly(const ZPoly& p, const Rational& scale, int shift) {
  LaurentPoly r;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != 0) r += LaurentPoly(Rational(p[k]) * scale, static_cast<int>(k) + shift);
  return r;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) throw Error("gcd with the zero polynomial");
  return from_zpoly(gcd_primitive(split(a).poly, split(b).poly), Rational(1), 0);
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error("division by zero in \xe2\x84\x9a(A)");
  if (a.is_zero()) return a;
  Split sa = split(a), sb = split(b);
  return from_zpoly(divide_poly(std::move(sa.poly), sb.poly), sa.scale / sb.scale, sa.shift - sb.shift);
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc ratfunc_normalize(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error("division by zero in \xe2\x84\x9a(A)");
  return RatFunc(num, den);
}

RatFunc::RatFunc(const LaurentPoly& p) : num_(p), den_(1) {
  const bool integral = std::all_of(p.terms().begin(), p.terms().end(),
                                    [](const auto& t) { return t.second.get_den() == 1; });
  if (!integral) *this = RatFunc(p, LaurentPoly(1));
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error("division by zero in \xe2\x84\x9a(A)");
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(1);
    return;
  }
  Split n = split(num);
  Split d = split(den);
  if (d.poly.size() > 1 && n.poly.size() > 1) {
    ZPoly g = gcd_primitive(n.poly, d.poly);
    if (g.size() > 1) {
      n.poly = divide_poly(std::move(n.poly), g);
      d.poly = divide_poly(std::move(d.poly), g);
    }
  }
  if (d.poly[0] < 0) {
    for (auto& x : d.poly) x = -x;
    d.scale = -d.scale;
  }
  // d.poly[0] > 0 and both polys primitive, so the remaining scalar
  // u/v splits as u into the numerator and v into the denominator.
  Rational r = n.scale / d.scale;
  num_ = from_zpoly(n.poly, Rational(r.get_num()), n.shift - d.shift);
  den_ = from_zpoly(d.poly, Rational(r.get_den()), 0);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = RatFunc(num_ + o.num_, den_);
  } else {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (is_laurent() && o.is_laurent()) {
    *this = RatFunc(num_ * o.num_, LaurentPoly(1), Canonical{});
    return *this;
  }
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error("division by zero in \xe2\x84\x9a(A)");
  return *this *= o.inverse();
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, RatFunc::Canonical{}); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error("division by zero in \xe2\x84\x9a(A)");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

std::string RatFunc::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Zeta8Element

bool Zeta8Element::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

Zeta8Element& Zeta8Element::operator+=(const Zeta8Element& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Zeta8Element& Zeta8Element::operator-=(const Zeta8Element& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Zeta8Element operator*(const Zeta8Element& a, const Zeta8Element& b) {
  Zeta8Element r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int e = i + j;
      if (e < 4)
        r.c_[e] += a.c_[i] * b.c_[j];
      else
        r.c_[e - 4] -= a.c_[i] * b.c_[j];
    }
  return r;
}

Zeta8Element operator-(const Zeta8Element& a) {
  Zeta8Element r;
  for (int k = 0; k < 4; ++k) r.c_[k] = -a.c_[k];
  return r;
}

namespace {

// A^e reduced to sign * A^(e mod 4).
std::pair<int, int> reduce_power(int e) {
  int m = ((e % 8) + 8) % 8;
  return m < 4 ? std::pair{1, m} : std::pair{-1, m - 4};
}

}  // namespace

Zeta8Element Zeta8Element::galois(int k) const {
  Zeta8Element r;
  for (int j = 0; j < 4; ++j) {
    auto [sign, pos] = reduce_power(j * k);
    r.c_[pos] += sign * c_[j];
  }
  return r;
}

Zeta8Element Zeta8Element::inverse() const {
  if (is_zero()) throw Error("division by zero in Q(zeta8)");
  // x^-1 = (product of the other conjugates) / norm
  Zeta8Element others = galois(3) * galois(5) * galois(7);
  Zeta8Element norm = *this * others;
  if (!norm.is_rational() || norm.c_[0] == 0) throw Error("norm computation failed in Q(zeta8)");
  Rational inv = 1 / norm.c_[0];
  for (auto& c : others.c_) c *= inv;
  return others;
}

std::string Zeta8Element::to_string() const {
  LaurentPoly p;
  for (int k = 0; k < 4; ++k) p += LaurentPoly(c_[k], k);
  return p.to_string();
}

Zeta8Element eval_zeta8(const LaurentPoly& p) {
  Zeta8Element r;
  for (const auto& [e, c] : p.terms()) {
    auto [sign, pos] = reduce_power(e);
    Rational coeffs[4] = {0, 0, 0, 0};
    coeffs[pos] = sign * c;
    r += Zeta8Element(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
  }
  return r;
}

}  // namespace tanglekit
