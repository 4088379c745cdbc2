#include "tanglekit/fractions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace tanglekit {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in fraction arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in fraction arithmetic");
  return r;
}

}  // namespace

ExtRational::ExtRational(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw Error("0/0 is not an extended rational");
  if (q == 0) {
    p_ = 1;
    q_ = 0;
    return;
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

ExtRational ExtRational::plus(std::int64_t n) const {
  if (is_infinite()) return *this;
  return ExtRational(checked_add(p_, checked_mul(n, q_)), q_);
}

ExtRational ExtRational::reciprocal() const {
  if (is_infinite()) return ExtRational(0);
  if (p_ == 0) return infinity();
  return ExtRational(q_, p_);
}

ExtRational ExtRational::negated() const {
  if (is_infinite()) return *this;
  return ExtRational(-p_, q_);
}

std::string ExtRational::to_string() const {
  if (is_infinite()) return "inf";
  if (q_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "/" + std::to_string(q_);
}

ExtRational parse_ext_rational(const std::string& text) {
  if (text == "inf" || text == "1/0") return ExtRational::infinity();
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error("malformed fraction '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return ExtRational(parse_int(text));
  std::string_view sv(text);
  return ExtRational(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
}

TwistVector::TwistVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error("invalid twist vector: empty");
  for (std::size_t k = 1; k + 1 < entries_.size(); ++k)
    if (entries_[k] == 0) throw Error("invalid twist vector: interior zero");
}

std::int64_t TwistVector::crossing_count() const {
  std::int64_t n = 0;
  for (auto a : entries_) n = checked_add(n, a < 0 ? -a : a);
  return n;
}

std::string TwistVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < entries_.size(); ++k) os << (k ? " " : "") << entries_[k];
  os << ']';
  return os.str();
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::EvenOdd: return "e/o";
    case Parity::OddEven: return "o/e";
    case Parity::OddOdd: return "o/o";
  }
  return "?";
}

ExtRational continued_fraction(const TwistVector& tv) {
  ExtRational x(tv[0]);
  for (std::size_t k = 1; k < tv.size(); ++k) x = x.reciprocal().plus(tv[k]);
  return x;
}

TwistVector canonical_form(const ExtRational& r) {
  if (r.is_infinite()) throw Error("no canonical twist vector for [\xe2\x88\x9e]");
  if (r.is_zero()) return TwistVector{0};
  const std::int64_t s = r.sign();

  // Regular continued fraction of |r|, outermost quotient first.
  std::vector<std::int64_t> quotients;
  std::int64_t num = r.p() * s, den = r.q();
  while (den != 0) {
    const std::int64_t c = num / den;
    quotients.push_back(c);
    num -= c * den;
    std::swap(num, den);
  }
  // Order of creation is innermost first.
  std::vector<std::int64_t> a(quotients.rbegin(), quotients.rend());
  for (auto& x : a) x *= s;

  if (a.size() % 2 == 0) {
    if (a[0] == s) {
      // [s, a2, ...] = [a2 + s, ...]
      a[1] += s;
      a.erase(a.begin());
    } else {
      // [a1, ...] = [s, a1 - s, ...]
      a[0] -= s;
      a.insert(a.begin(), s);
    }
  }
  return TwistVector(std::move(a));
}

Parity parity(const ExtRational& r) {
  if (r.is_infinite()) return Parity::OddEven;
  const bool p_odd = (r.p() % 2) != 0;
  const bool q_odd = (r.q() % 2) != 0;
  if (p_odd && q_odd) return Parity::OddOdd;
  if (p_odd) return Parity::OddEven;
  return Parity::EvenOdd;
}

bool schubert_equivalent(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) throw Error("Schubert test requires finite fractions");
  if (a.p() <= 0 || b.p() <= 0) throw Error("Schubert test requires positive numerator");
  if (a.p() != b.p()) return false;
  const __int128 p = a.p();
  auto mod = [p](__int128 x) { return ((x % p) + p) % p; };
  const __int128 q = a.q(), q2 = b.q();
  return mod(q - q2) == 0 || mod(q * q2 - 1) == 0;
}

}  // namespace tanglekit
