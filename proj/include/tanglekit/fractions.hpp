#pragma once

// Extended rationals Q u {inf}, twist vectors and their continued
// fractions, canonical forms, parity and Schubert's classification.

#include <cstdint>
#include <string>
#include <vector>

#include "tanglekit/ring.hpp"

namespace tanglekit {

/**
 * @brief Reduced fraction p/q with q >= 0; infinity is exactly 1/0.
 *
 * Arithmetic is checked: an int64 overflow throws instead of wrapping.
 */
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(std::int64_t p) : p_(p), q_(1) {}  // NOLINT
  ExtRational(std::int64_t p, std::int64_t q);

  static ExtRational infinity() { return ExtRational(1, 0); }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  bool is_zero() const { return p_ == 0; }
  int sign() const { return (p_ > 0) - (p_ < 0); }

  // x + n; inf + n = inf
  ExtRational plus(std::int64_t n) const;
  // 1/x with 1/0 = inf and 1/inf = 0
  ExtRational reciprocal() const;
  ExtRational negated() const;

  friend bool operator==(const ExtRational&, const ExtRational&) = default;

  // "p/q", "n" for integers, "inf" for infinity
  std::string to_string() const;

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

ExtRational parse_ext_rational(const std::string& text);

/**
 * @brief Entries [a1 ... am] of a rational tangle in order of creation.
 *
 * a1 is the innermost twist; interior entries a2..a_{m-1} are nonzero.
 */
class TwistVector {
 public:
  explicit TwistVector(std::vector<std::int64_t> entries);
  TwistVector(std::initializer_list<std::int64_t> entries) : TwistVector(std::vector<std::int64_t>(entries)) {}

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t k) const { return entries_[k]; }
  std::int64_t crossing_count() const;

  friend bool operator==(const TwistVector&, const TwistVector&) = default;
  std::string to_string() const;  // "[3 2 -3]"

 private:
  std::vector<std::int64_t> entries_;
};

enum class Parity { EvenOdd, OddEven, OddOdd };

std::string to_string(Parity p);  // "e/o", "o/e", "o/o"

ExtRational continued_fraction(const TwistVector& tv);
TwistVector canonical_form(const ExtRational& r);
Parity parity(const ExtRational& r);
bool schubert_equivalent(const ExtRational& a, const ExtRational& b);

}  // namespace tanglekit
