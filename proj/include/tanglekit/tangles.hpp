#pragma once

// Rational tangles as twist vectors, their twist words and diagrams,
// connectivity type, and the clasp tangles with their left linking number.
//
// Twist vectors follow the order of creation: a1 is applied first. Entry
// a_k twists horizontally (adds to the right) when m - k is even and
// vertically (adds below) otherwise, so the last entry is always
// horizontal and F = a_m + 1/(a_{m-1} + ... + 1/a_1).

#include <optional>
#include <string>
#include <vector>

#include "tanglekit/diagram.hpp"
#include "tanglekit/fractions.hpp"

namespace tanglekit {

class RationalTangle {
 public:
  explicit RationalTangle(TwistVector tv) : tv_(std::move(tv)) {}
  static RationalTangle infinity() { return RationalTangle(); }

  bool is_infinity() const { return !tv_.has_value(); }
  // Throws for [inf].
  const TwistVector& twist_vector() const;
  ExtRational fraction() const;
  bool is_integer() const { return tv_ && tv_->size() == 1; }
  std::int64_t crossing_count() const { return tv_ ? tv_->crossing_count() : 0; }

  std::string to_string() const;  // "[3 2 -3]" or "[inf]"
  friend bool operator==(const RationalTangle&, const RationalTangle&) = default;

 private:
  RationalTangle() = default;
  std::optional<TwistVector> tv_;
};

RationalTangle build_rational(const TwistVector& tv);

// t + s where s must be an integer tangle [n].
RationalTangle tangle_add(const RationalTangle& t, const RationalTangle& s);
RationalTangle tangle_add(const RationalTangle& t, std::int64_t n);
RationalTangle tangle_negate(const RationalTangle& t);
RationalTangle tangle_invert(const RationalTangle& t);

enum class TwistKind : std::uint8_t { Right, Bottom };

struct TwistMove {
  TwistKind kind;
  int sign;  // +1 or -1
  friend bool operator==(const TwistMove&, const TwistMove&) = default;
};

enum class StartTangle : std::uint8_t { Zero, Infinity };

struct TwistWord {
  StartTangle start = StartTangle::Zero;
  std::vector<TwistMove> moves;
  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

TwistWord to_twist_word(const RationalTangle& t);

// Diagram with one crossing per move. Top = {NW, NE}, bottom = {SW, SE}.
PlanarTangleDiagram word_to_diagram(const TwistWord& w);
PlanarTangleDiagram rational_to_diagram(const RationalTangle& t);

enum class ConnectivityType : std::uint8_t { Type0, TypeInf, Type1 };

std::string to_string(ConnectivityType c);  // "0", "inf", "1"

// Strand tracing from NW, passing straight through every crossing.
ConnectivityType connectivity(const PlanarTangleDiagram& d);

// Closed components of a disk diagram, free loops included.
int closed_component_count(const PlanarTangleDiagram& d);

// ---------------------------------------------------------------------------
// Clasp tangles

/**
 * @brief 2-tangle from a 4-strand braid closed by a cap and a cup.
 *
 * Positions are 0..3 left to right. Position 0 runs NW to SW and
 * position 3 runs NE to SE; positions 1 and 2 are joined by a cap on top
 * and a cup at the bottom, giving one closed component. Generator +j
 * (1-based) crosses positions j-1 and j positively; -j negatively.
 */
PlanarTangleDiagram plat_tangle(const std::vector<int>& braid);

// Closed loop clasping the left strand once and the right strand twice.
PlanarTangleDiagram clasp_T1();
// Closed loop clasping the left strand twice and the right strand once.
PlanarTangleDiagram clasp_T2();

// Half the absolute sign sum over crossings between the NW-SW strand and
// the closed component. Requires arcs NW-SW and NE-SE plus exactly one
// closed component.
int left_linking_number(const PlanarTangleDiagram& d);

}  // namespace tanglekit
