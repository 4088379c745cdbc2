#pragma once

// Kauffman bracket of 2-tangles in the basis {[inf], [0]} of TL_2,
// the ratio R_T = alpha/beta and the arithmetic invariant C(T).

#include <optional>

#include "tanglekit/fractions.hpp"
#include "tanglekit/tangles.hpp"
#include "tanglekit/tlalgebra.hpp"

namespace tanglekit {

// <T> = alpha <[inf]> + beta <[0]>
struct BracketVec2 {
  LaurentPoly alpha;
  LaurentPoly beta;
  friend bool operator==(const BracketVec2&, const BracketVec2&) = default;
};

// One step of the transfer matrix for a single move.
BracketVec2 apply_move(const BracketVec2& v, const TwistMove& m);

BracketVec2 bracket_vector(const TwistWord& w);
BracketVec2 bracket_vector(const RationalTangle& t);

// Coefficients of [inf] and [0] in the state-sum expansion of a 2-tangle.
BracketVec2 oracle_bracket(const PlanarTangleDiagram& d, const StateSumOptions& opt = {});

// Matchings of TL_2: [inf] is the identity, [0] the hook.
const Matching& matching_inf();
const Matching& matching_zero();

enum class MirrorOp { Negate, Invert };

BracketVec2 mirror_transport(const BracketVec2& v, MirrorOp op);

// alpha/beta; nullopt stands for infinity (beta = 0).
std::optional<RatFunc> ratio_invariant(const BracketVec2& v);

// -i alpha/beta at A = sqrt(i).
ExtRational c_invariant(const BracketVec2& v);

}  // namespace tanglekit
