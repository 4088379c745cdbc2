#include "tanglekit/bracket2.hpp"

namespace tanglekit {

namespace {

const LaurentPoly kA = LaurentPoly::A(1);
const LaurentPoly kAinv = LaurentPoly::A(-1);

Rational to_rational_checked(const Zeta8Element& z) {
  if (!z.is_rational()) throw Error("C(T) is not rational");
  return z[0];
}

}  // namespace

BracketVec2 apply_move(const BracketVec2& v, const TwistMove& m) {
  const LaurentPoly& d = loop_value();
  const LaurentPoly& s = m.sign > 0 ? kA : kAinv;
  const LaurentPoly& t = m.sign > 0 ? kAinv : kA;
  if (m.kind == TwistKind::Right) {
    // s-smoothing: [inf] closes a loop, [0] becomes [inf]; t-smoothing keeps the tangle
    return {s * (v.alpha * d + v.beta) + t * v.alpha, t * v.beta};
  }
  return {s * v.alpha, s * v.beta + t * (v.alpha + d * v.beta)};
}

BracketVec2 bracket_vector(const TwistWord& w) {
  BracketVec2 v = w.start == StartTangle::Zero ? BracketVec2{0, 1} : BracketVec2{1, 0};
  for (const auto& m : w.moves) v = apply_move(v, m);
  return v;
}

BracketVec2 bracket_vector(const RationalTangle& t) { return bracket_vector(to_twist_word(t)); }

const Matching& matching_inf() {
  static const Matching m = Matching::identity(2);
  return m;
}

const Matching& matching_zero() {
  static const Matching m = Matching::hook(2, 0);
  return m;
}

BracketVec2 oracle_bracket(const PlanarTangleDiagram& d, const StateSumOptions& opt) {
  if (!d.is_two_tangle() || d.annulus) throw Error("oracle bracket requires a disk 2-tangle");
  const Expansion ex = state_sum(d, opt);
  BracketVec2 v;
  for (const auto& [key, p] : ex.terms) {
    if (key.second != 0) throw Error("disk expansion with essential loops");
    if (key.first == matching_inf())
      v.alpha += p;
    else if (key.first == matching_zero())
      v.beta += p;
    else
      throw Error("2-tangle expansion produced a crossing matching");
  }
  return v;
}

BracketVec2 mirror_transport(const BracketVec2& v, MirrorOp op) {
  if (op == MirrorOp::Negate) return {v.alpha.bar(), v.beta.bar()};
  return {v.beta.bar(), v.alpha.bar()};
}

std::optional<RatFunc> ratio_invariant(const BracketVec2& v) {
  if (v.alpha.is_zero() && v.beta.is_zero()) throw Error("degenerate bracket");
  if (v.beta.is_zero()) return std::nullopt;
  return ratfunc_normalize(v.alpha, v.beta);
}

ExtRational c_invariant(const BracketVec2& v) {
  const Zeta8Element a = eval_zeta8(v.alpha), b = eval_zeta8(v.beta);
  if (a.is_zero() && b.is_zero()) throw Error("indeterminate C(T)");
  if (b.is_zero()) return ExtRational::infinity();
  const Rational c = to_rational_checked(-(Zeta8Element::i() * a * b.inverse()));
  const mpz_class& num = c.get_num();
  const mpz_class& den = c.get_den();
  if (!num.fits_slong_p() || !den.fits_slong_p()) throw Error("C(T) exceeds 64-bit range");
  return ExtRational(num.get_si(), den.get_si());
}

}  // namespace tanglekit
