#pragma once

// Skein of the annulus: closures of 2-tangles around the core z, the
// Chebyshev basis S_k, and classification of rational links in the solid
// torus.

#include <map>
#include <string>
#include <vector>

#include "tanglekit/colored.hpp"

namespace tanglekit {

// sum_k c_k z^k
class AnnulusElement {
 public:
  using Terms = std::map<int, RatFunc>;

  AnnulusElement() = default;
  static AnnulusElement z_power(int k, const RatFunc& c = RatFunc(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(int k) const;
  int degree() const;  // -1 for zero

  void add(int k, const RatFunc& c);
  AnnulusElement& operator+=(const AnnulusElement& o);
  friend AnnulusElement operator+(AnnulusElement a, const AnnulusElement& b) { return a += b; }
  AnnulusElement scaled(const RatFunc& c) const;
  friend bool operator==(const AnnulusElement&, const AnnulusElement&) = default;

  std::string to_string() const;  // "(c0) + (c2)*z^2"

 private:
  Terms terms_;
};

// Closed annulus expansion (no boundary points) as a z-polynomial.
AnnulusElement annulus_from_expansion(const Expansion& e);

struct SolidTorusRationalLink {
  RationalTangle source;
};

// alpha delta + beta z^2
AnnulusElement closure_bracket(const RationalTangle& t);
// State sum of the closed annulus diagram.
AnnulusElement closure_bracket(const PlanarTangleDiagram& d, const StateSumOptions& opt = {});

// Coordinates in S_0, S_1, ... and back.
std::vector<RatFunc> chebyshev_convert(const AnnulusElement& e);
AnnulusElement from_chebyshev(const std::vector<RatFunc>& coords);

ExtRational link_fraction(const SolidTorusRationalLink& l);
// Recovers F from alpha delta + beta z^2 through C at A = sqrt(i).
ExtRational link_fraction_from_closure(const AnnulusElement& e);

bool links_equivalent(const SolidTorusRationalLink& a, const SolidTorusRationalLink& b);

enum class HomotopyType : std::uint8_t { TwoComponent, TrivialKnot, WindingKnot };

std::string to_string(HomotopyType h);  // "two_component", "trivial_knot", "winding_knot"
HomotopyType homotopy_type(const ExtRational& fraction);
HomotopyType homotopy_type(const SolidTorusRationalLink& l);

// Closure of a 4-cluster TL_2n element: NE joined to NW and SE to SW
// around the core.
AnnulusElement cluster_closure(const TLElement& x);

// sum_i gamma_i theta(n,n,2i)/Delta_2i S_2i
AnnulusElement colored_closure(const std::vector<RatFunc>& gammas, int n);
AnnulusElement colored_closure(const RationalTangle& t, int n);
AnnulusElement colored_closure(const PlanarTangleDiagram& d, int n, const StateSumOptions& opt = {});

// (Gamma_0/Gamma_k, ..., Gamma_{k-1}/Gamma_k) for the top Chebyshev index k.
std::vector<RatFunc> gamma_ratio_invariants(const AnnulusElement& e);

struct CounterexampleReport {
  int llk_t1 = 0;
  int llk_t2 = 0;
  AnnulusElement closure_t1;
  AnnulusElement closure_t2;
  bool distinguished_by_llk = false;
  bool closures_skein_equal = false;
};

CounterexampleReport counterexample_check();

}  // namespace tanglekit
