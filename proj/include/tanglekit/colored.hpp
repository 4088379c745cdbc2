#pragma once

// Colored 2-tangles in TL_{2n}.
//
// A 4-cluster element of TL_{2n} has top points NW = 0..n-1, NE = n..2n-1
// and bottom points SW = 2n..3n-1, SE = 3n..4n-1, each cluster read left
// to right. T^n is the n-cable of T with f^(n) on every cluster.

#include <vector>

#include "tanglekit/bracket2.hpp"
#include "tanglekit/tangles.hpp"
#include "tanglekit/tlalgebra.hpp"

namespace tanglekit {

// f^(n) (x) f^(n)
const TLElement& cluster_projector(int n);

// Cables of [0] and [inf] without projectors.
TLElement cluster_zero(int n);
TLElement cluster_inf(int n);

// x + y: NE of x joined to NW of y and SE of x to SW of y.
TLElement cluster_sum(const TLElement& x, const TLElement& y, int n);

// n-cable of a single crossing as a product of n^2 braid generators.
// sign +1 has the NW-SE band under.
const TLElement& cabled_crossing(int n, int sign);

// Cable of a twist word, composed move by move (no projectors).
TLElement cable_word(const TwistWord& w, int n);

// T^n, fast route.
TLElement colored_tangle(const RationalTangle& t, int n);
// T^n through the state sum of the cabled diagram. The diagram must not
// contain closed components.
TLElement colored_tangle(const PlanarTangleDiagram& d, int n, const StateSumOptions& opt = {});

// Top-bottom reflection.
TLElement flip(const TLElement& x);

// tr(x flip(y))
RatFunc trace_pairing(const TLElement& x, const TLElement& y);

// Numerator closure: NW joined to NE and SW to SE, all in the disk.
RatFunc numerator_closure(const TLElement& x);

// B_{n,0}, ..., B_{n,n}.
const std::vector<TLElement>& bni_basis(int n);

// Coordinates of a 4-cluster element against bni_basis(n).
std::vector<RatFunc> colored_expand(const TLElement& tn, int n);
std::vector<RatFunc> colored_expand(const RationalTangle& t, int n);
std::vector<RatFunc> colored_expand(const PlanarTangleDiagram& d, int n, const StateSumOptions& opt = {});

// Sum of gamma_i B_{n,i}.
TLElement colored_reconstruct(const std::vector<RatFunc>& gammas, int n);

struct ColoredRatios {
  std::vector<RatFunc> ratios;  // CR^0 .. CR^{n-1}
  int normalizer;               // index divided by
  bool flagged;                 // true when gamma_n vanished
};

ColoredRatios colored_ratios(const std::vector<RatFunc>& gammas);

}  // namespace tanglekit
