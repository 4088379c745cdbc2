#pragma once

// Temperley-Lieb algebras over Q(A), the state-sum oracle, Jones-Wenzl
// projectors and the quantum coefficients Delta_n, theta(n,n,2i), mu_n.
//
// A Matching on 2n points uses TL order: points 0..n-1 are the top row
// left to right and points n..2n-1 the bottom row left to right.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "tanglekit/diagram.hpp"
#include "tanglekit/ring.hpp"

namespace tanglekit {

class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<std::uint8_t> partner);

  static Matching identity(int n);
  // Hook e_i in TL_n joining strands i and i+1 (0-based) top and bottom.
  static Matching hook(int n, int i);

  std::size_t points() const { return partner_.size(); }
  int strands() const { return static_cast<int>(partner_.size() / 2); }
  int partner(int p) const { return partner_[p]; }
  const std::vector<std::uint8_t>& partners() const { return partner_; }

  bool is_noncrossing() const;

  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<std::uint8_t> partner_;
};

// Every non-crossing matching of TL_n.
std::vector<Matching> enumerate_matchings(int n);

// Catalan number 1/(n+1) binom(2n, n).
std::uint64_t catalan(int n);

/**
 * @brief Gluing of crossingless pieces along identified boundary points.
 *
 * Points are addressed globally: piece k owns points
 * [offset_k, offset_k + size_k). Each link identifies two points and
 * contributes `winding` when traversed first-to-second. The outcome's
 * matching lists the output points in the order given.
 */
struct GluePlan {
  std::vector<std::array<int, 2>> links;
  std::vector<int> link_winding;  // empty means all zero
  std::vector<int> outputs;
};

struct GlueOutcome {
  Matching matching;
  int contractible = 0;
  int essential = 0;
};

GlueOutcome glue(std::span<const Matching* const> pieces, const GluePlan& plan);

class TLElement {
 public:
  using Terms = std::map<Matching, RatFunc>;

  TLElement() = default;
  explicit TLElement(int n) : n_(n) {}
  TLElement(int n, const Matching& m, const RatFunc& c = RatFunc(1));

  static TLElement identity(int n) { return TLElement(n, Matching::identity(n)); }
  static TLElement hook(int n, int i) { return TLElement(n, Matching::hook(n, i)); }

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(const Matching& m) const;

  void add(const Matching& m, const RatFunc& c);
  TLElement& operator+=(const TLElement& o);
  TLElement& operator-=(const TLElement& o);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  TLElement scaled(const RatFunc& c) const;

  friend bool operator==(const TLElement& a, const TLElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  int n_ = 0;
  Terms terms_;
};

// x stacked on top of y.
TLElement tl_multiply(const TLElement& x, const TLElement& y);

// x (x) y: y placed to the right of x.
TLElement tl_tensor(const TLElement& x, const TLElement& y);

// Applies a planar gluing to every term of each factor (multilinear).
struct GlueSum {
  std::map<std::pair<Matching, int>, RatFunc> terms;  // (matching, essential loops) -> coefficient
};
GlueSum glue_linear(std::span<const TLElement* const> factors, const GluePlan& plan);

// Markov closure: top point j joined to bottom point j, all loops contractible.
RatFunc markov_trace(const TLElement& x);

// ---------------------------------------------------------------------------
// State-sum oracle

struct StateSumOptions {
  int max_crossings = 16;
};

/**
 * @brief Brute-force Kauffman bracket expansion of a planar diagram.
 *
 * Every crossing is resolved into A times its A-smoothing plus A^-1 times
 * its B-smoothing. Contractible loops evaluate to delta; in an annulus
 * diagram, loops of nonzero winding are kept as powers of the core z.
 * Keys are (matching of the boundary points, number of essential loops).
 */
struct Expansion {
  std::size_t top = 0;
  std::size_t bottom = 0;
  std::map<std::pair<Matching, int>, LaurentPoly> terms;

  friend bool operator==(const Expansion&, const Expansion&) = default;
};

Expansion state_sum(const PlanarTangleDiagram& d, const StateSumOptions& opt = {});
// Same expansion evaluated on one thread; kept as the reference kernel.
Expansion state_sum_serial(const PlanarTangleDiagram& d, const StateSumOptions& opt = {});

// Disk expansion with matching boundary rows as a TL_n element.
TLElement to_tl_element(const Expansion& e);

// ---------------------------------------------------------------------------
// Jones-Wenzl projectors and quantum coefficients

struct JonesWenzl {
  int n = 0;
  TLElement element;
};

// Cached; safe to call from several threads.
const JonesWenzl& jones_wenzl(int n);

// Delta_n by the Chebyshev recurrence Delta_{k+1} = delta Delta_k - Delta_{k-1}.
RatFunc delta_recurrence(int n);

struct QuantumCoeffs {
  RatFunc delta;  // Delta_n, closure of f^(n)
  RatFunc theta;  // theta(n, n, 2i), closure of the (n, n, 2i) bubble
  LaurentPoly mu;  // (-1)^n A^(-n^2 - 2n)
};

QuantumCoeffs quantum_coeffs(int n, int i);
RatFunc quantum_delta(int n);
RatFunc quantum_theta(int n, int i);
LaurentPoly quantum_mu(int n);

}  // namespace tanglekit
