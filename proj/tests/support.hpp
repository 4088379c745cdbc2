#pragma once

// Reference computations written independently of the library paths
// they check.

#include <doctest.h>

#include <random>
#include <utility>
#include <vector>

#include "tanglekit/fractions.hpp"
#include "tanglekit/random.hpp"
#include "tanglekit/ring.hpp"

namespace tk_test {

using namespace tanglekit;

// Continued fraction a_m + 1/(a_{m-1} + ... + 1/a_1) as a reduced pair (p, q).
inline std::pair<mpz_class, mpz_class> fraction_pair(const std::vector<std::int64_t>& a) {
  mpz_class p = static_cast<long>(a[0]), q = 1;
  for (std::size_t k = 1; k < a.size(); ++k) {
    mpz_class np = static_cast<long>(a[k]) * p + q;
    q = p;
    p = np;
  }
  mpz_class g = gcd(p, q);
  if (g != 0) {
    p /= g;
    q /= g;
  }
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

inline bool same_fraction(const ExtRational& r, const std::pair<mpz_class, mpz_class>& pq) {
  return mpz_class(static_cast<long>(r.p())) == pq.first && mpz_class(static_cast<long>(r.q())) == pq.second;
}

inline LaurentPoly delta() { return -LaurentPoly::A(2) - LaurentPoly::A(-2); }

inline std::vector<TwistVector> random_vectors(std::uint64_t seed, int count, int max_crossings = -1) {
  std::mt19937_64 rng(seed);
  TwistVectorSampler s;
  s.max_crossings = max_crossings;
  std::vector<TwistVector> r;
  for (int i = 0; i < count; ++i) r.push_back(s(rng));
  return r;
}

}  // namespace tk_test

#include "tanglekit/diagram.hpp"
#include "tanglekit/tlalgebra.hpp"

namespace tk_test {

// Crossingless disk diagram drawing matching m of TL_n.
inline PlanarTangleDiagram matching_diagram(const Matching& m) {
  const int n = m.strands();
  DiagramBuilder b;
  std::vector<int> edge(2 * n, -1);
  for (int p = 0; p < 2 * n; ++p)
    if (edge[p] < 0) edge[p] = edge[m.partner(p)] = b.new_edge();
  b.set_top(std::vector<int>(edge.begin(), edge.begin() + n));
  b.set_bottom(std::vector<int>(edge.begin() + n, edge.end()));
  return b.build();
}

}  // namespace tk_test
