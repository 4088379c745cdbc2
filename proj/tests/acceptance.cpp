// One line per acceptance criterion with its wall time and limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "tanglekit/annulus.hpp"
#include "tanglekit/bracket2.hpp"
#include "tanglekit/colored.hpp"
#include "tanglekit/random.hpp"

using namespace tanglekit;

namespace {

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

std::vector<TwistVector> sample(std::uint64_t seed, int count, int max_crossings = -1) {
  std::mt19937_64 rng(seed);
  TwistVectorSampler s;
  s.max_crossings = max_crossings;
  std::vector<TwistVector> r;
  for (int i = 0; i < count; ++i) r.push_back(s(rng));
  return r;
}

// Independent evaluation of a_m + 1/(... + 1/a_1) as a reduced pair.
std::pair<mpz_class, mpz_class> reference_fraction(const TwistVector& tv) {
  const auto& a = tv.entries();
  mpz_class p = static_cast<long>(a[0]), q = 1;
  for (std::size_t k = 1; k < a.size(); ++k) {
    mpz_class np = static_cast<long>(a[k]) * p + q;
    q = p;
    p = np;
  }
  const mpz_class g = gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

PlanarTangleDiagram kink() {
  DiagramBuilder b;
  const int t = b.new_edge(), loop = b.new_edge(), u = b.new_edge();
  b.add_crossing(t, loop, loop, u);
  b.set_top({t});
  b.set_bottom({u});
  return b.build();
}

PlanarTangleDiagram matching_diagram(const Matching& m) {
  const int n = m.strands();
  DiagramBuilder b;
  std::vector<int> edge(2 * n, -1);
  for (int p = 0; p < 2 * n; ++p)
    if (edge[p] < 0) edge[p] = edge[m.partner(p)] = b.new_edge();
  b.set_top(std::vector<int>(edge.begin(), edge.begin() + n));
  b.set_bottom(std::vector<int>(edge.begin() + n, edge.end()));
  return b.build();
}

Check c1() {
  Check c;
  for (const auto& tv : sample(101, 200)) {
    const auto [p, q] = reference_fraction(tv);
    const ExtRational f = continued_fraction(tv);
    const ExtRational ci = c_invariant(bracket_vector(build_rational(tv)));
    c.require(ci == f, "C != F for " + tv.to_string());
    c.require(mpz_class(static_cast<long>(f.p())) == p && mpz_class(static_cast<long>(f.q())) == q,
              "fraction differs from reference for " + tv.to_string());
  }
  return c;
}

Check c2() {
  Check c;
  StateSumOptions opt;
  opt.max_crossings = 10;
  for (const auto& tv : sample(202, 100, 10)) {
    const RationalTangle t = build_rational(tv);
    c.require(bracket_vector(t) == oracle_bracket(rational_to_diagram(t), opt), "oracle mismatch for " + tv.to_string());
  }
  return c;
}

Check c3() {
  Check c;
  c.require(continued_fraction({-2, 3, 2}) == ExtRational(12, 5), "fraction of [-2 3 2]");
  c.require(continued_fraction({3, -2, 3}) == ExtRational(12, 5), "fraction of [3 -2 3]");
  std::ostringstream out;
  c.require(cli::run({"equiv", "[-2 3 2]", "[3 -2 3]"}, out) == 0, "equiv exit code");
  c.require(links_equivalent({build_rational({-2, 3, 2})}, {build_rational({3, -2, 3})}), "links_equivalent");
  return c;
}

Check c4() {
  Check c;
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 1000);
  for (int k = 0; k < 100; ++k) {
    const ExtRational r(num(rng), den(rng));
    const TwistVector tv = canonical_form(r);
    c.require(tv.size() % 2 == 1, "even length for " + r.to_string());
    int sgn = 0;
    for (auto a : tv.entries()) {
      if (a == 0) continue;
      c.require(sgn == 0 || (a > 0 ? 1 : -1) == sgn, "mixed signs for " + r.to_string());
      sgn = a > 0 ? 1 : -1;
    }
    c.require(continued_fraction(tv) == r, "round trip for " + r.to_string());
  }
  return c;
}

Check c5() {
  Check c;
  for (int n = 1; n <= 6; ++n) {
    const TLElement& f = jones_wenzl(n).element;
    c.require(tl_multiply(f, f) == f, "idempotence n=" + std::to_string(n));
    for (int i = 0; i + 1 < n; ++i)
      c.require(tl_multiply(TLElement::hook(n, i), f).is_zero(), "hook annihilation n=" + std::to_string(n));
  }
  return c;
}

Check c6() {
  Check c;
  const auto k = kink(), km = mirror(kink());
  for (int n = 1; n <= 3; ++n) {
    const TLElement& f = jones_wenzl(n).element;
    const RatFunc mu(quantum_mu(n));
    const TLElement x = tl_multiply(tl_multiply(f, to_tl_element(state_sum(cable(k, n)))), f);
    const TLElement y = tl_multiply(tl_multiply(f, to_tl_element(state_sum(cable(km, n)))), f);
    const bool pos = x == f.scaled(mu);
    c.require(pos || x == f.scaled(mu.inverse()), "kink n=" + std::to_string(n));
    c.require(y == f.scaled(pos ? mu.inverse() : mu), "mirror kink n=" + std::to_string(n));
  }
  return c;
}

Check c7() {
  Check c;
  for (int n = 1; n <= 5; ++n) c.require(quantum_theta(n, 0) == quantum_delta(n), "theta(n,n,0) n=" + std::to_string(n));
  for (int n = 1; n <= 2; ++n) {
    const auto& b = bni_basis(n);
    for (int i = 0; i <= n; ++i) {
      std::vector<RatFunc> cheb(2 * i + 1);
      cheb[2 * i] = quantum_theta(n, i) / quantum_delta(2 * i);
      AnnulusElement direct;
      for (const auto& [m, coef] : b[i].terms())
        direct += annulus_from_expansion(state_sum(solid_torus_closure(matching_diagram(m)))).scaled(coef);
      c.require(direct == from_chebyshev(cheb), "bubble n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
  }
  return c;
}

Check c8() {
  Check c;
  auto cr = [](const TwistVector& tv) { return colored_ratios(colored_expand(build_rational(tv), 2)).ratios; };
  c.require(cr({-2, 3, 2}) == cr({3, -2, 3}), "[-2 3 2] vs [3 -2 3]");
  std::mt19937_64 rng(808);
  TwistVectorSampler s;
  s.max_length = 5;
  s.max_abs = 4;
  int pairs = 0;
  while (pairs < 20) {
    const TwistVector tv = s(rng);
    const ExtRational f = continued_fraction(tv);
    if (f.is_infinite()) continue;
    TwistVector other = canonical_form(f);
    if (other == tv) {
      // [a1, ...] = [s, a1 - s, ...] for s = +-1
      const auto& e = tv.entries();
      const std::int64_t sg = e[0] > 0 ? 1 : -1;
      if (e[0] == sg || e[0] == 0) continue;
      std::vector<std::int64_t> alt{sg, e[0] - sg};
      alt.insert(alt.end(), e.begin() + 1, e.end());
      other = TwistVector(alt);
    }
    c.require(continued_fraction(other) == f, "pair construction");
    c.require(cr(tv) == cr(other), tv.to_string() + " vs " + other.to_string());
    ++pairs;
  }
  return c;
}

Check c9() {
  Check c;
  for (const auto& tv : sample(909, 100)) {
    const RationalTangle t = build_rational(tv);
    const ConnectivityType traced = connectivity(rational_to_diagram(t));
    ConnectivityType want = ConnectivityType::Type1;
    switch (parity(t.fraction())) {
      case Parity::EvenOdd: want = ConnectivityType::Type0; break;
      case Parity::OddEven: want = ConnectivityType::TypeInf; break;
      default: break;
    }
    c.require(traced == want, "connectivity of " + tv.to_string());
  }
  c.require(homotopy_type(ExtRational(0)) == HomotopyType::TrivialKnot, "fraction 0");
  c.require(homotopy_type(ExtRational::infinity()) == HomotopyType::TwoComponent, "fraction inf");
  c.require(homotopy_type(ExtRational(1)) == HomotopyType::WindingKnot, "fraction 1");
  return c;
}

Check c10() {
  Check c;
  const CounterexampleReport r = counterexample_check();
  c.require(r.llk_t1 == 1, "llk(T1) = " + std::to_string(r.llk_t1));
  c.require(r.llk_t2 == 2, "llk(T2) = " + std::to_string(r.llk_t2));
  c.require(r.closure_t1 == r.closure_t2, "closures differ in the skein module");
  return c;
}

Check c11() {
  Check c;
  for (int n = 0; n <= 8; ++n) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * n, n);
    const mpz_class cn = binom / (n + 1);
    c.require(mpz_class(static_cast<unsigned long>(enumerate_matchings(n).size())) == cn, "catalan n=" + std::to_string(n));
  }
  // A Gram matrix with zero off-diagonal and nonzero diagonal entries is
  // nonsingular, so the basis is independent.
  for (int n = 1; n <= 3; ++n) {
    const auto& b = bni_basis(n);
    c.require(b.size() == static_cast<std::size_t>(n + 1), "basis size n=" + std::to_string(n));
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        const RatFunc g = trace_pairing(b[i], b[j]);
        c.require(i == j ? !g.is_zero() : g.is_zero(), "gram n=" + std::to_string(n));
      }
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Check()> run;
  };
  const std::vector<Criterion> all = {
      {1, "C(T) = F(T) on 200 random twist vectors", 5, c1},
      {2, "transfer matrices equal the state sum (<= 10 crossings)", 30, c2},
      {3, "[-2 3 2] and [3 -2 3] have fraction 12/5 and are equivalent", 1, c3},
      {4, "canonical forms are odd, sign uniform and round trip", 1, c4},
      {5, "Jones-Wenzl idempotence and hook annihilation for n <= 6", 60, c5},
      {6, "cabled kink equals the framing factor for n <= 3", 60, c6},
      {7, "bubble collapse and theta(n,n,0) = Delta_n", 120, c7},
      {8, "colored ratios agree on fraction-equal pairs", 120, c8},
      {9, "connectivity matches parity; homotopy anchors", 5, c9},
      {10, "clasp tangles: llk 1 and 2 with equal closures", 5, c10},
      {11, "Catalan counts and basis independence", 30, c11},
  };
  int failed = 0;
  for (const auto& cr : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= cr.limit;
    const bool pass = c.ok && in_time;
    if (!pass) ++failed;
    std::printf("criterion %2d: %s  %.3f s (limit %.0f s)  %s", cr.id, pass ? "PASS" : "FAIL", secs, cr.limit, cr.name);
    if (!c.ok) std::printf("  [%s]", c.why.c_str());
    if (c.ok && !in_time) std::printf("  [over time limit]");
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
