#include "tanglekit/annulus.hpp"

namespace tanglekit {

AnnulusElement AnnulusElement::z_power(int k, const RatFunc& c) {
  AnnulusElement e;
  e.add(k, c);
  return e;
}

RatFunc AnnulusElement::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? RatFunc() : it->second;
}

int AnnulusElement::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

void AnnulusElement::add(int k, const RatFunc& c) {
  if (k < 0) throw Error("negative power of z");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AnnulusElement& AnnulusElement::operator+=(const AnnulusElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

AnnulusElement AnnulusElement::scaled(const RatFunc& c) const {
  AnnulusElement r;
  for (const auto& [k, v] : terms_) r.add(k, v * c);
  return r;
}

std::string AnnulusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    if (k == 1) s += "*z";
    if (k > 1) s += "*z^" + std::to_string(k);
  }
  return s;
}

AnnulusElement annulus_from_expansion(const Expansion& e) {
  if (e.top != 0 || e.bottom != 0) throw Error("annulus expansion still has boundary points");
  AnnulusElement r;
  for (const auto& [key, p] : e.terms) r.add(key.second, RatFunc(p));
  return r;
}

AnnulusElement closure_bracket(const RationalTangle& t) {
  const BracketVec2 v = bracket_vector(t);
  AnnulusElement r;
  r.add(0, RatFunc(v.alpha * loop_value()));
  r.add(2, RatFunc(v.beta));
  return r;
}

AnnulusElement closure_bracket(const PlanarTangleDiagram& d, const StateSumOptions& opt) {
  return annulus_from_expansion(state_sum(solid_torus_closure(d), opt));
}

namespace {

// S_k as integer coefficient lists in z.
const std::vector<long>& chebyshev_poly(int k) {
  static thread_local std::vector<std::vector<long>> s{{1}, {0, 1}};
  while (static_cast<int>(s.size()) <= k) {
    const auto& a = s[s.size() - 1];
    const auto& b = s[s.size() - 2];
    std::vector<long> next(a.size() + 1, 0);
    for (std::size_t j = 0; j < a.size(); ++j) next[j + 1] += a[j];
    for (std::size_t j = 0; j < b.size(); ++j) next[j] -= b[j];
    s.push_back(std::move(next));
  }
  return s[k];
}

}  // namespace

std::vector<RatFunc> chebyshev_convert(const AnnulusElement& e) {
  std::map<int, RatFunc> rest(e.terms().begin(), e.terms().end());
  std::vector<RatFunc> out(std::max(0, e.degree() + 1));
  while (!rest.empty()) {
    const int d = rest.rbegin()->first;
    const RatFunc c = rest.rbegin()->second;
    out[d] += c;
    const auto& s = chebyshev_poly(d);
    for (int j = 0; j <= d; ++j) {
      if (s[j] == 0) continue;
      RatFunc& slot = rest[j];
      slot -= c * RatFunc(s[j]);
      if (slot.is_zero()) rest.erase(j);
    }
  }
  return out;
}

AnnulusElement from_chebyshev(const std::vector<RatFunc>& coords) {
  AnnulusElement r;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].is_zero()) continue;
    const auto& s = chebyshev_poly(static_cast<int>(k));
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s[j] != 0) r.add(static_cast<int>(j), coords[k] * RatFunc(s[j]));
  }
  return r;
}

ExtRational link_fraction(const SolidTorusRationalLink& l) { return l.source.fraction(); }

ExtRational link_fraction_from_closure(const AnnulusElement& e) {
  for (const auto& [k, c] : e.terms())
    if (k != 0 && k != 2) throw Error("closure is not of the form alpha delta + beta z^2");
  const RatFunc alpha = e.coeff(0) / RatFunc(loop_value());
  const RatFunc beta = e.coeff(2);
  if (!alpha.is_laurent() || !beta.is_laurent()) throw Error("closure coefficients are not Laurent polynomials");
  return c_invariant({alpha.num(), beta.num()});
}

bool links_equivalent(const SolidTorusRationalLink& a, const SolidTorusRationalLink& b) {
  return link_fraction(a) == link_fraction(b);
}

std::string to_string(HomotopyType h) {
  switch (h) {
    case HomotopyType::TwoComponent: return "two_component";
    case HomotopyType::TrivialKnot: return "trivial_knot";
    case HomotopyType::WindingKnot: return "winding_knot";
  }
  return "?";
}

HomotopyType homotopy_type(const ExtRational& fraction) {
  switch (parity(fraction)) {
    case Parity::OddEven: return HomotopyType::TwoComponent;
    case Parity::EvenOdd: return HomotopyType::TrivialKnot;
    case Parity::OddOdd: return HomotopyType::WindingKnot;
  }
  throw Error("unreachable parity");
}

HomotopyType homotopy_type(const SolidTorusRationalLink& l) { return homotopy_type(link_fraction(l)); }

AnnulusElement cluster_closure(const TLElement& x) {
  const int N = x.n();
  if (N % 2 != 0 || N == 0) throw Error("closure expects four equal boundary clusters");
  const int n = N / 2;
  GluePlan plan;
  for (int j = 0; j < n; ++j) {
    plan.links.push_back({n + j, n - 1 - j});
    plan.links.push_back({N + n + j, N + n - 1 - j});
    plan.link_winding.push_back(1);
    plan.link_winding.push_back(1);
  }
  const TLElement* f[] = {&x};
  AnnulusElement r;
  for (const auto& [key, c] : glue_linear(f, plan).terms) r.add(key.second, c);
  return r;
}

AnnulusElement colored_closure(const std::vector<RatFunc>& gammas, int n) {
  if (static_cast<int>(gammas.size()) != n + 1) throw Error("expected n + 1 coordinates");
  std::vector<RatFunc> cheb(2 * n + 1);
  for (int i = 0; i <= n; ++i) {
    if (gammas[i].is_zero()) continue;
    cheb[2 * i] = gammas[i] * quantum_theta(n, i) / quantum_delta(2 * i);
  }
  return from_chebyshev(cheb);
}

AnnulusElement colored_closure(const RationalTangle& t, int n) { return colored_closure(colored_expand(t, n), n); }

AnnulusElement colored_closure(const PlanarTangleDiagram& d, int n, const StateSumOptions& opt) {
  return colored_closure(colored_expand(d, n, opt), n);
}

std::vector<RatFunc> gamma_ratio_invariants(const AnnulusElement& e) {
  if (e.is_zero()) throw Error("zero skein element");
  const auto cheb = chebyshev_convert(e);
  int k = static_cast<int>(cheb.size()) - 1;
  while (k >= 0 && cheb[k].is_zero()) --k;
  std::vector<RatFunc> r;
  for (int j = 0; j < k; ++j) r.push_back(cheb[j] / cheb[k]);
  return r;
}

CounterexampleReport counterexample_check() {
  CounterexampleReport r;
  const PlanarTangleDiagram t1 = clasp_T1(), t2 = clasp_T2();
  r.llk_t1 = left_linking_number(t1);
  r.llk_t2 = left_linking_number(t2);
  r.closure_t1 = closure_bracket(t1);
  r.closure_t2 = closure_bracket(t2);
  r.distinguished_by_llk = r.llk_t1 != r.llk_t2;
  r.closures_skein_equal = r.closure_t1 == r.closure_t2;
  return r;
}

}  // namespace tanglekit
