#include "tanglekit/tlalgebra.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace tanglekit {

// ---------------------------------------------------------------------------
// Matchings

Matching::Matching(std::vector<std::uint8_t> partner) : partner_(std::move(partner)) {
  for (std::size_t p = 0; p < partner_.size(); ++p) {
    const auto q = partner_[p];
    if (q >= partner_.size() || q == p || partner_[q] != p) throw Error("not a perfect matching");
  }
}

Matching Matching::identity(int n) {
  std::vector<std::uint8_t> p(2 * n);
  for (int j = 0; j < n; ++j) {
    p[j] = static_cast<std::uint8_t>(n + j);
    p[n + j] = static_cast<std::uint8_t>(j);
  }
  return Matching(std::move(p));
}

Matching Matching::hook(int n, int i) {
  if (i < 0 || i + 1 >= n) throw Error("hook index out of range");
  std::vector<std::uint8_t> p(2 * n);
  for (int j = 0; j < n; ++j) {
    p[j] = static_cast<std::uint8_t>(n + j);
    p[n + j] = static_cast<std::uint8_t>(j);
  }
  p[i] = static_cast<std::uint8_t>(i + 1);
  p[i + 1] = static_cast<std::uint8_t>(i);
  p[n + i] = static_cast<std::uint8_t>(n + i + 1);
  p[n + i + 1] = static_cast<std::uint8_t>(n + i);
  return Matching(std::move(p));
}

namespace {

// Position of TL point p when walking the disk boundary clockwise:
// top row left to right, then bottom row right to left.
int cyclic_position(int p, int n) { return p < n ? p : 3 * n - 1 - p; }

int tl_point(int cyclic, int n) { return cyclic < n ? cyclic : 3 * n - 1 - cyclic; }

}  // namespace

bool Matching::is_noncrossing() const {
  const int n = strands();
  std::vector<int> cyc(partner_.size());
  for (std::size_t p = 0; p < partner_.size(); ++p)
    cyc[cyclic_position(static_cast<int>(p), n)] = cyclic_position(partner_[p], n);
  for (int a = 0; a < 2 * n; ++a) {
    const int b = cyc[a];
    if (b < a) continue;
    for (int c = a + 1; c < b; ++c)
      if (cyc[c] < a || cyc[c] > b) return false;
  }
  return true;
}

std::vector<Matching> enumerate_matchings(int n) {
  std::vector<Matching> out;
  std::vector<int> cyc(2 * n, -1);
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int p = 0; p < 2 * n; ++p)
      if (cyc[p] < 0) {
        first = p;
        break;
      }
    if (first < 0) {
      std::vector<std::uint8_t> partner(2 * n);
      for (int p = 0; p < 2 * n; ++p) partner[tl_point(p, n)] = static_cast<std::uint8_t>(tl_point(cyc[p], n));
      out.emplace_back(std::move(partner));
      return;
    }
    // Pair `first` with a free point such that the free points strictly
    // between them can be matched among themselves without crossing out.
    int free_between = 0;
    for (int q = first + 1; q < 2 * n; ++q) {
      if (cyc[q] >= 0) break;  // cannot reach past a matched point without crossing
      if (free_between % 2 == 0) {
        cyc[first] = q;
        cyc[q] = first;
        rec();
        cyc[first] = cyc[q] = -1;
      }
      ++free_between;
    }
  };
  if (n == 0) return {Matching()};
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t catalan(int n) {
  // C(n) = binom(2n, n) / (n + 1), computed with exact intermediate steps
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  b /= (n + 1);
  return b.get_ui();
}

// ---------------------------------------------------------------------------
// Gluing

GlueOutcome glue(std::span<const Matching* const> pieces, const GluePlan& plan) {
  std::vector<int> arc;
  for (const Matching* m : pieces) {
    const int off = static_cast<int>(arc.size());
    for (std::size_t p = 0; p < m->points(); ++p) arc.push_back(off + m->partner(static_cast<int>(p)));
  }
  const int total = static_cast<int>(arc.size());
  std::vector<int> link(total, -1), link_w(total, 0), out_index(total, -1);
  for (std::size_t k = 0; k < plan.links.size(); ++k) {
    const auto [a, b] = plan.links[k];
    if (a < 0 || b < 0 || a >= total || b >= total || link[a] >= 0 || link[b] >= 0)
      throw Error("glue: malformed link");
    const int w = plan.link_winding.empty() ? 0 : plan.link_winding[k];
    link[a] = b;
    link[b] = a;
    link_w[a] = w;
    link_w[b] = -w;
  }
  for (std::size_t k = 0; k < plan.outputs.size(); ++k) {
    const int p = plan.outputs[k];
    if (p < 0 || p >= total || link[p] >= 0 || out_index[p] >= 0) throw Error("glue: malformed output");
    out_index[p] = static_cast<int>(k);
  }
  for (int p = 0; p < total; ++p)
    if (link[p] < 0 && out_index[p] < 0) throw Error("glue: dangling point");

  GlueOutcome r;
  std::vector<std::uint8_t> partner(plan.outputs.size());
  std::vector<char> seen(total, 0);
  for (std::size_t k = 0; k < plan.outputs.size(); ++k) {
    int cur = plan.outputs[k];
    if (seen[cur]) continue;
    seen[cur] = 1;
    while (true) {
      const int h = arc[cur];
      seen[h] = 1;
      if (out_index[h] >= 0) {
        partner[k] = static_cast<std::uint8_t>(out_index[h]);
        partner[out_index[h]] = static_cast<std::uint8_t>(k);
        break;
      }
      cur = link[h];
      seen[cur] = 1;
    }
  }
  for (int p = 0; p < total; ++p) {
    if (seen[p]) continue;
    int w = 0, cur = p;
    do {
      seen[cur] = 1;
      const int h = arc[cur];
      seen[h] = 1;
      w += link_w[h];
      cur = link[h];
    } while (cur != p);
    if (w == 0)
      ++r.contractible;
    else
      ++r.essential;
  }
  r.matching = Matching(std::move(partner));
  return r;
}

// ---------------------------------------------------------------------------
// TLElement

TLElement::TLElement(int n, const Matching& m, const RatFunc& c) : n_(n) {
  if (static_cast<int>(m.points()) != 2 * n) throw Error("matching size does not match TL_n");
  add(m, c);
}

RatFunc TLElement::coeff(const Matching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RatFunc() : it->second;
}

void TLElement::add(const Matching& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& o) {
  if (o.n_ != n_) throw Error("TL size mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
  if (o.n_ != n_) throw Error("TL size mismatch");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

TLElement TLElement::scaled(const RatFunc& c) const {
  TLElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}


namespace {

// Coefficients over one shared denominator, so the inner loop of a gluing
// only multiplies and adds Laurent polynomials.
struct SharedDenominator {
  std::vector<std::pair<const Matching*, LaurentPoly>> terms;
  LaurentPoly den{1};
};

SharedDenominator share_denominator(const TLElement& x) {
  SharedDenominator r;
  std::vector<LaurentPoly> seen;
  for (const auto& [m, c] : x.terms()) {
    if (std::find(seen.begin(), seen.end(), c.den()) != seen.end()) continue;
    seen.push_back(c.den());
    r.den *= exact_quotient(c.den(), poly_gcd(r.den, c.den()));
  }
  for (const auto& [m, c] : x.terms()) r.terms.emplace_back(&m, c.num() * exact_quotient(r.den, c.den()));
  return r;
}

}  // namespace

GlueSum glue_linear(std::span<const TLElement* const> factors, const GluePlan& plan) {
  std::vector<SharedDenominator> shared;
  LaurentPoly den(1);
  for (const TLElement* f : factors) {
    shared.push_back(share_denominator(*f));
    den *= shared.back().den;
  }
  // (matching, essential, contractible) -> numerator over den
  std::map<std::tuple<Matching, int, int>, LaurentPoly> acc;
  std::vector<const Matching*> pieces(factors.size());
  std::function<void(std::size_t, const LaurentPoly&)> rec = [&](std::size_t k, const LaurentPoly& c) {
    if (k == factors.size()) {
      GlueOutcome g = glue(pieces, plan);
      acc[std::make_tuple(std::move(g.matching), g.essential, g.contractible)] += c;
      return;
    }
    for (const auto& [m, v] : shared[k].terms) {
      pieces[k] = m;
      rec(k + 1, k == 0 ? v : c * v);
    }
  };
  rec(0, LaurentPoly(1));
  std::map<std::pair<Matching, int>, LaurentPoly> nums;
  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
  for (auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    const auto& [m, ess, con] = key;
    while (static_cast<int>(delta_pow.size()) <= con) delta_pow.push_back(delta_pow.back() * loop_value());
    nums[{m, ess}] += c * delta_pow[con];
  }
  GlueSum out;
  for (auto& [key, c] : nums)
    if (!c.is_zero()) out.terms.emplace(key, RatFunc(c, den));
  return out;
}

TLElement tl_multiply(const TLElement& x, const TLElement& y) {
  if (x.n() != y.n()) throw Error("TL size mismatch");
  const int n = x.n();
  GluePlan plan;
  for (int j = 0; j < n; ++j) plan.links.push_back({n + j, 2 * n + j});
  for (int j = 0; j < n; ++j) plan.outputs.push_back(j);
  for (int j = 0; j < n; ++j) plan.outputs.push_back(3 * n + j);
  const TLElement* f[] = {&x, &y};
  TLElement r(n);
  for (auto& [key, c] : glue_linear(f, plan).terms) r.add(key.first, c);
  return r;
}

TLElement tl_tensor(const TLElement& x, const TLElement& y) {
  const int a = x.n(), b = y.n(), n = a + b;
  TLElement r(n);
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      // x occupies columns 0..a-1, y columns a..n-1
      auto place_x = [&](int p) { return p < a ? p : n + (p - a); };
      auto place_y = [&](int p) { return p < b ? a + p : n + a + (p - b); };
      std::vector<std::uint8_t> partner(2 * n);
      for (int p = 0; p < 2 * a; ++p) partner[place_x(p)] = static_cast<std::uint8_t>(place_x(mx.partner(p)));
      for (int p = 0; p < 2 * b; ++p) partner[place_y(p)] = static_cast<std::uint8_t>(place_y(my.partner(p)));
      r.add(Matching(std::move(partner)), cx * cy);
    }
  return r;
}

RatFunc markov_trace(const TLElement& x) {
  const int n = x.n();
  GluePlan plan;
  for (int j = 0; j < n; ++j) plan.links.push_back({j, n + j});
  const TLElement* f[] = {&x};
  RatFunc r;
  for (auto& [key, c] : glue_linear(f, plan).terms) r += c;
  return r;
}

// ---------------------------------------------------------------------------
// Jones-Wenzl

RatFunc delta_recurrence(int n) {
  if (n < 0) throw Error("negative color");
  RatFunc prev(1), cur(loop_value());
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    RatFunc next = cur * RatFunc(loop_value()) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

const JonesWenzl& jones_wenzl(int n) {
  if (n < 1) throw Error("Jones-Wenzl projector needs n >= 1");
  static std::mutex mu;
  static std::vector<std::unique_ptr<JonesWenzl>> cache;
  std::lock_guard lock(mu);
  if (cache.empty()) cache.push_back(std::make_unique<JonesWenzl>(JonesWenzl{1, TLElement::identity(1)}));
  while (static_cast<int>(cache.size()) < n) {
    const JonesWenzl& prev = *cache.back();
    const int k = prev.n;  // build f^(k+1)
    TLElement f = tl_tensor(prev.element, TLElement::identity(1));
    TLElement hook = TLElement::hook(k + 1, k - 1);
    TLElement sandwich = tl_multiply(tl_multiply(f, hook), f);
    RatFunc ratio = delta_recurrence(k - 1) / delta_recurrence(k);
    f -= sandwich.scaled(ratio);
    cache.push_back(std::make_unique<JonesWenzl>(JonesWenzl{k + 1, std::move(f)}));
  }
  return *cache[n - 1];
}

LaurentPoly quantum_mu(int n) {
  return LaurentPoly(Rational(n % 2 == 0 ? 1 : -1), -n * n - 2 * n);
}

RatFunc quantum_delta(int n) {
  if (n == 0) return RatFunc(1);
  return markov_trace(jones_wenzl(n).element);
}

QuantumCoeffs quantum_coeffs(int n, int i) {
  if (i < 0 || i > n) throw Error("quantum_coeffs requires 0 <= i <= n");
  return {quantum_delta(n), quantum_theta(n, i), quantum_mu(n)};
}

}  // namespace tanglekit
