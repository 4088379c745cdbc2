#include "tanglekit/colored.hpp"

#include <memory>
#include <mutex>

namespace tanglekit {

namespace {

TLElement from_glue(const GlueSum& g, int strands) {
  TLElement r(strands);
  for (const auto& [key, c] : g.terms) {
    if (key.second != 0) throw Error("disk gluing produced an essential loop");
    r.add(key.first, c);
  }
  return r;
}

RatFunc closed_value(const GlueSum& g) {
  RatFunc r;
  for (const auto& [key, c] : g.terms) {
    if (key.second != 0) throw Error("disk gluing produced an essential loop");
    r += c;
  }
  return r;
}

void check_color(int n) {
  if (n < 1) throw Error("color must be at least 1");
}

// Crossingless middle of B_{n,i}: n-i strands down each side and f^(2i)
// running across.
TLElement bni_middle(int n, int i) {
  const int N = 2 * n;
  auto nw = [&](int k) { return k; };
  auto ne = [&](int k) { return n + k; };
  auto sw = [&](int k) { return N + k; };
  auto se = [&](int k) { return N + n + k; };
  if (i == 0) return TLElement::identity(N);
  const TLElement& band = jones_wenzl(2 * i).element;
  // band TL point -> TL_{2n} point
  std::vector<int> to_outer(4 * i);
  for (int t = 0; t < i; ++t) {
    to_outer[t] = nw(n - 1 - t);
    to_outer[i + t] = sw(n - i + t);
    to_outer[2 * i + t] = ne(t);
    to_outer[3 * i + t] = se(i - 1 - t);
  }
  TLElement r(N);
  for (const auto& [m, c] : band.terms()) {
    std::vector<std::uint8_t> partner(2 * N);
    for (int k = 0; k < n - i; ++k) {
      partner[nw(k)] = static_cast<std::uint8_t>(sw(k));
      partner[sw(k)] = static_cast<std::uint8_t>(nw(k));
    }
    for (int k = i; k < n; ++k) {
      partner[ne(k)] = static_cast<std::uint8_t>(se(k));
      partner[se(k)] = static_cast<std::uint8_t>(ne(k));
    }
    for (int q = 0; q < 4 * i; ++q) partner[to_outer[q]] = static_cast<std::uint8_t>(to_outer[m.partner(q)]);
    r.add(Matching(std::move(partner)), c);
  }
  return r;
}

struct BasisEntry {
  TLElement element;
  RatFunc self_pairing;
  bool paired = false;
};

BasisEntry& bni_entry(int n, int i) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<BasisEntry>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({n, i});
    if (it != cache.end()) return *it->second;
  }
  const TLElement& p = cluster_projector(n);
  auto e = std::make_unique<BasisEntry>();
  e->element = i == 0 ? p : tl_multiply(tl_multiply(p, bni_middle(n, i)), p);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace({n, i}, std::move(e));
  return *it->second;
}

const RatFunc& self_pairing(int n, int i) {
  static std::mutex mu;
  BasisEntry& e = bni_entry(n, i);
  std::lock_guard lock(mu);
  if (!e.paired) {
    e.self_pairing = trace_pairing(e.element, e.element);
    e.paired = true;
  }
  return e.self_pairing;
}

}  // namespace

const TLElement& cluster_projector(int n) {
  check_color(n);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<TLElement>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    const TLElement& f = jones_wenzl(n).element;
    slot = std::make_unique<TLElement>(tl_tensor(f, f));
  }
  return *slot;
}

TLElement cluster_zero(int n) {
  check_color(n);
  const int N = 2 * n;
  std::vector<std::uint8_t> partner(2 * N);
  for (int j = 0; j < N; ++j) {
    partner[j] = static_cast<std::uint8_t>(N - 1 - j);
    partner[N + j] = static_cast<std::uint8_t>(2 * N - 1 - j);
  }
  return TLElement(N, Matching(std::move(partner)));
}

TLElement cluster_inf(int n) {
  check_color(n);
  return TLElement::identity(2 * n);
}

TLElement cluster_sum(const TLElement& x, const TLElement& y, int n) {
  const int N = 2 * n;
  if (x.n() != N || y.n() != N) throw Error("cluster sum expects TL_2n elements");
  const int off = 2 * N;
  GluePlan plan;
  for (int j = 0; j < n; ++j) {
    plan.links.push_back({n + j, off + n - 1 - j});
    plan.links.push_back({N + n + j, off + N + n - 1 - j});
  }
  for (int j = 0; j < n; ++j) plan.outputs.push_back(j);
  for (int j = 0; j < n; ++j) plan.outputs.push_back(off + n + j);
  for (int j = 0; j < n; ++j) plan.outputs.push_back(N + j);
  for (int j = 0; j < n; ++j) plan.outputs.push_back(off + N + n + j);
  const TLElement* f[] = {&x, &y};
  return from_glue(glue_linear(f, plan), N);
}

const TLElement& cabled_crossing(int n, int sign) {
  check_color(n);
  if (sign != 1 && sign != -1) throw Error("crossing sign must be +1 or -1");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<TLElement>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, sign}];
  if (!slot) {
    const int N = 2 * n;
    const RatFunc on_id(LaurentPoly::A(sign)), on_hook(LaurentPoly::A(-sign));
    TLElement x = TLElement::identity(N);
    for (int r = n - 1; r >= 0; --r)
      for (int j = r; j < r + n; ++j) x = x.scaled(on_id) + tl_multiply(x, TLElement::hook(N, j)).scaled(on_hook);
    slot = std::make_unique<TLElement>(std::move(x));
  }
  return *slot;
}

TLElement cable_word(const TwistWord& w, int n) {
  TLElement x = w.start == StartTangle::Zero ? cluster_zero(n) : cluster_inf(n);
  for (const auto& m : w.moves) {
    const TLElement& c = cabled_crossing(n, m.sign);
    x = m.kind == TwistKind::Right ? cluster_sum(x, c, n) : tl_multiply(x, c);
  }
  return x;
}

TLElement colored_tangle(const RationalTangle& t, int n) {
  const TLElement& p = cluster_projector(n);
  return tl_multiply(tl_multiply(p, cable_word(to_twist_word(t), n)), p);
}

TLElement colored_tangle(const PlanarTangleDiagram& d, int n, const StateSumOptions& opt) {
  check_color(n);
  if (!d.is_two_tangle() || d.annulus) throw Error("colored tangle expects a disk 2-tangle");
  if (closed_component_count(d) != 0) throw Error("colored tangle expects no closed components");
  const TLElement x = to_tl_element(state_sum(cable(d, n), opt));
  const TLElement& p = cluster_projector(n);
  return tl_multiply(tl_multiply(p, x), p);
}

TLElement flip(const TLElement& x) {
  const int N = x.n();
  auto f = [N](int p) { return p < N ? p + N : p - N; };
  TLElement r(N);
  for (const auto& [m, c] : x.terms()) {
    std::vector<std::uint8_t> partner(2 * N);
    for (int p = 0; p < 2 * N; ++p) partner[f(p)] = static_cast<std::uint8_t>(f(m.partner(p)));
    r.add(Matching(std::move(partner)), c);
  }
  return r;
}

RatFunc trace_pairing(const TLElement& x, const TLElement& y) {
  if (x.n() != y.n()) throw Error("TL size mismatch");
  const int N = x.n();
  GluePlan plan;
  for (int p = 0; p < 2 * N; ++p) plan.links.push_back({p, 2 * N + p});
  const TLElement* f[] = {&x, &y};
  return closed_value(glue_linear(f, plan));
}

RatFunc numerator_closure(const TLElement& x) {
  const int N = x.n();
  if (N % 2 != 0) throw Error("numerator closure expects TL_2n");
  const int n = N / 2;
  GluePlan plan;
  for (int j = 0; j < n; ++j) {
    plan.links.push_back({j, N - 1 - j});
    plan.links.push_back({N + j, 2 * N - 1 - j});
  }
  const TLElement* f[] = {&x};
  return closed_value(glue_linear(f, plan));
}

RatFunc quantum_theta(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw Error("theta requires 0 <= i <= n and n >= 1");
  return numerator_closure(bni_entry(n, i).element);
}

const std::vector<TLElement>& bni_basis(int n) {
  check_color(n);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<TLElement>>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto v = std::make_unique<std::vector<TLElement>>();
  for (int i = 0; i <= n; ++i) v->push_back(bni_entry(n, i).element);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace(n, std::move(v));
  return *it->second;
}

std::vector<RatFunc> colored_expand(const TLElement& tn, int n) {
  check_color(n);
  if (tn.n() != 2 * n) throw Error("colored element must live in TL_2n");
  std::vector<RatFunc> gammas;
  for (int i = 0; i <= n; ++i) {
    const RatFunc& norm = self_pairing(n, i);
    if (norm.is_zero()) throw Error("basis failure");
    gammas.push_back(trace_pairing(tn, bni_entry(n, i).element) / norm);
  }
  return gammas;
}

std::vector<RatFunc> colored_expand(const RationalTangle& t, int n) { return colored_expand(colored_tangle(t, n), n); }

std::vector<RatFunc> colored_expand(const PlanarTangleDiagram& d, int n, const StateSumOptions& opt) {
  return colored_expand(colored_tangle(d, n, opt), n);
}

TLElement colored_reconstruct(const std::vector<RatFunc>& gammas, int n) {
  if (static_cast<int>(gammas.size()) != n + 1) throw Error("expected n + 1 coordinates");
  TLElement r(2 * n);
  for (int i = 0; i <= n; ++i) r += bni_entry(n, i).element.scaled(gammas[i]);
  return r;
}

ColoredRatios colored_ratios(const std::vector<RatFunc>& gammas) {
  int k = static_cast<int>(gammas.size()) - 1;
  while (k >= 0 && gammas[k].is_zero()) --k;
  if (k < 0) throw Error("zero skein element");
  ColoredRatios r;
  r.normalizer = k;
  r.flagged = k != static_cast<int>(gammas.size()) - 1;
  for (std::size_t i = 0; i + 1 < gammas.size(); ++i) r.ratios.push_back(gammas[i] / gammas[k]);
  return r;
}

}  // namespace tanglekit
