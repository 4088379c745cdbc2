// Brute-force state sum over all 2^c smoothings of a planar diagram.
//
// The OpenMP kernel splits the state range across threads, each filling a
// private tally that is merged afterwards. The serial kernel runs the same
// per-state resolution and is kept as the reference for tests and the
// benchmark.

#include <array>
#include <tuple>

#include "tanglekit/tlalgebra.hpp"

#ifdef TANGLEKIT_HAVE_OPENMP
#include <omp.h>
#endif

namespace tanglekit {

namespace {

struct EdgeEnd {
  int edge;
  int end;  // 0 = tail, 1 = head
};

// Flattened diagram, labels 0..E-1.
struct Resolver {
  int edges = 0;
  int boundary = 0;
  std::size_t top = 0;
  std::vector<std::array<Slot, 2>> ends;         // per edge
  std::vector<int> edge_w;                       // winding tail -> head
  std::vector<std::array<EdgeEnd, 4>> slot_end;  // per crossing slot
  std::vector<std::array<EdgeEnd, 2>> join_end;  // per join side
  std::vector<int> join_w;
  std::vector<EdgeEnd> boundary_end;  // per boundary point
  int free_contractible = 0;
  int free_essential = 0;

  explicit Resolver(const PlanarTangleDiagram& input) {
    const PlanarTangleDiagram d = canonical_labels(input);
    const auto ends_map = d.edge_ends();
    edges = static_cast<int>(ends_map.size());
    top = d.top.size();
    boundary = static_cast<int>(d.boundary_size());
    ends.resize(edges);
    edge_w.assign(edges, 0);
    slot_end.resize(d.crossings.size());
    join_end.resize(d.joins.size());
    boundary_end.resize(boundary);
    for (const auto& [e, sl] : ends_map) {
      ends[e] = sl;
      edge_w[e] = d.edge_winding(e);
      for (int x = 0; x < 2; ++x) {
        const Slot& s = sl[x];
        switch (s.kind) {
          case SlotKind::Top: boundary_end[s.index] = {e, x}; break;
          case SlotKind::Bottom: boundary_end[top + s.index] = {e, x}; break;
          case SlotKind::Crossing: slot_end[s.index][s.port] = {e, x}; break;
          case SlotKind::Join: join_end[s.index][s.port] = {e, x}; break;
        }
      }
    }
    for (const auto& j : d.joins) join_w.push_back(j.winding);
    for (int w : d.free_loops) (w == 0 ? free_contractible : free_essential)++;
  }

  // Arrive at end `at` of `edge`; returns the next edge end to leave from,
  // or edge = -1 with end = boundary index when a boundary point is hit.
  EdgeEnd step(int edge, int at, std::uint64_t state, int& w) const {
    const Slot& s = ends[edge][at];
    switch (s.kind) {
      case SlotKind::Top: return {-1, s.index};
      case SlotKind::Bottom: return {-1, static_cast<int>(top) + s.index};
      case SlotKind::Crossing: {
        const bool b_smoothing = (state >> s.index) & 1u;
        const int partner = b_smoothing ? 3 - s.port : (s.port ^ 1);
        return slot_end[s.index][partner];
      }
      case SlotKind::Join: {
        w += s.port == 0 ? join_w[s.index] : -join_w[s.index];
        return join_end[s.index][1 - s.port];
      }
    }
    return {-1, -1};
  }

  struct Outcome {
    std::vector<std::uint8_t> partner;
    int contractible = 0;
    int essential = 0;
  };

  void resolve(std::uint64_t state, Outcome& out, std::vector<char>& seen) const {
    out.partner.assign(boundary, 0);
    out.contractible = free_contractible;
    out.essential = free_essential;
    seen.assign(edges, 0);
    int w = 0;
    std::vector<char> paired(boundary, 0);
    for (int b = 0; b < boundary; ++b) {
      if (paired[b]) continue;
      EdgeEnd cur = boundary_end[b];
      while (true) {
        seen[cur.edge] = 1;
        EdgeEnd nxt = step(cur.edge, 1 - cur.end, state, w);
        if (nxt.edge < 0) {
          out.partner[b] = static_cast<std::uint8_t>(nxt.end);
          out.partner[nxt.end] = static_cast<std::uint8_t>(b);
          paired[b] = paired[nxt.end] = 1;
          break;
        }
        cur = nxt;
      }
    }
    for (int e = 0; e < edges; ++e) {
      if (seen[e]) continue;
      w = 0;
      EdgeEnd cur{e, 0};
      do {
        seen[cur.edge] = 1;
        w += cur.end == 0 ? edge_w[cur.edge] : -edge_w[cur.edge];
        cur = step(cur.edge, 1 - cur.end, state, w);
      } while (!(cur.edge == e && cur.end == 0));
      (w == 0 ? out.contractible : out.essential)++;
    }
  }
};

// (partner, essential, contractible) -> exponent of A -> count
using Tally = std::map<std::tuple<std::vector<std::uint8_t>, int, int>, std::map<int, long long>>;

void tally_range(const Resolver& r, int crossings, std::uint64_t begin, std::uint64_t end, Tally& t) {
  Resolver::Outcome out;
  std::vector<char> seen;
  for (std::uint64_t s = begin; s < end; ++s) {
    r.resolve(s, out, seen);
    const int b_count = __builtin_popcountll(s);
    t[{out.partner, out.essential, out.contractible}][crossings - 2 * b_count] += 1;
  }
}

void merge_into(Tally& dst, const Tally& src) {
  for (const auto& [key, byexp] : src) {
    auto& slot = dst[key];
    for (const auto& [e, c] : byexp) slot[e] += c;
  }
}

Expansion finish(const PlanarTangleDiagram& d, const Tally& t) {
  Expansion ex;
  ex.top = d.top.size();
  ex.bottom = d.bottom.size();
  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
  for (const auto& [key, byexp] : t) {
    const auto& [partner, essential, contractible] = key;
    while (static_cast<int>(delta_pow.size()) <= contractible) delta_pow.push_back(delta_pow.back() * loop_value());
    LaurentPoly p;
    for (const auto& [e, c] : byexp) p += LaurentPoly(Rational(static_cast<long>(c)), e);
    p *= delta_pow[contractible];
    if (p.is_zero()) continue;
    auto [it, inserted] = ex.terms.try_emplace({Matching(partner), essential}, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) ex.terms.erase(it);
    }
  }
  return ex;
}

void check_budget(const PlanarTangleDiagram& d, const StateSumOptions& opt) {
  if (static_cast<int>(d.crossings.size()) > opt.max_crossings || d.crossings.size() > 40)
    throw Error("oracle too large");
  d.validate();
}

}  // namespace

Expansion state_sum_serial(const PlanarTangleDiagram& d, const StateSumOptions& opt) {
  check_budget(d, opt);
  const Resolver r(d);
  const int c = static_cast<int>(d.crossings.size());
  Tally t;
  tally_range(r, c, 0, std::uint64_t{1} << c, t);
  return finish(d, t);
}

Expansion state_sum(const PlanarTangleDiagram& d, const StateSumOptions& opt) {
#ifdef TANGLEKIT_HAVE_OPENMP
  check_budget(d, opt);
  const int c = static_cast<int>(d.crossings.size());
  const std::uint64_t states = std::uint64_t{1} << c;
  if (c < 10 || omp_get_max_threads() == 1) return state_sum_serial(d, opt);
  const Resolver r(d);
  Tally total;
#pragma omp parallel
  {
    Tally local;
    const auto threads = static_cast<std::uint64_t>(omp_get_num_threads());
    const auto id = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t chunk = (states + threads - 1) / threads;
    const std::uint64_t begin = std::min(states, id * chunk);
    const std::uint64_t end = std::min(states, begin + chunk);
    tally_range(r, c, begin, end, local);
#pragma omp critical(tanglekit_state_sum_merge)
    merge_into(total, local);
  }
  return finish(d, total);
#else
  return state_sum_serial(d, opt);
#endif
}

TLElement to_tl_element(const Expansion& e) {
  if (e.top != e.bottom) throw Error("expansion is not a TL_n element");
  TLElement r(static_cast<int>(e.top));
  for (const auto& [key, p] : e.terms) {
    if (key.second != 0) throw Error("expansion has essential loops");
    r.add(key.first, RatFunc(p));
  }
  return r;
}

}  // namespace tanglekit
