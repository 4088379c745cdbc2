#include "tanglekit/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace tanglekit {

namespace {

template <typename F>
void for_each_occurrence(const PlanarTangleDiagram& d, F&& f) {
  for (std::size_t j = 0; j < d.top.size(); ++j) f(d.top[j], Slot{SlotKind::Top, static_cast<int>(j), 0});
  for (std::size_t j = 0; j < d.bottom.size(); ++j) f(d.bottom[j], Slot{SlotKind::Bottom, static_cast<int>(j), 0});
  for (std::size_t c = 0; c < d.crossings.size(); ++c)
    for (int s = 0; s < 4; ++s) f(d.crossings[c].edges[s], Slot{SlotKind::Crossing, static_cast<int>(c), s});
  for (std::size_t j = 0; j < d.joins.size(); ++j) {
    f(d.joins[j].from, Slot{SlotKind::Join, static_cast<int>(j), 0});
    f(d.joins[j].to, Slot{SlotKind::Join, static_cast<int>(j), 1});
  }
}

}  // namespace

int PlanarTangleDiagram::edge_winding(int e) const {
  auto it = winding.find(e);
  return it == winding.end() ? 0 : it->second;
}

std::map<int, std::array<Slot, 2>> PlanarTangleDiagram::edge_ends() const {
  std::map<int, std::array<Slot, 2>> ends;
  std::map<int, int> seen;
  for_each_occurrence(*this, [&](int e, Slot s) {
    int& count = seen[e];
    if (count >= 2) throw Error("diagram edge " + std::to_string(e) + " occurs more than twice");
    ends[e][count++] = s;
  });
  for (const auto& [e, count] : seen)
    if (count != 2) throw Error("diagram edge " + std::to_string(e) + " has a dangling end");
  return ends;
}

void PlanarTangleDiagram::validate() const {
  auto ends = edge_ends();
  for (const auto& [e, w] : winding)
    if (!ends.count(e)) throw Error("winding given for unknown edge " + std::to_string(e));
  if (!annulus) {
    for (const auto& [e, w] : winding)
      if (w != 0) throw Error("disk diagram carries a nonzero winding");
    for (int w : free_loops)
      if (w != 0) throw Error("disk diagram carries a nonzero winding");
    for (const auto& j : joins)
      if (j.winding != 0) throw Error("disk diagram carries a nonzero winding");
  }
}

std::vector<int> PlanarTangleDiagram::edge_labels() const {
  std::vector<int> labels;
  for_each_occurrence(*this, [&](int e, Slot) { labels.push_back(e); });
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

PlanarTangleDiagram canonical_labels(const PlanarTangleDiagram& d) {
  std::map<int, int> rename;
  for_each_occurrence(d, [&](int e, Slot) { rename.try_emplace(e, static_cast<int>(rename.size())); });
  PlanarTangleDiagram r;
  r.annulus = d.annulus;
  r.free_loops = d.free_loops;
  for (int e : d.top) r.top.push_back(rename.at(e));
  for (int e : d.bottom) r.bottom.push_back(rename.at(e));
  for (const auto& c : d.crossings) {
    Crossing x;
    for (int s = 0; s < 4; ++s) x.edges[s] = rename.at(c.edges[s]);
    r.crossings.push_back(x);
  }
  for (const auto& j : d.joins) r.joins.push_back({rename.at(j.from), rename.at(j.to), j.winding});
  for (const auto& [e, w] : d.winding)
    if (w != 0 && rename.count(e)) r.winding[rename.at(e)] = w;
  return r;
}

// ---------------------------------------------------------------------------

int DiagramBuilder::new_edge() {
  parent_.push_back(static_cast<int>(parent_.size()));
  return static_cast<int>(parent_.size()) - 1;
}

int DiagramBuilder::find(int e) const {
  while (parent_[e] != e) {
    parent_[e] = parent_[parent_[e]];
    e = parent_[e];
  }
  return e;
}

void DiagramBuilder::merge(int a, int b) {
  a = find(a);
  b = find(b);
  if (a != b) parent_[std::max(a, b)] = std::min(a, b);
}

void DiagramBuilder::add_crossing(int e0, int e1, int e2, int e3) { crossings_.push_back({{e0, e1, e2, e3}}); }

void DiagramBuilder::add_join(int from, int to, int winding) { joins_.push_back({from, to, winding}); }

void DiagramBuilder::add_free_loop(int winding) { free_loops_.push_back(winding); }

PlanarTangleDiagram DiagramBuilder::build() const {
  PlanarTangleDiagram d;
  d.annulus = annulus_;
  d.free_loops = free_loops_;
  for (int e : top_) d.top.push_back(find(e));
  for (int e : bottom_) d.bottom.push_back(find(e));
  for (const auto& c : crossings_) {
    Crossing x;
    for (int s = 0; s < 4; ++s) x.edges[s] = find(c.edges[s]);
    d.crossings.push_back(x);
  }
  for (const auto& j : joins_) d.joins.push_back({find(j.from), find(j.to), j.winding});
  d = canonical_labels(d);
  d.validate();
  return d;
}

// ---------------------------------------------------------------------------

PlanarTangleDiagram cable(const PlanarTangleDiagram& d, int n) {
  if (n < 1) throw Error("cabling requires n >= 1");
  if (n == 1) return d;
  const auto ends = d.edge_ends();
  std::map<int, int> base;
  int next = 0;
  for (const auto& [e, _] : ends) {
    base[e] = next;
    next += n;
  }
  auto copy = [&](int e, int k) { return base.at(e) + k; };
  auto is_tail = [&](int e, SlotKind kind, int index, int port) {
    const Slot& s = ends.at(e)[0];
    if (s.kind == kind && s.index == index && s.port == port) return true;
    const Slot& h = ends.at(e)[1];
    if (h.kind == kind && h.index == index && h.port == port) return false;
    throw Error("cable: inconsistent edge ends");
  };

  PlanarTangleDiagram r;
  r.annulus = d.annulus;
  for (const auto& [e, w] : d.winding)
    for (int k = 0; k < n; ++k)
      if (w != 0) r.winding[copy(e, k)] = w;
  for (int w : d.free_loops)
    for (int k = 0; k < n; ++k) r.free_loops.push_back(w);

  for (std::size_t j = 0; j < d.top.size(); ++j) {
    const int e = d.top[j];
    const bool tail = is_tail(e, SlotKind::Top, static_cast<int>(j), 0);
    for (int pos = 0; pos < n; ++pos) r.top.push_back(copy(e, tail ? n - 1 - pos : pos));
  }
  for (std::size_t j = 0; j < d.bottom.size(); ++j) {
    const int e = d.bottom[j];
    const bool tail = is_tail(e, SlotKind::Bottom, static_cast<int>(j), 0);
    for (int pos = 0; pos < n; ++pos) r.bottom.push_back(copy(e, tail ? pos : n - 1 - pos));
  }

  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& x = d.crossings[c];
    // copy of the edge at slot s occupying counterclockwise position p
    auto at = [&](int s, int p) {
      const int e = x.edges[s];
      return copy(e, is_tail(e, SlotKind::Crossing, static_cast<int>(c), s) ? n - 1 - p : p);
    };
    // h[r][col]: under-strand rows, v[col][r]: over-strand columns
    std::vector<std::vector<int>> h(n, std::vector<int>(n + 1)), v(n, std::vector<int>(n + 1));
    for (int row = 0; row < n; ++row) {
      h[row][0] = at(0, row);
      h[row][n] = at(2, n - 1 - row);
      for (int col = 1; col < n; ++col) h[row][col] = next++;
    }
    for (int col = 0; col < n; ++col) {
      v[col][n] = at(1, col);
      v[col][0] = at(3, n - 1 - col);
      for (int row = 1; row < n; ++row) v[col][row] = next++;
    }
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col)
        r.crossings.push_back({{h[row][col], v[col][row + 1], h[row][col + 1], v[col][row]}});
  }

  for (std::size_t j = 0; j < d.joins.size(); ++j) {
    const auto& jn = d.joins[j];
    const bool from_head = !is_tail(jn.from, SlotKind::Join, static_cast<int>(j), 0);
    const bool to_tail = is_tail(jn.to, SlotKind::Join, static_cast<int>(j), 1);
    for (int k = 0; k < n; ++k) {
      const int m = from_head ? k : n - 1 - k;  // index from the left of the direction of travel
      const int k2 = to_tail ? m : n - 1 - m;
      r.joins.push_back({copy(jn.from, k), copy(jn.to, k2), jn.winding});
    }
  }
  r = canonical_labels(r);
  r.validate();
  return r;
}

PlanarTangleDiagram solid_torus_closure(const PlanarTangleDiagram& d) {
  if (d.annulus) throw Error("closure expects a disk diagram");
  if (d.top.size() != d.bottom.size() || d.top.size() % 2 != 0 || d.top.empty())
    throw Error("closure expects four equal boundary clusters");
  const std::size_t m = d.top.size() / 2;
  PlanarTangleDiagram r = d;
  r.annulus = true;
  r.top.clear();
  r.bottom.clear();
  for (std::size_t j = 0; j < m; ++j) {
    r.joins.push_back({d.top[m + j], d.top[m - 1 - j], 1});
    r.joins.push_back({d.bottom[m + j], d.bottom[m - 1 - j], 1});
  }
  r = canonical_labels(r);
  r.validate();
  return r;
}

PlanarTangleDiagram mirror(const PlanarTangleDiagram& d) {
  PlanarTangleDiagram r = d;
  for (auto& c : r.crossings) std::rotate(c.edges.begin(), c.edges.begin() + 1, c.edges.end());
  return r;
}

}  // namespace tanglekit
