#pragma once

// Planar diagrams of tangles in the disk and links in the annulus.
//
// Edges are integer labels. Every edge occurs exactly twice among the
// occurrence slots, scanned in this order:
//   top boundary points (left to right), bottom boundary points (left to
//   right), crossing slots (crossing order, slot 0..3), join ends (from, to).
// The first occurrence is the edge's tail; windings are counted while
// travelling from tail to head.
//
// A crossing lists its four edges counterclockwise with slots 0 and 2 on
// the under strand. The A-smoothing joins slots (0,1) and (2,3), the
// B-smoothing joins (0,3) and (1,2).

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tanglekit/ring.hpp"

namespace tanglekit {

struct Crossing {
  std::array<int, 4> edges;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Two-valent connector; passing from `from` to `to` adds `winding`.
struct Join {
  int from;
  int to;
  int winding = 0;
  friend bool operator==(const Join&, const Join&) = default;
};

enum class SlotKind : std::uint8_t { Top, Bottom, Crossing, Join };

struct Slot {
  SlotKind kind;
  int index;  // boundary position, crossing index or join index
  int port;   // crossing slot 0..3 or join side 0 (from) / 1 (to)
};

struct PlanarTangleDiagram {
  std::vector<Crossing> crossings;
  std::vector<int> top;     // boundary edges, left to right
  std::vector<int> bottom;  // boundary edges, left to right
  std::vector<Join> joins;
  std::map<int, int> winding;   // edge -> signed crossings with the reference ray
  std::vector<int> free_loops;  // windings of crossingless closed curves
  bool annulus = false;

  std::size_t boundary_size() const { return top.size() + bottom.size(); }
  int edge_winding(int e) const;

  // Throws unless every edge occurs exactly twice.
  void validate() const;

  // Sorted list of distinct edge labels.
  std::vector<int> edge_labels() const;

  // Occurrence slots of each edge as (tail, head).
  std::map<int, std::array<Slot, 2>> edge_ends() const;

  // 2-tangle corner access: top = {NW, NE}, bottom = {SW, SE}.
  bool is_two_tangle() const { return top.size() == 2 && bottom.size() == 2; }
};

// Relabels edges to 0..E-1 in order of first occurrence.
PlanarTangleDiagram canonical_labels(const PlanarTangleDiagram& d);

/**
 * @brief Incremental construction with edge merging.
 *
 * Edges created by new_edge() can later be identified with merge(); the
 * final diagram uses one label per merged class.
 */
class DiagramBuilder {
 public:
  int new_edge();
  void merge(int a, int b);
  void add_crossing(int e0, int e1, int e2, int e3);
  void add_join(int from, int to, int winding);
  void add_free_loop(int winding);
  void set_top(std::vector<int> edges) { top_ = std::move(edges); }
  void set_bottom(std::vector<int> edges) { bottom_ = std::move(edges); }
  void set_annulus(bool a) { annulus_ = a; }

  PlanarTangleDiagram build() const;

 private:
  int find(int e) const;
  mutable std::vector<int> parent_;
  std::vector<Crossing> crossings_;
  std::vector<Join> joins_;
  std::vector<int> top_, bottom_, free_loops_;
  bool annulus_ = false;
};

// Each edge replaced by n parallel copies and each crossing by an n x n grid.
// Boundary points expand in place, keeping left-to-right order.
PlanarTangleDiagram cable(const PlanarTangleDiagram& d, int n);

// Closure of a tangle with clusters NW, NE (top) and SW, SE (bottom) of
// equal size around the annulus core: NE joins NW and SE joins SW, each
// closing strand crossing the reference ray once.
PlanarTangleDiagram solid_torus_closure(const PlanarTangleDiagram& d);

// Mirror image: every crossing switched.
PlanarTangleDiagram mirror(const PlanarTangleDiagram& d);

}  // namespace tanglekit
