#include "tanglekit/tangles.hpp"

#include <cstdlib>

namespace tanglekit {

const TwistVector& RationalTangle::twist_vector() const {
  if (!tv_) throw Error("[inf] has no twist vector");
  return *tv_;
}

ExtRational RationalTangle::fraction() const { return tv_ ? continued_fraction(*tv_) : ExtRational::infinity(); }

std::string RationalTangle::to_string() const { return tv_ ? tv_->to_string() : "[inf]"; }

RationalTangle build_rational(const TwistVector& tv) { return RationalTangle(tv); }

RationalTangle tangle_add(const RationalTangle& t, const RationalTangle& s) {
  if (!s.is_integer()) throw Error("sum of rational tangles need not be rational");
  return tangle_add(t, s.twist_vector()[0]);
}

RationalTangle tangle_add(const RationalTangle& t, std::int64_t n) {
  if (t.is_infinity()) return t;
  auto e = t.twist_vector().entries();
  e.back() += n;
  return RationalTangle(TwistVector(std::move(e)));
}

RationalTangle tangle_negate(const RationalTangle& t) {
  if (t.is_infinity()) return t;
  auto e = t.twist_vector().entries();
  for (auto& a : e) a = -a;
  return RationalTangle(TwistVector(std::move(e)));
}

RationalTangle tangle_invert(const RationalTangle& t) {
  if (t.is_infinity()) return RationalTangle(TwistVector{0});
  auto e = t.twist_vector().entries();
  if (e.back() == 0) {
    e.pop_back();
    if (e.empty()) return RationalTangle::infinity();
  } else {
    e.push_back(0);
  }
  return RationalTangle(TwistVector(std::move(e)));
}

TwistWord to_twist_word(const RationalTangle& t) {
  TwistWord w;
  if (t.is_infinity()) {
    w.start = StartTangle::Infinity;
    return w;
  }
  const auto& e = t.twist_vector().entries();
  const std::size_t m = e.size();
  w.start = m % 2 == 1 ? StartTangle::Zero : StartTangle::Infinity;
  for (std::size_t k = 0; k < m; ++k) {
    const TwistKind kind = (m - 1 - k) % 2 == 0 ? TwistKind::Right : TwistKind::Bottom;
    const int sign = e[k] > 0 ? 1 : -1;
    for (std::int64_t r = 0; r < std::llabs(e[k]); ++r) w.moves.push_back({kind, sign});
  }
  return w;
}

PlanarTangleDiagram word_to_diagram(const TwistWord& w) {
  DiagramBuilder b;
  int nw, ne, sw, se;
  const int e0 = b.new_edge(), e1 = b.new_edge();
  if (w.start == StartTangle::Zero) {
    nw = ne = e0;
    sw = se = e1;
  } else {
    nw = sw = e0;
    ne = se = e1;
  }
  for (const auto& mv : w.moves) {
    if (mv.kind == TwistKind::Right) {
      const int nne = b.new_edge(), nse = b.new_edge();
      if (mv.sign > 0)
        b.add_crossing(ne, se, nse, nne);
      else
        b.add_crossing(se, nse, nne, ne);
      ne = nne;
      se = nse;
    } else {
      const int nsw = b.new_edge(), nse = b.new_edge();
      if (mv.sign > 0)
        b.add_crossing(sw, nsw, nse, se);
      else
        b.add_crossing(nsw, nse, se, sw);
      sw = nsw;
      se = nse;
    }
  }
  b.set_top({nw, ne});
  b.set_bottom({sw, se});
  return b.build();
}

PlanarTangleDiagram rational_to_diagram(const RationalTangle& t) { return word_to_diagram(to_twist_word(t)); }

std::string to_string(ConnectivityType c) {
  switch (c) {
    case ConnectivityType::Type0: return "0";
    case ConnectivityType::TypeInf: return "inf";
    case ConnectivityType::Type1: return "1";
  }
  return "?";
}

namespace {

struct Visit {
  int crossing;
  int entry_slot;
};

// Follows components straight through crossings.
class StrandTracer {
 public:
  explicit StrandTracer(const PlanarTangleDiagram& d) : d_(d), ends_(d.edge_ends()) {
    for (const auto& [e, sl] : ends_)
      for (int x = 0; x < 2; ++x)
        if (sl[x].kind == SlotKind::Crossing) at_slot_[{sl[x].index, sl[x].port}] = {e, x};
    if (!d.joins.empty()) throw Error("strand tracing expects a diagram without joins");
  }

  // Walks from boundary point b (top then bottom indexing) and returns the
  // boundary point reached, recording crossing visits.
  int walk_from_boundary(int b, std::vector<Visit>* visits) const {
    const int top = static_cast<int>(d_.top.size());
    const int e = b < top ? d_.top[b] : d_.bottom[b - top];
    const auto& sl = ends_.at(e);
    const SlotKind kind = b < top ? SlotKind::Top : SlotKind::Bottom;
    const int idx = b < top ? b : b - top;
    int end = (sl[0].kind == kind && sl[0].index == idx) ? 0 : 1;
    int edge = e;
    while (true) {
      const Slot& s = ends_.at(edge)[1 - end];
      if (s.kind == SlotKind::Top) return s.index;
      if (s.kind == SlotKind::Bottom) return top + s.index;
      if (visits) visits->push_back({s.index, s.port});
      const auto [ne, nend] = at_slot_.at({s.index, (s.port + 2) % 4});
      edge = ne;
      end = nend;
    }
  }

  // Walks a closed component starting by entering crossing c at slot s.
  void walk_closed(int c, int s, std::vector<Visit>& visits) const {
    int cc = c, ss = s;
    do {
      visits.push_back({cc, ss});
      const auto [e, x] = at_slot_.at({cc, (ss + 2) % 4});
      const Slot& next = ends_.at(e)[1 - x];
      if (next.kind != SlotKind::Crossing) throw Error("closed walk reached the boundary");
      cc = next.index;
      ss = next.port;
    } while (!(cc == c && ss == s));
  }

 private:
  const PlanarTangleDiagram& d_;
  std::map<int, std::array<Slot, 2>> ends_;
  std::map<std::pair<int, int>, std::pair<int, int>> at_slot_;
};

}  // namespace

ConnectivityType connectivity(const PlanarTangleDiagram& d) {
  if (!d.is_two_tangle()) throw Error("connectivity requires a 2-tangle");
  d.validate();
  const int other = StrandTracer(d).walk_from_boundary(0, nullptr);
  switch (other) {
    case 1: return ConnectivityType::Type0;
    case 2: return ConnectivityType::TypeInf;
    case 3: return ConnectivityType::Type1;
  }
  throw Error("inconsistent strand tracing");
}

int closed_component_count(const PlanarTangleDiagram& d) {
  d.validate();
  const StrandTracer tr(d);
  const std::size_t nc = d.crossings.size();
  std::vector<std::array<char, 4>> used(nc, {0, 0, 0, 0});
  auto mark = [&](const std::vector<Visit>& vs) {
    for (const auto& v : vs) used[v.crossing][v.entry_slot] = used[v.crossing][(v.entry_slot + 2) % 4] = 1;
  };
  std::vector<Visit> vs;
  for (int b = 0; b < static_cast<int>(d.boundary_size()); ++b) {
    vs.clear();
    tr.walk_from_boundary(b, &vs);
    mark(vs);
  }
  int closed = static_cast<int>(d.free_loops.size());
  for (std::size_t c = 0; c < nc; ++c)
    for (int s = 0; s < 4; ++s) {
      if (used[c][s]) continue;
      vs.clear();
      tr.walk_closed(static_cast<int>(c), s, vs);
      mark(vs);
      ++closed;
    }
  return closed;
}

// ---------------------------------------------------------------------------

PlanarTangleDiagram plat_tangle(const std::vector<int>& braid) {
  DiagramBuilder b;
  const int left = b.new_edge(), cap = b.new_edge(), right = b.new_edge();
  int cur[4] = {left, cap, cap, right};
  for (int g : braid) {
    const int j = std::abs(g) - 1;
    if (j < 0 || j > 2) throw Error("plat generator out of range");
    const int fj = b.new_edge(), fk = b.new_edge();
    if (g > 0)
      b.add_crossing(cur[j], fj, fk, cur[j + 1]);
    else
      b.add_crossing(fj, fk, cur[j + 1], cur[j]);
    cur[j] = fj;
    cur[j + 1] = fk;
  }
  if (braid.empty())
    b.add_free_loop(0);
  else
    b.merge(cur[1], cur[2]);
  b.set_top({left, right});
  b.set_bottom({cur[0], cur[3]});
  return b.build();
}

PlanarTangleDiagram clasp_T1() { return plat_tangle({1, 1, 3, 3, 3, 3}); }

PlanarTangleDiagram clasp_T2() { return plat_tangle({1, 1, 1, 1, 3, 3}); }

int left_linking_number(const PlanarTangleDiagram& d) {
  const Error undefined("left linking number undefined");
  if (!d.is_two_tangle() || !d.joins.empty()) throw undefined;
  d.validate();
  const StrandTracer tr(d);
  std::vector<Visit> left, right;
  if (tr.walk_from_boundary(0, &left) != 2 || tr.walk_from_boundary(1, &right) != 3) throw undefined;

  const std::size_t nc = d.crossings.size();
  // owner[c][slot] = component entering through that slot: 0 left, 1 right, 2+ closed
  std::vector<std::array<int, 4>> owner(nc, {-1, -1, -1, -1});
  auto mark = [&](const std::vector<Visit>& vs, int comp) {
    for (const auto& v : vs) owner[v.crossing][v.entry_slot] = comp;
  };
  mark(left, 0);
  mark(right, 1);
  int closed = static_cast<int>(d.free_loops.size());
  for (std::size_t c = 0; c < nc; ++c)
    for (int s = 0; s < 4; ++s) {
      if (owner[c][s] >= 0 || owner[c][(s + 2) % 4] >= 0) continue;
      std::vector<Visit> vs;
      tr.walk_closed(static_cast<int>(c), s, vs);
      mark(vs, 2 + closed);
      ++closed;
    }
  if (closed != 1) throw undefined;

  int sum = 0;
  for (std::size_t c = 0; c < nc; ++c) {
    const auto& o = owner[c];
    const int under = o[0] >= 0 ? o[0] : o[2];
    const int over = o[1] >= 0 ? o[1] : o[3];
    if (!((under == 0 && over >= 2) || (under >= 2 && over == 0))) continue;
    const int under_dir = o[0] >= 0 ? 1 : -1;
    const int over_dir = o[3] >= 0 ? 1 : -1;
    sum += under_dir * over_dir;
  }
  return std::abs(sum) / 2;
}

}  // namespace tanglekit
