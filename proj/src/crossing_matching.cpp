#include "cm/crossing_matching.hpp"

#include <algorithm>
#include <map>

namespace cm {

namespace {

Orientation side_of_a(const PointSet& ps, const CrossingInstance& inst) {
  const auto& [u, v] = inst.sigma;
  if (!inst.A.empty()) return orientation(ps, u, v, inst.A.front());
  if (!inst.B.empty()) return -orientation(ps, u, v, inst.B.front());
  return Orientation::CCW;
}

enum class Pick { Largest, SmallestEligible };

Matching sweep(const CrossingInstance& inst, const PointSet& ps, Pick pick) {
  require_opposite_sides(ps, inst);
  Matching m;
  if (inst.A.empty() || inst.B.empty()) return m;
  const PhiFrame frame(ps, inst);

  struct Event {
    PhiKey key;
    Index point;
    bool is_a;
  };
  std::vector<Event> events;
  events.reserve(inst.A.size() + inst.B.size());
  for (Index a : inst.A) events.push_back({frame.phi1_a(a), a, true});
  for (Index b : inst.B) events.push_back({frame.phi1_b(b), b, false});
  // Equal phi1 across sides means a, u, b collinear; A first keeps the
  // closed-segment semantics anyway.
  std::sort(events.begin(), events.end(), [](const Event& s, const Event& t) {
    if (s.key < t.key) return true;
    if (t.key < s.key) return false;
    return s.is_a && !t.is_a;
  });

  std::multimap<PhiKey, Index> open;  // unmatched A points swept so far, by phi2
  for (const Event& e : events) {
    if (e.is_a) {
      open.emplace(frame.phi2_a(e.point), e.point);
      continue;
    }
    const PhiKey need = frame.phi2_b(e.point);
    auto it = open.end();
    if (pick == Pick::SmallestEligible) {
      it = open.lower_bound(need);
    } else if (!open.empty() && !(std::prev(open.end())->first < need)) {
      it = std::prev(open.end());
    }
    if (it == open.end()) continue;
    m.edges.push_back({it->second, e.point});
    open.erase(it);
  }
  return m;
}

}  // namespace

PhiFrame::PhiFrame(const PointSet& ps, const CrossingInstance& inst)
    : ps_(ps), u_(inst.sigma.a), v_(inst.sigma.b) {
  if (side_of_a(ps, inst) == Orientation::CW) std::swap(u_, v_);
}

void require_opposite_sides(const PointSet& ps, const CrossingInstance& inst) {
  const auto& [u, v] = inst.sigma;
  if (u == v) throw PreconditionError("crossing instance: degenerate segment");
  const auto sa = side_of_a(ps, inst);
  for (Index a : inst.A) {
    if (orientation(ps, u, v, a) != sa) {
      throw PreconditionError("crossing instance: A is not strictly on one side");
    }
  }
  for (Index b : inst.B) {
    if (orientation(ps, u, v, b) != -sa) {
      throw PreconditionError("crossing instance: B is not strictly on the other side");
    }
  }
}

bool edge_crosses_sigma(Index a, Index b, const CrossingInstance& inst, const PointSet& ps) {
  const PhiFrame frame(ps, inst);
  return !(frame.phi1_b(b) < frame.phi1_a(a)) && !(frame.phi2_a(a) < frame.phi2_b(b));
}

Matching maximal_crossing_matching(const CrossingInstance& inst, const PointSet& ps) {
  return sweep(inst, ps, Pick::Largest);
}

Matching maximum_crossing_matching(const CrossingInstance& inst, const PointSet& ps) {
  return sweep(inst, ps, Pick::SmallestEligible);
}

}  // namespace cm
