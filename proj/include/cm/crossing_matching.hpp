#pragma once

#include <vector>

#include "cm/geom.hpp"
#include "cm/types.hpp"

namespace cm {

/// Segment sigma = uv with point sets A and B strictly on opposite sides of
/// its supporting line.
struct CrossingInstance {
  Segment sigma;
  std::vector<Index> A;
  std::vector<Index> B;
};

/// Slope of the line through a point and one endpoint of sigma, stored as a
/// direction vector that points from A's side towards B's side. Comparing two
/// keys is one cross-product sign.
struct PhiKey {
  Point dir;

  friend bool operator<(const PhiKey& s, const PhiKey& t) { return cross(s.dir, t.dir) > 0; }
};

/// Sigma's endpoints ordered so that A lies to the left of u -> v, plus the
/// phi map in that frame.
class PhiFrame {
 public:
  PhiFrame(const PointSet& ps, const CrossingInstance& inst);

  Index u() const { return u_; }
  Index v() const { return v_; }
  PhiKey phi1_a(Index a) const { return {ps_[u_] - ps_[a]}; }
  PhiKey phi2_a(Index a) const { return {ps_[v_] - ps_[a]}; }
  PhiKey phi1_b(Index b) const { return {ps_[b] - ps_[u_]}; }
  PhiKey phi2_b(Index b) const { return {ps_[b] - ps_[v_]}; }

 private:
  const PointSet& ps_;
  Index u_;
  Index v_;
};

/// Throws PreconditionError unless A and B lie strictly on opposite sides of
/// sigma's line.
void require_opposite_sides(const PointSet& ps, const CrossingInstance& inst);

/// ab meets sigma, decided by phi1(a) <= phi1(b) and phi2(a) >= phi2(b).
bool edge_crosses_sigma(Index a, Index b, const CrossingInstance& inst, const PointSet& ps);

/// Maximal matching of the bipartite graph of A-B segments crossing sigma.
/// Sweep by phi1 with unmatched A points kept ordered by phi2. O(n log n).
Matching maximal_crossing_matching(const CrossingInstance& inst, const PointSet& ps);

/// Same sweep, but each b takes the eligible a with the smallest phi2.
Matching maximum_crossing_matching(const CrossingInstance& inst, const PointSet& ps);

}  // namespace cm
