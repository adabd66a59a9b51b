#pragma once

#include <vector>

#include "grsim/topology.hpp"

namespace grsim {

/// How the per-node deviation statistic is formed from the squared
/// distance deviations (sum SS over N neighbors):
///   StdError      - sqrt(SS) / N   (population std over sqrt(N))
///   PopulationStd - sqrt(SS / N)
enum class DeviationRule { StdError, PopulationStd };

/// Where the aligned point is placed:
///   OffsetFromPhysical - current position displaced toward the neighbor
///                        centroid by the deviation statistic
///   OriginRay          - point on the ray from the origin through the
///                        neighbor centroid, at that magnitude (kept only
///                        for comparison runs; not translation invariant)
enum class DisplacementRule { OffsetFromPhysical, OriginRay };

struct AlignmentParams {
  DeviationRule deviation = DeviationRule::StdError;
  DisplacementRule displacement = DisplacementRule::OffsetFromPhysical;

  friend bool operator==(const AlignmentParams&, const AlignmentParams&) = default;
};

/// Per-depth aligned coordinate per node. Depth 0 is the physical layout.
struct AlignmentTable {
  int depth = 0;
  std::vector<Point> coords;  // indexed by NodeId
};

/// Centroid of x's one-hop neighbors, coordinates taken from table_prev.
/// Throws IsolatedNode when x has no neighbors.
Point mean_neighbor_position(const Topology& t, const AlignmentTable& table_prev, NodeId x);

/// Mean distance from x to its neighbors, all coordinates from table_prev.
double mean_neighbor_distance(const Topology& t, const AlignmentTable& table_prev, NodeId x);

/// Deviation statistic of x's neighbor distances (always >= 0).
double distance_deviation(const Topology& t, const AlignmentTable& table_prev, NodeId x,
                          const AlignmentParams& params);

/// One alignment round for node x on top of table_prev. Degenerate cases
/// (isolated node, zero deviation, centroid on top of x) resolve to x's
/// table_prev coordinate.
Point aligned_position(const Topology& t, const AlignmentTable& table_prev, NodeId x,
                       const AlignmentParams& params);

/// Synchronous alignment rounds: table(0) = physical positions, table(k)
/// applies aligned_position to every node over table(k-1).
AlignmentTable align_all(const Topology& t, int depth, const AlignmentParams& params = {});

}  // namespace grsim
