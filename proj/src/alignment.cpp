#include "grsim/alignment.hpp"

#include <cmath>
#include <string>

namespace grsim {

namespace {

void check_table(const Topology& t, const AlignmentTable& table) {
  if (table.coords.size() != t.size()) {
    throw MissingAlignment("alignment table covers " + std::to_string(table.coords.size()) +
                           " nodes, topology has " + std::to_string(t.size()));
  }
}

}  // namespace

Point mean_neighbor_position(const Topology& t, const AlignmentTable& table_prev, NodeId x) {
  check_table(t, table_prev);
  const auto& nbrs = t.neighbors(x);
  if (nbrs.empty()) {
    throw IsolatedNode("node " + std::to_string(x) + " has no neighbors");
  }
  double sx = 0.0;
  double sy = 0.0;
  for (NodeId v : nbrs) {
    sx += table_prev.coords[v].x;
    sy += table_prev.coords[v].y;
  }
  const double n = static_cast<double>(nbrs.size());
  return {sx / n, sy / n};
}

double mean_neighbor_distance(const Topology& t, const AlignmentTable& table_prev, NodeId x) {
  check_table(t, table_prev);
  const auto& nbrs = t.neighbors(x);
  if (nbrs.empty()) {
    throw IsolatedNode("node " + std::to_string(x) + " has no neighbors");
  }
  double sum = 0.0;
  for (NodeId v : nbrs) {
    sum += distance(table_prev.coords[x], table_prev.coords[v]);
  }
  return sum / static_cast<double>(nbrs.size());
}

double distance_deviation(const Topology& t, const AlignmentTable& table_prev, NodeId x,
                          const AlignmentParams& params) {
  const double mean = mean_neighbor_distance(t, table_prev, x);
  const auto& nbrs = t.neighbors(x);
  double sum_sq = 0.0;
  for (NodeId v : nbrs) {
    const double dev = distance(table_prev.coords[x], table_prev.coords[v]) - mean;
    sum_sq += dev * dev;
  }
  const double count = static_cast<double>(nbrs.size());
  if (params.deviation == DeviationRule::StdError) {
    return std::sqrt(sum_sq) / count;
  }
  return std::sqrt(sum_sq / count);
}

Point aligned_position(const Topology& t, const AlignmentTable& table_prev, NodeId x,
                       const AlignmentParams& params) {
  check_table(t, table_prev);
  t.check_node(x);
  const Point own = table_prev.coords[x];
  if (t.neighbors(x).empty()) {
    return own;
  }
  const Point center = mean_neighbor_position(t, table_prev, x);
  const double sigma = distance_deviation(t, table_prev, x, params);

  if (params.displacement == DisplacementRule::OriginRay) {
    const double len = std::sqrt(center.x * center.x + center.y * center.y);
    if (sigma == 0.0 || len < kDegenerateLength) {
      return own;
    }
    return {center.x / len * sigma, center.y / len * sigma};
  }

  // Zero deviation or centroid on top of the node: stay put. The exact
  // zero branch keeps distance-symmetric layouts bit-identical across
  // alignment rounds.
  if (sigma == 0.0 || distance(own, center) < kDegenerateLength) {
    return own;
  }
  const Point dir = unit_vector(own, center);
  return {own.x + dir.x * sigma, own.y + dir.y * sigma};
}

AlignmentTable align_all(const Topology& t, int depth, const AlignmentParams& params) {
  if (depth < 0) {
    throw InvalidParams("align_all: depth must be >= 0");
  }
  AlignmentTable table;
  table.depth = 0;
  table.coords = t.positions();
  for (int round = 1; round <= depth; ++round) {
    AlignmentTable next;
    next.depth = round;
    next.coords.resize(t.size());
    for (NodeId x = 0; x < t.size(); ++x) {
      next.coords[x] = aligned_position(t, table, x, params);
    }
    table = std::move(next);
  }
  return table;
}

}  // namespace grsim
