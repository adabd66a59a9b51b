#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grsim/geometry.hpp"

namespace grsim {

using NodeId = std::uint32_t;

/// Static wireless topology: node positions, unit-disk adjacency and the
/// Gabriel-planarized subgraph used for perimeter recovery. Immutable
/// after construction; safe for concurrent readers.
class Topology {
 public:
  /// n positions drawn i.i.d. uniform over width x height with SplitMix64(seed)
  /// (per node: x draw then y draw). Identical inputs give bit-identical
  /// topologies.
  static Topology generate_random(std::size_t n, double width, double height,
                                  double radio_range, std::uint64_t seed);

  /// Topology from explicit positions; node i gets id i.
  static Topology from_explicit(std::vector<Point> positions, double radio_range);

  std::size_t size() const { return positions_.size(); }
  double radio_range() const { return radio_range_; }
  std::uint64_t seed() const { return seed_; }

  Point position(NodeId id) const {
    check_node(id);
    return positions_[id];
  }
  const std::vector<Point>& positions() const { return positions_; }

  /// Unit-disk neighbors (0 < dist <= radio_range), ascending by id.
  const std::vector<NodeId>& neighbors(NodeId id) const {
    check_node(id);
    return adjacency_[id];
  }

  /// Gabriel subgraph neighbors, ascending by id.
  const std::vector<NodeId>& planar_neighbors(NodeId id) const {
    check_node(id);
    return planar_adjacency_[id];
  }

  /// Minimum hop count over the full adjacency; nullopt when disconnected.
  std::optional<int> bfs_shortest_hops(NodeId src, NodeId dst) const;

  /// Connected-component label per node (labels dense, by discovery order).
  std::vector<int> component_labels() const;

  void check_node(NodeId id) const;

 private:
  Topology() = default;

  std::vector<Point> positions_;
  double radio_range_ = 0.0;
  std::uint64_t seed_ = 0;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::vector<NodeId>> planar_adjacency_;
};

/// Gabriel test over all nodes as witnesses: edge (u,v) survives iff no
/// node sits strictly inside the disk with diameter uv. Symmetric, subset
/// of the unit-disk adjacency, planar, and component-preserving.
std::vector<std::vector<NodeId>> gabriel_planarize(const std::vector<Point>& positions,
                                                   const std::vector<std::vector<NodeId>>& adjacency);

}  // namespace grsim
