#include "grsim/topology.hpp"

#include <deque>
#include <string>

#include "grsim/rng.hpp"

namespace grsim {

namespace {

std::vector<std::vector<NodeId>> unit_disk_adjacency(const std::vector<Point>& positions,
                                                     double radio_range) {
  const std::size_t n = positions.size();
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const double d = distance(positions[u], positions[v]);
      if (d > 0.0 && d <= radio_range) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  return adj;
}

}  // namespace

Topology Topology::generate_random(std::size_t n, double width, double height,
                                   double radio_range, std::uint64_t seed) {
  if (n < 2) {
    throw InvalidParams("generate_random: need at least 2 nodes");
  }
  if (!(width > 0.0) || !(height > 0.0) || !(radio_range > 0.0)) {
    throw InvalidParams("generate_random: dimensions and radio range must be positive");
  }
  SplitMix64 rng(seed);
  std::vector<Point> positions;
  positions.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.next_double() * width;
    const double y = rng.next_double() * height;
    positions.push_back({x, y});
  }
  Topology t;
  t.positions_ = std::move(positions);
  t.radio_range_ = radio_range;
  t.seed_ = seed;
  t.adjacency_ = unit_disk_adjacency(t.positions_, radio_range);
  t.planar_adjacency_ = gabriel_planarize(t.positions_, t.adjacency_);
  return t;
}

Topology Topology::from_explicit(std::vector<Point> positions, double radio_range) {
  if (positions.empty()) {
    throw InvalidParams("from_explicit: empty position list");
  }
  if (!(radio_range > 0.0)) {
    throw InvalidParams("from_explicit: radio range must be positive");
  }
  for (const Point& p : positions) {
    if (!is_finite(p)) {
      throw InvalidParams("from_explicit: non-finite coordinate");
    }
  }
  for (std::size_t u = 0; u < positions.size(); ++u) {
    for (std::size_t v = u + 1; v < positions.size(); ++v) {
      if (distance(positions[u], positions[v]) < kDegenerateLength) {
        throw DuplicatePosition("from_explicit: nodes " + std::to_string(u) + " and " +
                                std::to_string(v) + " coincide");
      }
    }
  }
  Topology t;
  t.positions_ = std::move(positions);
  t.radio_range_ = radio_range;
  t.seed_ = 0;
  t.adjacency_ = unit_disk_adjacency(t.positions_, radio_range);
  t.planar_adjacency_ = gabriel_planarize(t.positions_, t.adjacency_);
  return t;
}

void Topology::check_node(NodeId id) const {
  if (id >= positions_.size()) {
    throw UnknownNode("node id " + std::to_string(id) + " out of range");
  }
}

std::optional<int> Topology::bfs_shortest_hops(NodeId src, NodeId dst) const {
  check_node(src);
  check_node(dst);
  if (src == dst) {
    return 0;
  }
  std::vector<int> dist_hops(positions_.size(), -1);
  dist_hops[src] = 0;
  std::deque<NodeId> queue{src};
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : adjacency_[u]) {
      if (dist_hops[v] >= 0) {
        continue;
      }
      dist_hops[v] = dist_hops[u] + 1;
      if (v == dst) {
        return dist_hops[v];
      }
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

std::vector<int> Topology::component_labels() const {
  std::vector<int> label(positions_.size(), -1);
  int next = 0;
  for (NodeId s = 0; s < positions_.size(); ++s) {
    if (label[s] >= 0) {
      continue;
    }
    label[s] = next;
    std::deque<NodeId> queue{s};
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      for (NodeId v : adjacency_[u]) {
        if (label[v] < 0) {
          label[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<NodeId>> gabriel_planarize(const std::vector<Point>& positions,
                                                   const std::vector<std::vector<NodeId>>& adjacency) {
  const std::size_t n = positions.size();
  std::vector<std::vector<NodeId>> planar(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : adjacency[u]) {
      if (v < u) {
        continue;  // each undirected edge once
      }
      const Point mid{(positions[u].x + positions[v].x) / 2.0,
                      (positions[u].y + positions[v].y) / 2.0};
      const double dx = positions[u].x - positions[v].x;
      const double dy = positions[u].y - positions[v].y;
      const double radius_sq = (dx * dx + dy * dy) / 4.0;
      bool keep = true;
      for (NodeId w = 0; w < n; ++w) {
        if (w == u || w == v) {
          continue;
        }
        const double wx = positions[w].x - mid.x;
        const double wy = positions[w].y - mid.y;
        if (wx * wx + wy * wy < radius_sq) {
          keep = false;
          break;
        }
      }
      if (keep) {
        planar[u].push_back(v);
        planar[v].push_back(u);
      }
    }
  }
  return planar;
}

}  // namespace grsim
