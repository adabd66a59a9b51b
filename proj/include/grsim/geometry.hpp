#pragma once

#include <cmath>
#include <span>

#include "grsim/errors.hpp"

namespace grsim {

/// Below this length a vector is treated as degenerate (zero direction).
inline constexpr double kDegenerateLength = 1e-12;

/// 2-D coordinate in distance units. Plain value type; all stored
/// coordinates are finite (validated at construction boundaries).
struct Point {
  double x{0.0};
  double y{0.0};

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Euclidean distance. sqrt of a sum of squares rather than std::hypot:
/// sqrt is correctly rounded, which keeps serialized output stable.
inline double distance(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

/// Unit vector pointing from `from` to `to`.
inline Point unit_vector(Point from, Point to) {
  const double len = distance(from, to);
  if (len < kDegenerateLength) {
    throw ZeroVector("unit_vector: points coincide");
  }
  return {(to.x - from.x) / len, (to.y - from.y) / len};
}

/// Componentwise arithmetic mean of a nonempty point set.
inline Point centroid(std::span<const Point> points) {
  if (points.empty()) {
    throw EmptySet("centroid: empty point set");
  }
  double sx = 0.0;
  double sy = 0.0;
  for (const Point& p : points) {
    sx += p.x;
    sy += p.y;
  }
  const double n = static_cast<double>(points.size());
  return {sx / n, sy / n};
}

}  // namespace grsim
