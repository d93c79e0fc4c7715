#pragma once
/**
 * Exact planar predicates over integer-coordinate points.
 *
 * Every predicate here is exact: coordinates are bounded by kMaxCoord, so the
 * orientation determinant fits in a 128-bit integer with room to spare.
 * Floating point only appears in euclid_length, which is used for reporting
 * and never to decide anything.
 */

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace nctree {

/// Largest accepted coordinate magnitude (after decimal scaling).
inline constexpr std::int64_t kMaxCoord = std::int64_t{1} << 30;

struct ExactPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
  friend auto operator<=>(const ExactPoint&, const ExactPoint&) = default;
};

/// Straight-line edge between two vertices, stored as indices into a point array.
struct Segment {
  int a = 0;
  int b = 0;

  Segment() = default;
  Segment(int a_, int b_) : a(a_), b(b_) { assert(a != b); }

  /// Same segment with the smaller index first.
  Segment normalized() const { return a < b ? Segment{a, b} : Segment{b, a}; }
  bool touches(int v) const { return a == v || b == v; }
  bool shares_endpoint(const Segment& o) const { return touches(o.a) || touches(o.b); }

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

inline bool in_coord_range(const ExactPoint& p) {
  return p.x >= -kMaxCoord && p.x <= kMaxCoord && p.y >= -kMaxCoord && p.y <= kMaxCoord;
}

/// Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear.
inline int orientation(const ExactPoint& p, const ExactPoint& q, const ExactPoint& r) {
  using wide = __int128;
  const wide det = static_cast<wide>(q.x - p.x) * static_cast<wide>(r.y - p.y) -
                   static_cast<wide>(q.y - p.y) * static_cast<wide>(r.x - p.x);
  return (det > 0) - (det < 0);
}

/// True iff the two segments meet at a point interior to both. Segments that
/// share an endpoint never count as crossing.
inline bool properly_cross(const Segment& s1, const Segment& s2, std::span<const ExactPoint> pts) {
  if (s1.shares_endpoint(s2)) return false;
  const auto& p1 = pts[s1.a];
  const auto& p2 = pts[s1.b];
  const auto& q1 = pts[s2.a];
  const auto& q2 = pts[s2.b];
  return orientation(p1, p2, q1) * orientation(p1, p2, q2) < 0 &&
         orientation(q1, q2, p1) * orientation(q1, q2, p2) < 0;
}

struct PositionViolation {
  enum class Kind { Duplicate, Collinear };
  Kind kind = Kind::Collinear;
  /// Witness indices in ascending order; for Duplicate only the first two are used.
  std::array<int, 3> indices{-1, -1, -1};
};

/// Returns nullopt when all points are distinct and no three are collinear,
/// otherwise one witness. Duplicates are reported before collinear triples.
inline std::optional<PositionViolation> validate_general_position(std::span<const ExactPoint> pts) {
  const int n = static_cast<int>(pts.size());

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return pts[i] < pts[j] || (pts[i] == pts[j] && i < j);
  });
  for (int k = 0; k + 1 < n; ++k) {
    if (pts[order[k]] == pts[order[k + 1]]) {
      const int i = std::min(order[k], order[k + 1]);
      const int j = std::max(order[k], order[k + 1]);
      return PositionViolation{PositionViolation::Kind::Duplicate, {i, j, -1}};
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orientation(pts[i], pts[j], pts[k]) == 0)
          return PositionViolation{PositionViolation::Kind::Collinear, {i, j, k}};
  return std::nullopt;
}

inline double euclid_distance(const ExactPoint& p, const ExactPoint& q) {
  return std::hypot(static_cast<double>(q.x - p.x), static_cast<double>(q.y - p.y));
}

inline double euclid_length(const Segment& s, std::span<const ExactPoint> pts) {
  return euclid_distance(pts[s.a], pts[s.b]);
}

inline double total_length(std::span<const Segment> edges, std::span<const ExactPoint> pts) {
  double sum = 0.0;
  for (const auto& e : edges) sum += euclid_length(e, pts);
  return sum;
}

}  // namespace nctree
