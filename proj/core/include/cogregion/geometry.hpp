#pragma once

// Planar geometry on a cylindrical equal-area projection.
//
// All area and membership computations happen in projected space
// (x = lon in radians, y = sin(lat)), where edges are straight segments.
// Ratios of projected areas equal ratios of spherical areas for shapes
// whose edges follow the same convention, which is all the coverage
// score needs.

#include <optional>
#include <span>
#include <vector>

namespace cogregion {

inline constexpr double kDegeneracyTolerance = 1e-12;
inline constexpr double kRelativeTolerance = 1e-9;
inline constexpr double kDuplicateVertexTolerance = 1e-9;

struct LonLat {
  double lon = 0.0;
  double lat = 0.0;

  friend bool operator==(const LonLat&, const LonLat&) = default;
};

bool is_valid(LonLat p) noexcept;

/// Throws ValidationError when the coordinates are out of range or not finite.
LonLat make_lonlat(double lon, double lat);

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

PlanarPoint project_equal_area(LonLat p) noexcept;

/// Inverse of project_equal_area. y is clamped to [-1, 1].
LonLat unproject_equal_area(PlanarPoint p) noexcept;

/// Axis-aligned box in projected space, closed on all sides.
struct Box {
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;

  static Box empty() noexcept;
  bool is_empty() const noexcept { return min_x > max_x || min_y > max_y; }
  void expand(PlanarPoint p) noexcept;
  void expand(const Box& b) noexcept;
  bool contains(PlanarPoint p) const noexcept {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
  bool contains(const Box& b) const noexcept {
    return b.min_x >= min_x && b.max_x <= max_x && b.min_y >= min_y && b.max_y <= max_y;
  }
  bool intersects(const Box& b) const noexcept {
    return !(b.min_x > max_x || b.max_x < min_x || b.min_y > max_y || b.max_y < min_y);
  }
  double width() const noexcept { return max_x - min_x; }
  double height() const noexcept { return max_y - min_y; }

  friend bool operator==(const Box&, const Box&) = default;
};

/// Lon/lat rectangle. Invariant: west < east, south < north, all in range.
class Rectangle {
 public:
  Rectangle(double west, double south, double east, double north);

  double west() const noexcept { return west_; }
  double south() const noexcept { return south_; }
  double east() const noexcept { return east_; }
  double north() const noexcept { return north_; }

  Box projected() const noexcept;
  bool contains(LonLat p) const noexcept;

  friend bool operator==(const Rectangle&, const Rectangle&) = default;

 private:
  double west_;
  double south_;
  double east_;
  double north_;
};

using Ring = std::vector<LonLat>;
using PlanarRing = std::vector<PlanarPoint>;

/// A polygon with optional holes. Rings are stored open (no repeated
/// closing vertex), the exterior counter-clockwise and holes clockwise.
class Polygon {
 public:
  /// Drops a repeated closing vertex and consecutive duplicates, then
  /// normalizes orientation. Throws TooFewVertices or DegeneratePolygon.
  /// Ring simplicity is not checked here; see validate_freehand.
  static Polygon from_rings(Ring exterior, std::vector<Ring> holes = {});

  const Ring& exterior() const noexcept { return exterior_; }
  const std::vector<Ring>& holes() const noexcept { return holes_; }

  /// Projected rings, exterior first.
  std::span<const PlanarRing> rings() const noexcept { return projected_; }
  const Box& bounds() const noexcept { return bounds_; }

  friend bool operator==(const Polygon& a, const Polygon& b) {
    return a.exterior_ == b.exterior_ && a.holes_ == b.holes_;
  }

 private:
  Polygon() = default;

  Ring exterior_;
  std::vector<Ring> holes_;
  std::vector<PlanarRing> projected_;
  Box bounds_ = Box::empty();
};

/// Parts are assumed pairwise non-overlapping.
class MultiPolygon {
 public:
  MultiPolygon() = default;
  explicit MultiPolygon(std::vector<Polygon> parts);

  const std::vector<Polygon>& parts() const noexcept { return parts_; }
  std::span<const PlanarRing> rings() const noexcept { return projected_; }
  const Box& bounds() const noexcept { return bounds_; }
  bool empty() const noexcept { return parts_.empty(); }

  friend bool operator==(const MultiPolygon& a, const MultiPolygon& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<Polygon> parts_;
  std::vector<PlanarRing> projected_;
  Box bounds_ = Box::empty();
};

// Ring-level primitives. A "ring set" is any collection of oriented rings
// (exterior CCW, holes CW) whose even-odd interior is the region.

double signed_ring_area(std::span<const PlanarPoint> ring) noexcept;
double ring_set_area(std::span<const PlanarRing> rings) noexcept;
bool point_in_ring_set(PlanarPoint p, std::span<const PlanarRing> rings) noexcept;
double ring_set_intersection_area(std::span<const PlanarRing> a, const Box& a_bounds,
                                  std::span<const PlanarRing> b, const Box& b_bounds);

/// True when no two non-adjacent edges touch and adjacent edges meet only
/// at their shared vertex.
bool is_simple_ring(std::span<const PlanarPoint> ring) noexcept;

inline double polygon_area(const Polygon& p) noexcept { return ring_set_area(p.rings()); }
inline double polygon_area(const MultiPolygon& p) noexcept { return ring_set_area(p.rings()); }

/// Even-odd membership; points on an edge count as inside.
bool point_in_polygon(LonLat p, const Polygon& poly) noexcept;
bool point_in_polygon(LonLat p, const MultiPolygon& poly) noexcept;

template <typename A, typename B>
double polygon_intersection_area(const A& a, const B& b) {
  return ring_set_intersection_area(a.rings(), a.bounds(), b.rings(), b.bounds());
}

Polygon rectangle_to_polygon(const Rectangle& r);

/// Closes an open freehand path into a validated polygon.
/// Throws TooFewVertices, SelfIntersectingSelection, DegeneratePolygon, or
/// ValidationError (antimeridian-crossing edge).
Polygon validate_freehand(std::span<const LonLat> path);

/// Throws ValidationError when any edge spans more than 180 degrees of
/// longitude, which under GeoJSON conventions means it crosses ±180.
void reject_antimeridian_crossing(const Polygon& poly);

/// Recovers the rectangle when a polygon has no holes and its exterior
/// consists exactly of the four corners of its lon/lat bounding box.
std::optional<Rectangle> as_rectangle(const Polygon& poly);

}  // namespace cogregion
