#include "cogregion/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cogregion/errors.hpp"

namespace cogregion {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

// Distance below which a point is considered to lie on a segment.
constexpr double kOnSegmentTolerance = 1e-12;

PlanarPoint operator-(PlanarPoint a, PlanarPoint b) { return {a.x - b.x, a.y - b.y}; }
PlanarPoint operator+(PlanarPoint a, PlanarPoint b) { return {a.x + b.x, a.y + b.y}; }
PlanarPoint operator*(double s, PlanarPoint a) { return {s * a.x, s * a.y}; }

double cross(PlanarPoint a, PlanarPoint b) { return a.x * b.y - a.y * b.x; }
double dot(PlanarPoint a, PlanarPoint b) { return a.x * b.x + a.y * b.y; }
double norm(PlanarPoint a) { return std::hypot(a.x, a.y); }

double distance_to_segment(PlanarPoint p, PlanarPoint a, PlanarPoint b) {
  const PlanarPoint ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return norm(p - a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

struct Edge {
  PlanarPoint a;
  PlanarPoint b;
  Box box;
};

std::vector<Edge> collect_edges(std::span<const PlanarRing> rings) {
  std::vector<Edge> edges;
  std::size_t total = 0;
  for (const auto& ring : rings) total += ring.size();
  edges.reserve(total);
  for (const auto& ring : rings) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const PlanarPoint a = ring[i];
      const PlanarPoint b = ring[(i + 1) % n];
      Box box = Box::empty();
      box.expand(a);
      box.expand(b);
      edges.push_back({a, b, box});
    }
  }
  return edges;
}

Box inflate(Box b, double d) {
  b.min_x -= d;
  b.min_y -= d;
  b.max_x += d;
  b.max_y += d;
  return b;
}

// Even-odd parity by horizontal ray cast; boundary handling is the caller's
// responsibility.
bool crossing_parity(PlanarPoint p, std::span<const PlanarRing> rings) {
  bool inside = false;
  for (const auto& ring : rings) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      const PlanarPoint& a = ring[i];
      const PlanarPoint& b = ring[j];
      if ((a.y > p.y) != (b.y > p.y)) {
        const double x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
        if (p.x < x_at) inside = !inside;
      }
    }
  }
  return inside;
}

bool on_boundary(PlanarPoint p, std::span<const PlanarRing> rings) {
  for (const auto& ring : rings) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (distance_to_segment(p, ring[i], ring[(i + 1) % n]) <= kOnSegmentTolerance) return true;
    }
  }
  return false;
}

// Sum of the shoelace terms of every piece of `own`'s boundary that lies in
// the closure of the other shape. A piece lying on the other boundary is kept
// only when `keep_shared` is set and both edges run the same way; that way a
// shared edge is counted exactly once across the two passes.
double clipped_boundary_integral(const std::vector<Edge>& own, const std::vector<Edge>& other,
                                 std::span<const PlanarRing> other_rings, const Box& other_box,
                                 bool keep_shared, PlanarPoint origin) {
  const Box search_box = inflate(other_box, kOnSegmentTolerance);
  double sum = 0.0;
  std::vector<double> cuts;
  for (const Edge& e : own) {
    if (!e.box.intersects(search_box)) continue;
    const PlanarPoint r = e.b - e.a;
    const double len = norm(r);
    if (len == 0.0) continue;
    const Box edge_box = inflate(e.box, kOnSegmentTolerance);

    cuts.assign({0.0, 1.0});
    for (const Edge& o : other) {
      if (!edge_box.intersects(o.box)) continue;
      const PlanarPoint s = o.b - o.a;
      const PlanarPoint qp = o.a - e.a;
      const double denom = cross(r, s);
      const double s_len = norm(s);
      if (std::abs(denom) <= 1e-14 * len * s_len) {
        // Parallel; collinear overlap contributes its endpoints as cuts.
        if (std::abs(cross(r, qp)) / len <= kOnSegmentTolerance) {
          const double len2 = len * len;
          for (PlanarPoint q : {o.a, o.b}) {
            const double t = dot(q - e.a, r) / len2;
            if (t > 0.0 && t < 1.0) cuts.push_back(t);
          }
        }
        continue;
      }
      const double t = cross(qp, s) / denom;
      const double u = cross(qp, r) / denom;
      constexpr double slack = 1e-12;
      if (t >= -slack && t <= 1.0 + slack && u >= -slack && u <= 1.0 + slack) {
        cuts.push_back(std::clamp(t, 0.0, 1.0));
      }
    }
    std::sort(cuts.begin(), cuts.end());

    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double t0 = cuts[k];
      const double t1 = cuts[k + 1];
      if ((t1 - t0) * len <= 1e-15) continue;
      const PlanarPoint p0 = e.a + t0 * r;
      const PlanarPoint p1 = e.a + t1 * r;
      const PlanarPoint mid = 0.5 * (p0 + p1);

      bool include = false;
      bool shared = false;
      for (const Edge& o : other) {
        if (!inflate(o.box, kOnSegmentTolerance).contains(mid)) continue;
        if (distance_to_segment(mid, o.a, o.b) <= kOnSegmentTolerance) {
          shared = true;
          include = keep_shared && dot(r, o.b - o.a) > 0.0;
          break;
        }
      }
      if (!shared) include = other_box.contains(mid) && crossing_parity(mid, other_rings);
      if (include) sum += cross(p0 - origin, p1 - origin);
    }
  }
  return sum;
}

Ring clean_ring(Ring ring) {
  Ring out;
  out.reserve(ring.size());
  for (const LonLat& p : ring) {
    if (!is_valid(p)) {
      std::ostringstream msg;
      msg << "coordinate out of range: [" << p.lon << ", " << p.lat << "]";
      throw Error(ErrorCode::ValidationError, msg.str());
    }
    if (!out.empty() &&
        norm(project_equal_area(p) - project_equal_area(out.back())) < kDuplicateVertexTolerance) {
      continue;
    }
    out.push_back(p);
  }
  while (out.size() > 1 && norm(project_equal_area(out.front()) - project_equal_area(out.back())) <
                               kDuplicateVertexTolerance) {
    out.pop_back();
  }
  return out;
}

PlanarRing project_ring(const Ring& ring) {
  PlanarRing out;
  out.reserve(ring.size());
  for (const LonLat& p : ring) out.push_back(project_equal_area(p));
  return out;
}

bool segments_touch(PlanarPoint a, PlanarPoint b, PlanarPoint c, PlanarPoint d) {
  if (distance_to_segment(a, c, d) <= kOnSegmentTolerance ||
      distance_to_segment(b, c, d) <= kOnSegmentTolerance ||
      distance_to_segment(c, a, b) <= kOnSegmentTolerance ||
      distance_to_segment(d, a, b) <= kOnSegmentTolerance) {
    return true;
  }
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
         d4 != 0;
}

}  // namespace

bool is_valid(LonLat p) noexcept {
  return std::isfinite(p.lon) && std::isfinite(p.lat) && p.lon >= -180.0 && p.lon <= 180.0 &&
         p.lat >= -90.0 && p.lat <= 90.0;
}

LonLat make_lonlat(double lon, double lat) {
  LonLat p{lon, lat};
  if (!is_valid(p)) {
    std::ostringstream msg;
    msg << "invalid coordinate: lon=" << lon << " lat=" << lat;
    throw Error(ErrorCode::ValidationError, msg.str());
  }
  return p;
}

PlanarPoint project_equal_area(LonLat p) noexcept {
  return {p.lon * kDegToRad, std::sin(p.lat * kDegToRad)};
}

LonLat unproject_equal_area(PlanarPoint p) noexcept {
  return {p.x * kRadToDeg, std::asin(std::clamp(p.y, -1.0, 1.0)) * kRadToDeg};
}

Box Box::empty() noexcept {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {inf, inf, -inf, -inf};
}

void Box::expand(PlanarPoint p) noexcept {
  min_x = std::min(min_x, p.x);
  min_y = std::min(min_y, p.y);
  max_x = std::max(max_x, p.x);
  max_y = std::max(max_y, p.y);
}

void Box::expand(const Box& b) noexcept {
  if (b.is_empty()) return;
  min_x = std::min(min_x, b.min_x);
  min_y = std::min(min_y, b.min_y);
  max_x = std::max(max_x, b.max_x);
  max_y = std::max(max_y, b.max_y);
}

Rectangle::Rectangle(double west, double south, double east, double north)
    : west_(west), south_(south), east_(east), north_(north) {
  if (!is_valid({west, south}) || !is_valid({east, north}) || !(west < east) || !(south < north)) {
    std::ostringstream msg;
    msg << "invalid rectangle [" << west << ", " << south << ", " << east << ", " << north
        << "]: need west < east and south < north within lon/lat range";
    throw Error(ErrorCode::ValidationError, msg.str());
  }
}

Box Rectangle::projected() const noexcept {
  const PlanarPoint lo = project_equal_area({west_, south_});
  const PlanarPoint hi = project_equal_area({east_, north_});
  return {lo.x, lo.y, hi.x, hi.y};
}

bool Rectangle::contains(LonLat p) const noexcept {
  return projected().contains(project_equal_area(p));
}

Polygon Polygon::from_rings(Ring exterior, std::vector<Ring> holes) {
  Polygon poly;
  poly.exterior_ = clean_ring(std::move(exterior));
  if (poly.exterior_.size() < 3) {
    throw Error(ErrorCode::TooFewVertices, "polygon exterior needs at least 3 distinct vertices");
  }
  PlanarRing ext = project_ring(poly.exterior_);
  const double ext_area = signed_ring_area(ext);
  if (std::abs(ext_area) <= kDegeneracyTolerance) {
    throw Error(ErrorCode::DegeneratePolygon, "polygon exterior has zero area");
  }
  if (ext_area < 0) {
    std::reverse(poly.exterior_.begin(), poly.exterior_.end());
    std::reverse(ext.begin(), ext.end());
  }
  for (const PlanarPoint& p : ext) poly.bounds_.expand(p);
  poly.projected_.push_back(std::move(ext));

  for (Ring& h : holes) {
    Ring hole = clean_ring(std::move(h));
    if (hole.size() < 3) {
      throw Error(ErrorCode::TooFewVertices, "polygon hole needs at least 3 distinct vertices");
    }
    PlanarRing ph = project_ring(hole);
    const double a = signed_ring_area(ph);
    if (std::abs(a) <= kDegeneracyTolerance) {
      throw Error(ErrorCode::DegeneratePolygon, "polygon hole has zero area");
    }
    if (a > 0) {
      std::reverse(hole.begin(), hole.end());
      std::reverse(ph.begin(), ph.end());
    }
    poly.holes_.push_back(std::move(hole));
    poly.projected_.push_back(std::move(ph));
  }
  if (ring_set_area(poly.projected_) <= kDegeneracyTolerance) {
    throw Error(ErrorCode::DegeneratePolygon, "polygon has zero area after subtracting holes");
  }
  return poly;
}

MultiPolygon::MultiPolygon(std::vector<Polygon> parts) : parts_(std::move(parts)) {
  for (const Polygon& p : parts_) {
    projected_.insert(projected_.end(), p.rings().begin(), p.rings().end());
    bounds_.expand(p.bounds());
  }
}

double signed_ring_area(std::span<const PlanarPoint> ring) noexcept {
  const std::size_t n = ring.size();
  if (n < 3) return 0.0;
  // Shifting to the first vertex keeps the products small.
  const PlanarPoint o = ring[0];
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += cross(ring[i] - o, ring[(i + 1) % n] - o);
  }
  return 0.5 * sum;
}

double ring_set_area(std::span<const PlanarRing> rings) noexcept {
  double total = 0.0;
  for (const auto& ring : rings) total += signed_ring_area(ring);
  return std::abs(total);
}

bool point_in_ring_set(PlanarPoint p, std::span<const PlanarRing> rings) noexcept {
  if (on_boundary(p, rings)) return true;
  return crossing_parity(p, rings);
}

bool point_in_polygon(LonLat p, const Polygon& poly) noexcept {
  const PlanarPoint q = project_equal_area(p);
  if (!inflate(poly.bounds(), kOnSegmentTolerance).contains(q)) return false;
  return point_in_ring_set(q, poly.rings());
}

bool point_in_polygon(LonLat p, const MultiPolygon& poly) noexcept {
  const PlanarPoint q = project_equal_area(p);
  if (!inflate(poly.bounds(), kOnSegmentTolerance).contains(q)) return false;
  return point_in_ring_set(q, poly.rings());
}

double ring_set_intersection_area(std::span<const PlanarRing> a, const Box& a_bounds,
                                  std::span<const PlanarRing> b, const Box& b_bounds) {
  if (a.empty() || b.empty()) return 0.0;
  if (!inflate(a_bounds, kOnSegmentTolerance).intersects(b_bounds)) return 0.0;
  const std::vector<Edge> edges_a = collect_edges(a);
  const std::vector<Edge> edges_b = collect_edges(b);
  const PlanarPoint origin{0.5 * (a_bounds.min_x + a_bounds.max_x),
                           0.5 * (a_bounds.min_y + a_bounds.max_y)};
  // Green's theorem over the boundary of a ∩ b: the parts of ∂a inside b
  // plus the parts of ∂b inside a.
  const double twice = clipped_boundary_integral(edges_a, edges_b, b, b_bounds, true, origin) +
                       clipped_boundary_integral(edges_b, edges_a, a, a_bounds, false, origin);
  const double area = 0.5 * twice;
  const double cap = std::min(ring_set_area(a), ring_set_area(b));
  return std::clamp(area, 0.0, cap);
}

bool is_simple_ring(std::span<const PlanarPoint> ring) noexcept {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const PlanarPoint a = ring[i];
    const PlanarPoint b = ring[(i + 1) % n];
    const PlanarPoint c = ring[(i + 2) % n];
    // Adjacent edges folding back onto each other.
    if (std::abs(cross(b - a, c - b)) <= kOnSegmentTolerance * norm(b - a) &&
        dot(b - a, c - b) < 0.0) {
      return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const PlanarPoint a = ring[i];
    const PlanarPoint b = ring[(i + 1) % n];
    Box bi = Box::empty();
    bi.expand(a);
    bi.expand(b);
    bi = inflate(bi, kOnSegmentTolerance);
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      const PlanarPoint c = ring[j];
      const PlanarPoint d = ring[(j + 1) % n];
      Box bj = Box::empty();
      bj.expand(c);
      bj.expand(d);
      if (!bi.intersects(bj)) continue;
      if (segments_touch(a, b, c, d)) return false;
    }
  }
  return true;
}

Polygon rectangle_to_polygon(const Rectangle& r) {
  return Polygon::from_rings({{r.west(), r.south()},
                              {r.east(), r.south()},
                              {r.east(), r.north()},
                              {r.west(), r.north()}});
}

void reject_antimeridian_crossing(const Polygon& poly) {
  auto check = [](const Ring& ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(ring[i].lon - ring[(i + 1) % n].lon) > 180.0) {
        throw Error(ErrorCode::ValidationError,
                    "selections crossing the antimeridian are not supported");
      }
    }
  };
  check(poly.exterior());
  for (const Ring& h : poly.holes()) check(h);
}

Polygon validate_freehand(std::span<const LonLat> path) {
  Ring ring = clean_ring(Ring(path.begin(), path.end()));
  if (ring.size() < 3) {
    throw Error(ErrorCode::TooFewVertices,
                "freehand selection needs at least 3 distinct vertices");
  }
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(ring[i].lon - ring[(i + 1) % n].lon) > 180.0) {
      throw Error(ErrorCode::ValidationError,
                  "selections crossing the antimeridian are not supported");
    }
  }
  if (!is_simple_ring(project_ring(ring))) {
    throw Error(ErrorCode::SelfIntersectingSelection, "freehand selection crosses itself");
  }
  return Polygon::from_rings(std::move(ring));
}

std::optional<Rectangle> as_rectangle(const Polygon& poly) {
  if (!poly.holes().empty() || poly.exterior().size() != 4) return std::nullopt;
  double w = 180, s = 90, e = -180, n = -90;
  for (const LonLat& p : poly.exterior()) {
    w = std::min(w, p.lon);
    e = std::max(e, p.lon);
    s = std::min(s, p.lat);
    n = std::max(n, p.lat);
  }
  for (const LonLat& p : poly.exterior()) {
    if ((p.lon != w && p.lon != e) || (p.lat != s && p.lat != n)) return std::nullopt;
  }
  if (!(w < e) || !(s < n)) return std::nullopt;
  // Each corner of the box exactly once.
  for (const LonLat& c : {LonLat{w, s}, LonLat{e, s}, LonLat{e, n}, LonLat{w, n}}) {
    if (std::count(poly.exterior().begin(), poly.exterior().end(), c) != 1) return std::nullopt;
  }
  return Rectangle(w, s, e, n);
}

}  // namespace cogregion
