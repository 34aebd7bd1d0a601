#include "cogregion/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "cogregion/errors.hpp"

namespace cogregion {

AdminGeography AdminGeography::make(std::string name, MultiPolygon shape) {
  if (shape.empty()) throw Error(ErrorCode::ValidationError, "geography '" + name + "' has no shape");
  const double area = polygon_area(shape);
  if (!(area > 0.0)) throw Error(ErrorCode::DegeneratePolygon, "geography '" + name + "' has zero area");
  return AdminGeography{std::move(name), std::move(shape), area, 0};
}

void CoverageConfig::validate() const {
  auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!in_unit(weight_area) || !in_unit(weight_points) || !in_unit(threshold)) {
    throw Error(ErrorCode::ValidationError, "weights and threshold must lie in [0, 1]");
  }
  if (std::abs(weight_area + weight_points - 1.0) > kRelativeTolerance) {
    std::ostringstream msg;
    msg << "weights must sum to 1 (got " << weight_area << " + " << weight_points << ")";
    throw Error(ErrorCode::ValidationError, msg.str());
  }
}

double confidence_score(double p_area, double p_points, const CoverageConfig& cfg) {
  return cfg.weight_area * p_area + cfg.weight_points * p_points;
}

std::string_view to_string(SelectionKind kind) noexcept {
  return kind == SelectionKind::Rectangle ? "rectangle" : "freehand";
}

SelectionKind parse_selection_kind(std::string_view text) {
  if (text == "rectangle") return SelectionKind::Rectangle;
  if (text == "freehand") return SelectionKind::Freehand;
  throw Error(ErrorCode::ValidationError,
              "selection kind must be \"rectangle\" or \"freehand\", got \"" + std::string(text) + "\"");
}

SelectionGeometry SelectionGeometry::rectangle(const Rectangle& r) {
  return {SelectionKind::Rectangle, rectangle_to_polygon(r)};
}

SelectionGeometry SelectionGeometry::freehand(std::span<const LonLat> path) {
  return {SelectionKind::Freehand, validate_freehand(path)};
}

CoverageResult compute_coverage(const SelectionGeometry& selection,
                                std::span<const GeoPoint> points, const QuadTree& index,
                                std::span<const AdminGeography> registry,
                                const CoverageConfig& cfg) {
  cfg.validate();
  if (registry.empty()) throw Error(ErrorCode::EmptyRegistry, "no admin geographies loaded");
  reject_antimeridian_crossing(selection.shape);

  // Step 1: selected points and their geographies.
  const std::optional<Rectangle> rect = as_rectangle(selection.shape);
  const std::vector<std::uint32_t> selected =
      rect ? index.query_rectangle(*rect) : index.query_polygon(selection.shape);

  std::unordered_map<std::string_view, std::vector<std::string>> selected_by_geography;
  for (std::uint32_t i : selected) {
    const GeoPoint& p = points[i];
    if (p.admin_geography == kNoGeography) continue;
    selected_by_geography[p.admin_geography].push_back(p.id);
  }

  // Steps 2-3: geographies reached by either the selected area or the
  // selected points.
  const Box& sel_box = selection.shape.bounds();
  CoverageResult result{{}, cfg, selection, selected.size()};
  for (const AdminGeography& g : registry) {
    auto hit = selected_by_geography.find(g.name);
    const bool has_points = hit != selected_by_geography.end();
    if (!has_points && !g.shape.bounds().intersects(sel_box)) continue;

    CoverageEntry entry;
    entry.geography = g.name;
    entry.p_area =
        std::clamp(polygon_intersection_area(g.shape, selection.shape) / g.total_area, 0.0, 1.0);
    const std::size_t denominator =
        cfg.denominator == PointDenominator::PerGeography ? g.total_points : points.size();
    if (has_points && denominator > 0) {
      entry.p_points = std::min(1.0, static_cast<double>(hit->second.size()) /
                                         static_cast<double>(denominator));
      entry.selected_point_ids = std::move(hit->second);
    }
    if (entry.p_area == 0.0 && entry.p_points == 0.0) continue;
    // Steps 5-8.
    entry.score = confidence_score(entry.p_area, entry.p_points, cfg);
    if (entry.score < cfg.threshold) continue;
    result.entries.push_back(std::move(entry));
  }

  // Step 10.
  std::sort(result.entries.begin(), result.entries.end(),
            [](const CoverageEntry& a, const CoverageEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.geography < b.geography;
            });
  return result;
}

}  // namespace cogregion
