#pragma once

// Coverage of a user selection over named administrative geographies.
//
// For every geography touched by the selection the score blends two
// proportions:
//
//   score = weight_area * p_area + weight_points * p_points
//
// p_area is the share of the geography's area inside the selection and
// p_points the share of its data points inside the selection. Entries below
// the threshold are dropped and the rest sorted by score, highest first.

#include <span>
#include <string>
#include <vector>

#include "cogregion/geo_point.hpp"
#include "cogregion/geometry.hpp"
#include "cogregion/quadtree.hpp"

namespace cogregion {

struct AdminGeography {
  std::string name;
  MultiPolygon shape;
  double total_area = 0.0;       // projected units
  std::size_t total_points = 0;  // dataset points assigned to this geography

  /// Precomputes total_area. Throws ValidationError for an empty shape.
  static AdminGeography make(std::string name, MultiPolygon shape);
};

/// How p_points is normalized.
enum class PointDenominator {
  PerGeography,  // selected points of g / all points of g
  Dataset,       // selected points of g / all points in the dataset
};

struct CoverageConfig {
  double weight_area = 0.65;
  double weight_points = 0.35;
  double threshold = 0.2;
  PointDenominator denominator = PointDenominator::PerGeography;

  /// Throws ValidationError unless both weights and the threshold lie in
  /// [0, 1] and the weights sum to 1.
  void validate() const;

  friend bool operator==(const CoverageConfig&, const CoverageConfig&) = default;
};

double confidence_score(double p_area, double p_points, const CoverageConfig& cfg = {});

enum class SelectionKind { Rectangle, Freehand };

std::string_view to_string(SelectionKind kind) noexcept;
/// Throws ValidationError for anything but "rectangle" or "freehand".
SelectionKind parse_selection_kind(std::string_view text);

struct SelectionGeometry {
  SelectionKind kind;
  Polygon shape;

  static SelectionGeometry rectangle(const Rectangle& r);
  static SelectionGeometry freehand(std::span<const LonLat> path);

  friend bool operator==(const SelectionGeometry&, const SelectionGeometry&) = default;
};

struct CoverageEntry {
  std::string geography;
  double p_area = 0.0;
  double p_points = 0.0;
  double score = 0.0;
  std::vector<std::string> selected_point_ids;
};

struct CoverageResult {
  std::vector<CoverageEntry> entries;  // score descending, ties by name
  CoverageConfig config;
  SelectionGeometry selection;
  std::size_t selected_point_count = 0;
};

/// `index` must have been built from `points`. Points carry their
/// geography assignment; points assigned to "none" only count toward
/// selected_point_count.
///
/// Throws EmptyRegistry, or ValidationError for a bad config or a selection
/// crossing the antimeridian.
CoverageResult compute_coverage(const SelectionGeometry& selection,
                                std::span<const GeoPoint> points, const QuadTree& index,
                                std::span<const AdminGeography> registry,
                                const CoverageConfig& cfg = {});

}  // namespace cogregion
