#pragma once

// Dataset ingestion: USGS-style point CSV plus a GeoJSON registry of admin
// geographies, joined by point-in-polygon at load time.

#include <filesystem>
#include <istream>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cogregion/coverage.hpp"
#include "cogregion/descriptors.hpp"
#include "cogregion/geo_point.hpp"
#include "cogregion/quadtree.hpp"

namespace cogregion {

struct LoadReport {
  std::size_t rows = 0;        // data rows read (header excluded)
  std::size_t loaded = 0;
  std::size_t skipped = 0;     // missing, non-finite, or out-of-range fields, or duplicate ids
  std::size_t unassigned = 0;  // loaded but outside every geography
};

/// Feature collection of Polygon/MultiPolygon features with a string
/// `name` property. Throws InvalidGeoJSON, MissingNameProperty, or
/// DuplicateGeographyName.
std::vector<AdminGeography> parse_admin(const nlohmann::json& doc);
/// Throws FileNotFound in addition to the parse_admin errors.
std::vector<AdminGeography> load_admin(const std::filesystem::path& path);

/// Requires headers id, time, latitude, longitude, mag (any order, extra
/// columns ignored). Assigns each point to the first registry geography
/// containing it. Throws HeaderMismatch or AllRowsInvalid.
std::vector<GeoPoint> read_points_csv(std::istream& in, std::span<const AdminGeography> registry = {},
                                      LoadReport* report = nullptr);
/// Throws FileNotFound in addition to the read_points_csv errors.
std::vector<GeoPoint> load_points(const std::filesystem::path& path,
                                  std::span<const AdminGeography> registry = {},
                                  LoadReport* report = nullptr);

/// Name of the first geography containing `p`, or "none".
std::string_view assign_geography(LonLat p, std::span<const AdminGeography> registry);

/// Everything the query service needs, immutable after construction.
struct Dataset {
  std::vector<GeoPoint> points;
  QuadTree index;
  std::vector<AdminGeography> registry;
  DescriptorThresholds thresholds;
  Rectangle bounds{-180, -90, 180, 90};
  LoadReport report;

  /// Fills each geography's total_points from the point assignments, builds
  /// the index and the descriptor thresholds. Throws EmptyDataset.
  static Dataset build(std::vector<GeoPoint> points, std::vector<AdminGeography> registry,
                       LoadReport report = {});
  static Dataset load(const std::filesystem::path& points_csv,
                      const std::filesystem::path& admin_geojson);

  const AdminGeography* find_geography(std::string_view name) const;
  std::vector<std::string> geography_names() const;
};

}  // namespace cogregion
