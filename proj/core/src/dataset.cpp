#include "cogregion/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <unordered_set>

#include "cogregion/errors.hpp"
#include "cogregion/geojson.hpp"
#include "csv.hpp"

namespace cogregion {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

void require_exists(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error(ErrorCode::FileNotFound, "file not found: " + path.string());
  }
}

}  // namespace

std::vector<AdminGeography> parse_admin(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" ||
      !doc.contains("features") || !doc["features"].is_array()) {
    throw Error(ErrorCode::InvalidGeoJSON, "admin file must be a GeoJSON FeatureCollection");
  }
  std::vector<AdminGeography> registry;
  std::unordered_set<std::string> names;
  std::size_t index = 0;
  for (const auto& feature : doc["features"]) {
    ++index;
    if (!feature.is_object() || !feature.contains("geometry")) {
      throw Error(ErrorCode::InvalidGeoJSON, "feature " + std::to_string(index) + " has no geometry");
    }
    const auto props = feature.find("properties");
    if (props == feature.end() || !props->is_object() || !props->contains("name") ||
        !(*props)["name"].is_string()) {
      throw Error(ErrorCode::MissingNameProperty,
                  "feature " + std::to_string(index) + " has no string 'name' property");
    }
    std::string name = (*props)["name"].get<std::string>();
    if (!names.insert(name).second) {
      throw Error(ErrorCode::DuplicateGeographyName, "duplicate geography name '" + name + "'");
    }
    MultiPolygon shape;
    try {
      shape = geojson::parse_multipolygon(feature["geometry"]);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidGeoJSON, "geography '" + name + "': " + e.what());
    }
    registry.push_back(AdminGeography::make(std::move(name), std::move(shape)));
  }
  return registry;
}

std::vector<AdminGeography> load_admin(const std::filesystem::path& path) {
  require_exists(path);
  std::ifstream in(path, std::ios::binary);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidGeoJSON, path.string() + ": " + e.what());
  }
  return parse_admin(doc);
}

std::string_view assign_geography(LonLat p, std::span<const AdminGeography> registry) {
  for (const AdminGeography& g : registry) {
    if (point_in_polygon(p, g.shape)) return g.name;
  }
  return kNoGeography;
}

std::vector<GeoPoint> read_points_csv(std::istream& in, std::span<const AdminGeography> registry,
                                      LoadReport* report) {
  detail::CsvReader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw Error(ErrorCode::HeaderMismatch, "points file is empty");
  if (!fields.empty() && fields[0].starts_with("\xEF\xBB\xBF")) fields[0].erase(0, 3);

  static constexpr std::array<std::string_view, 5> kRequired{"id", "time", "latitude",
                                                              "longitude", "mag"};
  std::map<std::string_view, std::size_t> column;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::string_view name = trim(fields[i]);
    for (std::string_view req : kRequired) {
      if (name == req && !column.contains(req)) column[req] = i;
    }
  }
  std::string missing;
  for (std::string_view req : kRequired) {
    if (!column.contains(req)) missing += (missing.empty() ? "" : ", ") + std::string(req);
  }
  if (!missing.empty()) throw Error(ErrorCode::HeaderMismatch, "missing required columns: " + missing);
  const std::size_t width = 1 + std::max({column["id"], column["time"], column["latitude"],
                                          column["longitude"], column["mag"]});

  LoadReport local;
  std::vector<GeoPoint> points;
  std::unordered_set<std::string> seen;
  while (reader.next(fields)) {
    if (fields.size() == 1 && trim(fields[0]).empty()) continue;  // blank line
    ++local.rows;
    if (fields.size() < width) {
      ++local.skipped;
      continue;
    }
    const std::string id(trim(fields[column["id"]]));
    const auto lat = parse_double(fields[column["latitude"]]);
    const auto lon = parse_double(fields[column["longitude"]]);
    const auto mag = parse_double(fields[column["mag"]]);
    const auto time = parse_iso8601(fields[column["time"]]);
    if (id.empty() || !lat || !lon || !mag || !time || !is_valid({*lon, *lat}) ||
        seen.contains(id)) {
      ++local.skipped;
      continue;
    }
    seen.insert(id);
    GeoPoint p{id, {*lon, *lat}, *mag, *time, std::string(kNoGeography)};
    p.admin_geography = std::string(assign_geography(p.position, registry));
    if (p.admin_geography == kNoGeography) ++local.unassigned;
    points.push_back(std::move(p));
  }
  local.loaded = points.size();
  if (report) *report = local;
  if (points.empty()) {
    throw Error(ErrorCode::AllRowsInvalid,
                "no valid rows (" + std::to_string(local.rows) + " read, all skipped)");
  }
  return points;
}

std::vector<GeoPoint> load_points(const std::filesystem::path& path,
                                  std::span<const AdminGeography> registry, LoadReport* report) {
  require_exists(path);
  std::ifstream in(path, std::ios::binary);
  return read_points_csv(in, registry, report);
}

Dataset Dataset::build(std::vector<GeoPoint> points, std::vector<AdminGeography> registry,
                       LoadReport report) {
  if (points.empty()) throw Error(ErrorCode::EmptyDataset, "dataset has no points");
  std::map<std::string_view, std::size_t> counts;
  for (const GeoPoint& p : points) ++counts[p.admin_geography];
  for (AdminGeography& g : registry) {
    auto it = counts.find(g.name);
    g.total_points = it == counts.end() ? 0 : it->second;
  }

  double w = 180, s = 90, e = -180, n = -90;
  for (const GeoPoint& p : points) {
    w = std::min(w, p.position.lon);
    e = std::max(e, p.position.lon);
    s = std::min(s, p.position.lat);
    n = std::max(n, p.position.lat);
  }
  constexpr double pad = 1e-6;
  if (!(w < e)) {
    w = std::max(-180.0, w - pad);
    e = std::min(180.0, e + pad);
  }
  if (!(s < n)) {
    s = std::max(-90.0, s - pad);
    n = std::min(90.0, n + pad);
  }

  Dataset d{std::move(points), QuadTree{}, std::move(registry), {}, Rectangle(w, s, e, n), report};
  d.index = QuadTree(d.points);
  d.thresholds = compute_descriptor_thresholds(d.points);
  return d;
}

Dataset Dataset::load(const std::filesystem::path& points_csv,
                      const std::filesystem::path& admin_geojson) {
  std::vector<AdminGeography> registry = load_admin(admin_geojson);
  LoadReport report;
  std::vector<GeoPoint> points = load_points(points_csv, registry, &report);
  return build(std::move(points), std::move(registry), report);
}

const AdminGeography* Dataset::find_geography(std::string_view name) const {
  for (const auto& g : registry) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

std::vector<std::string> Dataset::geography_names() const {
  std::vector<std::string> names;
  names.reserve(registry.size());
  for (const auto& g : registry) names.push_back(g.name);
  return names;
}

}  // namespace cogregion
