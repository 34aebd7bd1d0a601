#include "cogregion/region_store.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "cogregion/errors.hpp"
#include "cogregion/geojson.hpp"

namespace cogregion {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::ValidationError, "region store: " + what);
}

Timestamp parse_time_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) schema_error(std::string("missing ") + key);
  auto t = parse_iso8601(j[key].get<std::string>());
  if (!t) schema_error(std::string("malformed ") + key);
  return *t;
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) schema_error(std::string("missing number ") + key);
  return j[key].get<double>();
}

}  // namespace

std::vector<std::string> NamedRegion::included_geographies() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (e.included) out.push_back(e.geography);
  }
  return out;
}

bool NamedRegion::includes(std::string_view geography) const {
  return std::any_of(entries.begin(), entries.end(), [&](const SnapshotEntry& e) {
    return e.included && e.geography == geography;
  });
}

json to_json(const NamedRegion& r) {
  json config = {{"weight_area", r.config.weight_area},
                 {"weight_points", r.config.weight_points},
                 {"threshold", r.config.threshold}};
  if (r.config.denominator == PointDenominator::Dataset) config["point_denominator"] = "dataset";
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"geography", e.geography},
                       {"p_area", e.p_area},
                       {"p_points", e.p_points},
                       {"score", e.score},
                       {"included", e.included}});
  }
  return {{"name", r.name},
          {"created_at", format_iso8601(r.created_at)},
          {"last_used_at", format_iso8601(r.last_used_at)},
          {"kind", std::string(to_string(r.selection.kind))},
          {"selection", geojson::to_json(r.selection.shape)},
          {"config", config},
          {"entries", entries}};
}

NamedRegion region_from_json(const json& j) {
  if (!j.is_object()) schema_error("region must be an object");
  if (!j.contains("name") || !j["name"].is_string()) schema_error("region without a name");
  if (!j.contains("kind") || !j["kind"].is_string()) schema_error("region without a kind");
  if (!j.contains("selection")) schema_error("region without a selection");
  if (!j.contains("config") || !j["config"].is_object()) schema_error("region without a config");
  if (!j.contains("entries") || !j["entries"].is_array()) schema_error("region without entries");

  const json& cfg = j["config"];
  CoverageConfig config;
  config.weight_area = number_field(cfg, "weight_area");
  config.weight_points = number_field(cfg, "weight_points");
  config.threshold = number_field(cfg, "threshold");
  if (cfg.contains("point_denominator") && cfg["point_denominator"] == "dataset") {
    config.denominator = PointDenominator::Dataset;
  }

  NamedRegion r{j["name"].get<std::string>(),
                parse_time_field(j, "created_at"),
                parse_time_field(j, "last_used_at"),
                {parse_selection_kind(j["kind"].get<std::string>()),
                 geojson::parse_polygon(j["selection"])},
                config,
                {}};
  for (const json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("geography") || !e["geography"].is_string()) {
      schema_error("entry without a geography");
    }
    r.entries.push_back({e["geography"].get<std::string>(), number_field(e, "p_area"),
                         number_field(e, "p_points"), number_field(e, "score"),
                         e.value("included", true)});
  }
  return r;
}

std::string normalize_region_name(std::string_view name) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!name.empty() && is_space(name.front())) name.remove_prefix(1);
  while (!name.empty() && is_space(name.back())) name.remove_suffix(1);
  if (name.empty()) throw Error(ErrorCode::InvalidName, "region name must not be empty");
  if (name.size() > kMaxRegionNameLength) {
    throw Error(ErrorCode::InvalidName, "region name longer than 64 characters");
  }
  return std::string(name);
}

void atomic_write_file(const std::filesystem::path& path, std::string_view content,
                       const std::function<void(const std::filesystem::path&)>& before_rename) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + temp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + temp.string());
  }
  if (before_rename) before_rename(temp);
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot replace " + path.string() + ": " + ec.message());
}

RegionStore::RegionStore(std::filesystem::path file, Options options)
    : file_(std::move(file)), options_(std::move(options)) {
  if (!std::filesystem::exists(file_)) return;
  std::ifstream in(file_, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read region store " + file_.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    schema_error(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("version", 0) != kRegionStoreVersion) {
    schema_error("unsupported version");
  }
  if (!doc.contains("regions") || !doc["regions"].is_array()) schema_error("missing regions");
  for (const json& r : doc["regions"]) {
    NamedRegion region = region_from_json(r);
    if (find_in(regions_, region.name) != regions_.end()) {
      schema_error("duplicate region name '" + region.name + "'");
    }
    regions_.push_back(std::move(region));
  }
}

std::string RegionStore::key_of(std::string_view name) {
  std::string key;
  key.reserve(name.size());
  for (char c : name) key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return key;
}

RegionStore::Regions::const_iterator RegionStore::find_in(const Regions& regions,
                                                          std::string_view name) {
  const std::string key = key_of(name);
  return std::find_if(regions.begin(), regions.end(),
                      [&](const NamedRegion& r) { return key_of(r.name) == key; });
}

void RegionStore::persist(const Regions& regions) const {
  json doc = {{"version", kRegionStoreVersion}, {"regions", json::array()}};
  for (const auto& r : regions) doc["regions"].push_back(to_json(r));
  atomic_write_file(file_, doc.dump(2) + "\n", options_.before_rename);
}

NamedRegion RegionStore::save_region(std::string_view name, const SelectionGeometry& selection,
                                     const CoverageResult& coverage,
                                     const std::vector<std::string>& included, Timestamp now) {
  std::string clean = normalize_region_name(name);
  std::set<std::string, std::less<>> include_set(included.begin(), included.end());
  for (const auto& g : include_set) {
    const bool known = std::any_of(coverage.entries.begin(), coverage.entries.end(),
                                   [&](const CoverageEntry& e) { return e.geography == g; });
    if (!known) {
      throw Error(ErrorCode::UnknownGeographyInIncludedSet,
                  "'" + g + "' is not among the coverage entries");
    }
  }

  NamedRegion region{std::move(clean), now, now, selection, coverage.config, {}};
  for (const auto& e : coverage.entries) {
    region.entries.push_back(
        {e.geography, e.p_area, e.p_points, e.score, include_set.contains(e.geography)});
  }

  std::unique_lock lock(mutex_);
  if (find_in(regions_, region.name) != regions_.end()) {
    throw Error(ErrorCode::DuplicateName, "a region named '" + region.name + "' already exists");
  }
  Regions next = regions_;
  next.push_back(region);
  persist(next);
  regions_ = std::move(next);
  return region;
}

NamedRegion RegionStore::get_region(std::string_view name) const {
  auto r = find_region(name);
  if (!r) throw Error(ErrorCode::UnknownRegion, "no region named '" + std::string(name) + "'");
  return *r;
}

std::optional<NamedRegion> RegionStore::find_region(std::string_view name) const {
  std::shared_lock lock(mutex_);
  auto it = find_in(regions_, name);
  if (it == regions_.end()) return std::nullopt;
  return *it;
}

std::vector<NamedRegion> RegionStore::list_regions() const {
  std::shared_lock lock(mutex_);
  Regions out = regions_;
  std::sort(out.begin(), out.end(), [](const NamedRegion& a, const NamedRegion& b) {
    if (a.last_used_at != b.last_used_at) return a.last_used_at > b.last_used_at;
    return a.name < b.name;
  });
  return out;
}

std::vector<std::string> RegionStore::names_by_recency() const {
  std::vector<std::string> names;
  for (const auto& r : list_regions()) names.push_back(r.name);
  return names;
}

void RegionStore::delete_region(std::string_view name) {
  std::unique_lock lock(mutex_);
  auto it = find_in(regions_, name);
  if (it == regions_.end()) {
    throw Error(ErrorCode::UnknownRegion, "no region named '" + std::string(name) + "'");
  }
  Regions next = regions_;
  next.erase(next.begin() + (it - regions_.begin()));
  persist(next);
  regions_ = std::move(next);
}

NamedRegion RegionStore::remove_geography(std::string_view name, std::string_view geography,
                                          Timestamp now) {
  std::unique_lock lock(mutex_);
  auto it = find_in(regions_, name);
  if (it == regions_.end()) {
    throw Error(ErrorCode::UnknownRegion, "no region named '" + std::string(name) + "'");
  }
  Regions next = regions_;
  NamedRegion& region = next[static_cast<std::size_t>(it - regions_.begin())];
  auto entry = std::find_if(region.entries.begin(), region.entries.end(),
                            [&](const SnapshotEntry& e) { return e.geography == geography; });
  if (entry == region.entries.end() || !entry->included) {
    throw Error(ErrorCode::GeographyNotIncluded,
                "'" + std::string(geography) + "' is not included in '" + region.name + "'");
  }
  entry->included = false;
  region.last_used_at = now;
  NamedRegion updated = region;
  persist(next);
  regions_ = std::move(next);
  return updated;
}

std::size_t RegionStore::size() const {
  std::shared_lock lock(mutex_);
  return regions_.size();
}

}  // namespace cogregion
