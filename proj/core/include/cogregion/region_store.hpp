#pragma once

// Named cognitive regions persisted to a single JSON document.
//
// File layout:
//   { "version": 1,
//     "regions": [ { "name", "created_at", "last_used_at", "kind",
//                    "selection": <GeoJSON Polygon>,
//                    "config": {"weight_area", "weight_points", "threshold"},
//                    "entries": [{"geography", "p_area", "p_points",
//                                 "score", "included"}] } ] }
//
// Every mutation rewrites the file through a temp file and a rename before
// returning, so a crash leaves either the old or the new document.

#include <filesystem>
#include <functional>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cogregion/coverage.hpp"
#include "cogregion/time.hpp"

namespace cogregion {

inline constexpr int kRegionStoreVersion = 1;
inline constexpr std::size_t kMaxRegionNameLength = 64;

/// One row of the coverage snapshot taken when the region was saved.
struct SnapshotEntry {
  std::string geography;
  double p_area = 0.0;
  double p_points = 0.0;
  double score = 0.0;
  bool included = true;

  friend bool operator==(const SnapshotEntry&, const SnapshotEntry&) = default;
};

struct NamedRegion {
  std::string name;
  Timestamp created_at{};
  Timestamp last_used_at{};
  SelectionGeometry selection;
  CoverageConfig config;
  std::vector<SnapshotEntry> entries;

  std::vector<std::string> included_geographies() const;
  bool includes(std::string_view geography) const;

  friend bool operator==(const NamedRegion&, const NamedRegion&) = default;
};

nlohmann::json to_json(const NamedRegion& region);
/// Throws ValidationError on schema violations.
NamedRegion region_from_json(const nlohmann::json& j);

/// Trims surrounding whitespace; throws InvalidName when the result is empty
/// or longer than 64 characters.
std::string normalize_region_name(std::string_view name);

class RegionStore {
 public:
  struct Options {
    /// Called after the temp file is written and before it is renamed over
    /// the store file. Lets tests simulate a crash at that point.
    std::function<void(const std::filesystem::path& temp)> before_rename;
  };

  /// Loads the file when it exists; otherwise starts empty and creates the
  /// file on the first mutation. Throws ValidationError for a corrupt file.
  explicit RegionStore(std::filesystem::path file, Options options = {});

  const std::filesystem::path& path() const noexcept { return file_; }

  /// Throws DuplicateName, InvalidName, or UnknownGeographyInIncludedSet.
  NamedRegion save_region(std::string_view name, const SelectionGeometry& selection,
                          const CoverageResult& coverage,
                          const std::vector<std::string>& included, Timestamp now = now_utc());

  /// Throws UnknownRegion.
  NamedRegion get_region(std::string_view name) const;
  std::optional<NamedRegion> find_region(std::string_view name) const;

  /// Most recently used first; ties by name.
  std::vector<NamedRegion> list_regions() const;
  std::vector<std::string> names_by_recency() const;

  /// Throws UnknownRegion.
  void delete_region(std::string_view name);

  /// Drops one geography from the included set, leaving the snapshot
  /// scores untouched. Throws UnknownRegion or GeographyNotIncluded.
  NamedRegion remove_geography(std::string_view name, std::string_view geography,
                               Timestamp now = now_utc());

  std::size_t size() const;

 private:
  using Regions = std::vector<NamedRegion>;

  void persist(const Regions& regions) const;
  static std::string key_of(std::string_view name);
  static Regions::const_iterator find_in(const Regions& regions, std::string_view name);

  std::filesystem::path file_;
  Options options_;
  mutable std::shared_mutex mutex_;
  Regions regions_;
};

/// Writes `content` to `path` via `path.tmp` and a rename. `before_rename`
/// may throw to abort before the rename happens.
void atomic_write_file(const std::filesystem::path& path, std::string_view content,
                       const std::function<void(const std::filesystem::path&)>& before_rename = {});

}  // namespace cogregion
