#pragma once

// Runs parsed queries against a loaded dataset and the saved regions.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cogregion/dataset.hpp"
#include "cogregion/query.hpp"
#include "cogregion/region_store.hpp"

namespace cogregion {

/// Magnitude statistics over the points of one region. min/max/mean are
/// absent for an empty region.
struct ComparisonStats {
  std::string region;
  std::size_t count = 0;
  std::optional<double> min;
  std::optional<double> max;
  std::optional<double> mean;

  friend bool operator==(const ComparisonStats&, const ComparisonStats&) = default;
};

/// The geographies a spatial reference stands for. A saved region maps to
/// its included set, an admin geography to itself.
struct RegionScope {
  std::string name;
  std::vector<std::string> geographies;

  bool contains(std::string_view geography) const;
};

/// Throws UnknownRegion, or PendingSelection for an unresolved ref.
RegionScope resolve_scope(const SpatialRef& ref, const Dataset& dataset, const RegionStore& store);

ComparisonStats region_stats(const RegionScope& scope, const Dataset& dataset);
std::pair<ComparisonStats, ComparisonStats> compare_regions(const NamedRegion& a,
                                                            const NamedRegion& b,
                                                            const Dataset& dataset);

struct ShowResult {
  std::vector<std::size_t> points;   // indices into dataset.points, ascending
  std::vector<std::string> filters;  // human-readable, one per applied filter
};

struct CompareResult {
  ComparisonStats left;
  ComparisonStats right;
};

using QueryResult = std::variant<ShowResult, CompareResult>;

/// Throws UnknownRegion or PendingSelection.
QueryResult execute(const QueryAst& ast, const Dataset& dataset, const RegionStore& store);

/// Saved region names by recency plus the dataset's geography names.
Vocabulary make_vocabulary(const Dataset& dataset, const RegionStore& store);

}  // namespace cogregion
