#pragma once

// Transport-independent JSON API. The HTTP server in tools/ forwards every
// request under /api to Api::handle.
//
//   GET    /api/autocomplete?q=
//   POST   /api/query            {text}
//   POST   /api/coverage         {selection, kind, threshold?, weight_area?, weight_points?}
//   GET    /api/hexbins?west&south&east&north&zoom[&hex_size]
//   GET    /api/regions
//   POST   /api/regions          {name, selection, kind, included?, coverage_token?, ...}
//   DELETE /api/regions/{name}
//   POST   /api/regions/{name}/remove {geography}
//   POST   /api/compare          {left, right}
//   GET    /api/meta
//
// Failures are {code, message, position?} with status 400, 404 or 422
// (500 for storage failures).

#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cogregion/coverage.hpp"
#include "cogregion/dataset.hpp"
#include "cogregion/errors.hpp"
#include "cogregion/executor.hpp"
#include "cogregion/hexbin.hpp"
#include "cogregion/query.hpp"
#include "cogregion/region_store.hpp"

namespace cogregion {

struct ApiRequest {
  std::string method;  // upper case
  std::string path;    // decoded, without the query string
  std::map<std::string, std::string, std::less<>> params;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

nlohmann::json to_json(const GeoPoint& p);
nlohmann::json to_json(const Suggestion& s);
nlohmann::json to_json(const ParseOutcome& outcome);
nlohmann::json to_json(const CoverageEntry& e);
nlohmann::json to_json(const ComparisonStats& s);
nlohmann::json to_json(const HexBin& b);
nlohmann::json to_json(const DescriptorThresholds& t);
nlohmann::json to_json(const Rectangle& r);

/// `kind` is "rectangle", "freehand", or "auto" (rectangle when the ring
/// is an axis-aligned box). Throws ValidationError or geometry errors.
SelectionGeometry parse_selection(const nlohmann::json& geometry, std::string_view kind);

/// Reads threshold / weight_area / weight_points over `defaults`. When only
/// one weight is given the other becomes its complement.
CoverageConfig parse_coverage_config(const nlohmann::json& body, const CoverageConfig& defaults);

/// Fingerprint of a coverage result: selection, config, and every entry.
/// Saving a region with a token that no longer matches fails with
/// StaleCoverage.
std::string coverage_token(const CoverageResult& result);

/// {entries, selected_point_count, coverage_token}
nlohmann::json coverage_to_json(const CoverageResult& result);

nlohmann::json error_body(const Error& e, std::optional<std::size_t> position = {});

class Api {
 public:
  Api(const Dataset& dataset, RegionStore& store, CoverageConfig defaults = {});

  /// Never throws.
  ApiResponse handle(const ApiRequest& request) const;

  const CoverageConfig& defaults() const noexcept { return defaults_; }

 private:
  ApiResponse autocomplete(const ApiRequest& r) const;
  ApiResponse query(const nlohmann::json& body) const;
  ApiResponse coverage(const nlohmann::json& body) const;
  ApiResponse hexbins(const ApiRequest& r) const;
  ApiResponse list_regions() const;
  ApiResponse save_region(const nlohmann::json& body) const;
  ApiResponse delete_region(std::string_view name) const;
  ApiResponse remove_geography(std::string_view name, const nlohmann::json& body) const;
  ApiResponse compare(const nlohmann::json& body) const;
  ApiResponse meta() const;

  RegionScope scope_for_name(std::string_view name) const;

  const Dataset& dataset_;
  RegionStore& store_;
  CoverageConfig defaults_;
};

}  // namespace cogregion
