#include "cogregion/api.hpp"

#include <charconv>
#include <cstdio>

#include "cogregion/geojson.hpp"

namespace cogregion {
namespace {

using nlohmann::json;

constexpr std::string_view kRegionsPrefix = "/api/regions/";
constexpr std::string_view kRemoveSuffix = "/remove";

ApiResponse ok(json body, int status = 200) { return {status, std::move(body)}; }

ApiResponse fail(int status, const Error& e, std::optional<std::size_t> position = {}) {
  return {status, error_body(e, position)};
}

int status_for(ErrorCode code, bool region_route) {
  switch (code) {
    case ErrorCode::UnknownRegion:
      return region_route ? 404 : 422;
    case ErrorCode::DuplicateName:
    case ErrorCode::UnknownGeographyInIncludedSet:
    case ErrorCode::GeographyNotIncluded:
    case ErrorCode::StaleCoverage:
    case ErrorCode::EmptyRegistry:
      return 422;
    case ErrorCode::IoError:
      return 500;
    default:
      return 400;
  }
}

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::ValidationError, message);
}

json parse_body(const std::string& text) {
  json body;
  try {
    body = json::parse(text.empty() ? std::string("{}") : text);
  } catch (const json::exception&) {
    invalid("request body is not valid JSON");
  }
  if (!body.is_object()) invalid("request body must be a JSON object");
  return body;
}

std::string string_field(const json& body, const char* key) {
  if (!body.contains(key) || !body[key].is_string()) {
    invalid(std::string("'") + key + "' must be a string");
  }
  return body[key].get<std::string>();
}

double number_param(const ApiRequest& r, const char* key) {
  auto it = r.params.find(key);
  if (it == r.params.end()) invalid(std::string("missing query parameter '") + key + "'");
  const std::string& s = it->second;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    invalid(std::string("query parameter '") + key + "' is not a number");
  }
  return v;
}

std::optional<double> optional_number(const json& body, const char* key) {
  if (!body.contains(key) || body[key].is_null()) return std::nullopt;
  if (!body[key].is_number()) invalid(std::string("'") + key + "' must be a number");
  return body[key].get<double>();
}

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g;", v);
  out += buf;
}

}  // namespace

json to_json(const GeoPoint& p) {
  return {{"id", p.id},
          {"lon", p.position.lon},
          {"lat", p.position.lat},
          {"mag", p.magnitude},
          {"time", format_iso8601(p.timestamp)},
          {"admin_geography", p.admin_geography}};
}

json to_json(const Suggestion& s) {
  if (s.kind == Suggestion::Kind::MapWidgetTrigger) {
    return {{"kind", "map_widget"}, {"rank", s.rank}};
  }
  return {{"kind", "text"}, {"text", s.text}, {"rank", s.rank}, {"replace_from", s.replace_from}};
}

json to_json(const ParseOutcome& outcome) {
  json suggestions = json::array();
  for (const auto& s : outcome.suggestions) suggestions.push_back(to_json(s));
  json body = {{"status", to_string(outcome.status)},
               {"suggestions", suggestions},
               {"expected", outcome.expected},
               {"widget", outcome.widget_trigger ? json("map") : json(nullptr)}};
  if (outcome.status == ParseOutcome::Status::Invalid) {
    body["position"] = outcome.position;
    body["message"] = outcome.message;
  }
  return body;
}

json to_json(const CoverageEntry& e) {
  return {{"geography", e.geography},
          {"p_area", e.p_area},
          {"p_points", e.p_points},
          {"score", e.score}};
}

json to_json(const ComparisonStats& s) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  return {{"region", s.region},
          {"count", s.count},
          {"min", opt(s.min)},
          {"max", opt(s.max)},
          {"mean", opt(s.mean)}};
}

json to_json(const HexBin& b) {
  return {{"lon", b.center.lon},
          {"lat", b.center.lat},
          {"count", b.count},
          {"q", b.cell.q},
          {"r", b.cell.r}};
}

json to_json(const DescriptorThresholds& t) {
  return {{"large_magnitude", t.large_magnitude},
          {"small_magnitude", t.small_magnitude},
          {"recent_from", format_iso8601(t.recent_from)}};
}

json to_json(const Rectangle& r) {
  return {{"west", r.west()}, {"south", r.south()}, {"east", r.east()}, {"north", r.north()}};
}

json error_body(const Error& e, std::optional<std::size_t> position) {
  json body = {{"code", to_string(e.code())}, {"message", e.what()}};
  if (position) body["position"] = *position;
  return body;
}

SelectionGeometry parse_selection(const json& geometry, std::string_view kind) {
  if (kind == "freehand") {
    const Ring path = geojson::parse_exterior_ring(geometry);
    return SelectionGeometry::freehand(path);
  }
  if (kind != "rectangle" && kind != "auto") {
    invalid("kind must be 'rectangle', 'freehand', or 'auto'");
  }
  const Polygon poly = geojson::parse_polygon(geometry);
  if (auto rect = as_rectangle(poly)) return SelectionGeometry::rectangle(*rect);
  if (kind == "rectangle") invalid("selection is not an axis-aligned rectangle");
  const Ring path = geojson::parse_exterior_ring(geometry);
  return SelectionGeometry::freehand(path);
}

CoverageConfig parse_coverage_config(const json& body, const CoverageConfig& defaults) {
  CoverageConfig cfg = defaults;
  if (auto t = optional_number(body, "threshold")) cfg.threshold = *t;
  const auto wa = optional_number(body, "weight_area");
  const auto wp = optional_number(body, "weight_points");
  if (wa) cfg.weight_area = *wa;
  if (wp) cfg.weight_points = *wp;
  if (wa && !wp) cfg.weight_points = 1.0 - *wa;
  if (wp && !wa) cfg.weight_area = 1.0 - *wp;
  cfg.validate();
  return cfg;
}

std::string coverage_token(const CoverageResult& result) {
  std::string canon = geojson::to_json(result.selection.shape).dump();
  canon += ';';
  canon += to_string(result.selection.kind);
  canon += ';';
  append_number(canon, result.config.weight_area);
  append_number(canon, result.config.weight_points);
  append_number(canon, result.config.threshold);
  canon += result.config.denominator == PointDenominator::Dataset ? "d;" : "g;";
  for (const auto& e : result.entries) {
    canon += e.geography;
    canon += ';';
    append_number(canon, e.p_area);
    append_number(canon, e.p_points);
    append_number(canon, e.score);
  }
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "v1-%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json coverage_to_json(const CoverageResult& result) {
  json entries = json::array();
  for (const auto& e : result.entries) entries.push_back(to_json(e));
  return {{"entries", entries},
          {"selected_point_count", result.selected_point_count},
          {"coverage_token", coverage_token(result)}};
}

Api::Api(const Dataset& dataset, RegionStore& store, CoverageConfig defaults)
    : dataset_(dataset), store_(store), defaults_(defaults) {
  defaults_.validate();
}

ApiResponse Api::handle(const ApiRequest& r) const {
  const std::string_view path = r.path;
  const bool region_route = path.starts_with("/api/regions");
  try {
    if (r.method == "GET" && path == "/api/autocomplete") return autocomplete(r);
    if (r.method == "GET" && path == "/api/hexbins") return hexbins(r);
    if (r.method == "GET" && path == "/api/meta") return meta();
    if (r.method == "GET" && path == "/api/regions") return list_regions();
    if (r.method == "POST" && path == "/api/query") return query(parse_body(r.body));
    if (r.method == "POST" && path == "/api/coverage") return coverage(parse_body(r.body));
    if (r.method == "POST" && path == "/api/compare") return compare(parse_body(r.body));
    if (r.method == "POST" && path == "/api/regions") return save_region(parse_body(r.body));
    if (path.starts_with(kRegionsPrefix) && path.size() > kRegionsPrefix.size()) {
      std::string_view rest = path.substr(kRegionsPrefix.size());
      if (r.method == "DELETE") return delete_region(rest);
      if (r.method == "POST" && rest.ends_with(kRemoveSuffix) && rest.size() > kRemoveSuffix.size()) {
        rest.remove_suffix(kRemoveSuffix.size());
        return remove_geography(rest, parse_body(r.body));
      }
    }
    return {404, {{"code", "NotFound"}, {"message", r.method + " " + r.path + " is not an endpoint"}}};
  } catch (const Error& e) {
    return fail(status_for(e.code(), region_route), e);
  } catch (const json::exception& e) {
    return fail(400, Error(ErrorCode::ValidationError, e.what()));
  } catch (const std::exception& e) {
    return fail(500, Error(ErrorCode::IoError, e.what()));
  }
}

ApiResponse Api::autocomplete(const ApiRequest& r) const {
  auto it = r.params.find("q");
  const std::string q = it == r.params.end() ? std::string() : it->second;
  return ok(to_json(parse(q, make_vocabulary(dataset_, store_))));
}

ApiResponse Api::query(const json& body) const {
  const std::string text = string_field(body, "text");
  const ParseOutcome outcome = parse(text, make_vocabulary(dataset_, store_));
  if (outcome.unknown_region || outcome.unresolved_region) {
    const std::string name = outcome.unknown_region ? *outcome.unknown_region : *outcome.unresolved_region;
    return fail(422, Error(ErrorCode::UnknownRegion, "no region named '" + name + "'"));
  }
  if (outcome.status == ParseOutcome::Status::Invalid) {
    return fail(400, Error(ErrorCode::ValidationError, outcome.message), outcome.position);
  }
  if (outcome.status == ParseOutcome::Status::Partial) {
    if (outcome.widget_trigger) {
      return fail(400, Error(ErrorCode::PendingSelection, "query is waiting for a map selection"),
                  text.size());
    }
    return fail(400, Error(ErrorCode::ValidationError, "query is incomplete"), text.size());
  }

  const QueryResult result = execute(*outcome.ast, dataset_, store_);
  if (const auto* cmp = std::get_if<CompareResult>(&result)) {
    return ok({{"kind", "compare"}, {"left", to_json(cmp->left)}, {"right", to_json(cmp->right)}});
  }
  const auto& show = std::get<ShowResult>(result);
  json points = json::array();
  for (std::size_t i : show.points) points.push_back(to_json(dataset_.points[i]));
  return ok({{"kind", "show"}, {"points", points}, {"filters", show.filters}});
}

ApiResponse Api::coverage(const json& body) const {
  if (!body.contains("selection")) invalid("'selection' is required");
  const std::string kind = body.contains("kind") ? string_field(body, "kind") : "auto";
  const SelectionGeometry selection = parse_selection(body["selection"], kind);
  const CoverageConfig cfg = parse_coverage_config(body, defaults_);
  const CoverageResult result =
      compute_coverage(selection, dataset_.points, dataset_.index, dataset_.registry, cfg);
  return ok(coverage_to_json(result));
}

ApiResponse Api::hexbins(const ApiRequest& r) const {
  const Rectangle viewport(number_param(r, "west"), number_param(r, "south"),
                           number_param(r, "east"), number_param(r, "north"));
  const double zoom = number_param(r, "zoom");
  if (zoom != static_cast<double>(static_cast<int>(zoom))) invalid("zoom must be an integer");
  std::optional<double> hex_size;
  if (r.params.contains("hex_size")) {
    hex_size = number_param(r, "hex_size");
    if (!(*hex_size > 0.0)) invalid("hex_size must be positive");
  }
  json bins = json::array();
  for (const auto& b : aggregate_hexbins(dataset_.points, viewport, static_cast<int>(zoom), hex_size)) {
    bins.push_back(to_json(b));
  }
  return ok({{"bins", bins}});
}

ApiResponse Api::list_regions() const {
  json regions = json::array();
  for (const auto& region : store_.list_regions()) regions.push_back(to_json(region));
  return ok({{"regions", regions}});
}

ApiResponse Api::save_region(const json& body) const {
  const std::string name = string_field(body, "name");
  if (!body.contains("selection")) invalid("'selection' is required");
  const std::string kind = body.contains("kind") ? string_field(body, "kind") : "auto";
  const SelectionGeometry selection = parse_selection(body["selection"], kind);
  const CoverageConfig cfg = parse_coverage_config(body, defaults_);
  const CoverageResult result =
      compute_coverage(selection, dataset_.points, dataset_.index, dataset_.registry, cfg);
  if (body.contains("coverage_token")) {
    if (string_field(body, "coverage_token") != coverage_token(result)) {
      throw Error(ErrorCode::StaleCoverage,
                  "coverage changed since it was computed; recompute before saving");
    }
  }
  std::vector<std::string> included;
  if (body.contains("included")) {
    if (!body["included"].is_array()) invalid("'included' must be an array of names");
    included = body["included"].get<std::vector<std::string>>();
  } else {
    for (const auto& e : result.entries) included.push_back(e.geography);
  }
  return ok(to_json(store_.save_region(name, selection, result, included)), 201);
}

ApiResponse Api::delete_region(std::string_view name) const {
  store_.delete_region(name);
  return ok({{"deleted", std::string(name)}});
}

ApiResponse Api::remove_geography(std::string_view name, const json& body) const {
  const std::string geography = string_field(body, "geography");
  return ok(to_json(store_.remove_geography(name, geography)));
}

RegionScope Api::scope_for_name(std::string_view name) const {
  if (store_.find_region(name)) {
    return resolve_scope({SpatialRef::Kind::NamedRegion, std::string(name)}, dataset_, store_);
  }
  return resolve_scope({SpatialRef::Kind::Geography, std::string(name)}, dataset_, store_);
}

ApiResponse Api::compare(const json& body) const {
  const RegionScope left = scope_for_name(string_field(body, "left"));
  const RegionScope right = scope_for_name(string_field(body, "right"));
  return ok({{"left", to_json(region_stats(left, dataset_))},
             {"right", to_json(region_stats(right, dataset_))}});
}

ApiResponse Api::meta() const {
  const LoadReport& rep = dataset_.report;
  return ok({{"bounds", to_json(dataset_.bounds)},
             {"point_count", dataset_.points.size()},
             {"geography_names", dataset_.geography_names()},
             {"descriptor_thresholds", to_json(dataset_.thresholds)},
             {"load_report",
              {{"rows", rep.rows},
               {"loaded", rep.loaded},
               {"skipped", rep.skipped},
               {"unassigned", rep.unassigned}}}});
}

}  // namespace cogregion
