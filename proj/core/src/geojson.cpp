#include "cogregion/geojson.hpp"

#include "cogregion/errors.hpp"

namespace cogregion::geojson {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::InvalidGeoJSON, "invalid GeoJSON: " + what);
}

const json& unwrap_feature(const json& j) {
  if (!j.is_object()) fail("geometry must be an object");
  auto type = j.find("type");
  if (type == j.end() || !type->is_string()) fail("missing \"type\"");
  if (*type == "Feature") {
    auto geom = j.find("geometry");
    if (geom == j.end() || !geom->is_object()) fail("Feature without geometry");
    return *geom;
  }
  return j;
}

LonLat parse_position(const json& j) {
  if (!j.is_array() || j.size() < 2 || !j[0].is_number() || !j[1].is_number()) {
    fail("position must be [lon, lat]");
  }
  LonLat p{j[0].get<double>(), j[1].get<double>()};
  if (!is_valid(p)) fail("position out of range");
  return p;
}

Ring parse_ring(const json& j) {
  if (!j.is_array()) fail("ring must be an array of positions");
  Ring ring;
  ring.reserve(j.size());
  for (const json& pos : j) ring.push_back(parse_position(pos));
  return ring;
}

Polygon parse_polygon_coords(const json& coords) {
  if (!coords.is_array() || coords.empty()) fail("Polygon needs at least one ring");
  Ring exterior = parse_ring(coords[0]);
  std::vector<Ring> holes;
  for (std::size_t i = 1; i < coords.size(); ++i) holes.push_back(parse_ring(coords[i]));
  return Polygon::from_rings(std::move(exterior), std::move(holes));
}

const json& coordinates_of(const json& geom, std::string_view type) {
  if (geom.at("type") != type) fail("expected " + std::string(type));
  auto coords = geom.find("coordinates");
  if (coords == geom.end()) fail("missing coordinates");
  return *coords;
}

json ring_to_json(const Ring& ring) {
  json out = json::array();
  for (const LonLat& p : ring) out.push_back(to_json(p));
  if (!ring.empty()) out.push_back(to_json(ring.front()));
  return out;
}

json polygon_coords(const Polygon& poly) {
  json rings = json::array();
  rings.push_back(ring_to_json(poly.exterior()));
  for (const Ring& h : poly.holes()) rings.push_back(ring_to_json(h));
  return rings;
}

}  // namespace

json to_json(LonLat p) { return json::array({p.lon, p.lat}); }

json to_json(const Polygon& poly) {
  return {{"type", "Polygon"}, {"coordinates", polygon_coords(poly)}};
}

json to_json(const MultiPolygon& poly) {
  json parts = json::array();
  for (const Polygon& p : poly.parts()) parts.push_back(polygon_coords(p));
  return {{"type", "MultiPolygon"}, {"coordinates", parts}};
}

Polygon parse_polygon(const json& j) {
  const json& geom = unwrap_feature(j);
  return parse_polygon_coords(coordinates_of(geom, "Polygon"));
}

MultiPolygon parse_multipolygon(const json& j) {
  const json& geom = unwrap_feature(j);
  const auto& type = geom.at("type");
  if (type == "Polygon") return MultiPolygon({parse_polygon_coords(coordinates_of(geom, "Polygon"))});
  if (type != "MultiPolygon") fail("expected Polygon or MultiPolygon, got " + type.dump());
  const json& coords = coordinates_of(geom, "MultiPolygon");
  if (!coords.is_array() || coords.empty()) fail("MultiPolygon needs at least one part");
  std::vector<Polygon> parts;
  parts.reserve(coords.size());
  for (const json& part : coords) parts.push_back(parse_polygon_coords(part));
  return MultiPolygon(std::move(parts));
}

Ring parse_exterior_ring(const json& j) {
  const json& geom = unwrap_feature(j);
  const json& coords = coordinates_of(geom, "Polygon");
  if (!coords.is_array() || coords.empty()) fail("Polygon needs at least one ring");
  if (coords.size() > 1) fail("selections may not contain holes");
  Ring ring = parse_ring(coords[0]);
  if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
  return ring;
}

}  // namespace cogregion::geojson
