#pragma once

// GeoJSON geometry <-> geo-core types. Coordinates are [lon, lat] pairs.

#include <nlohmann/json.hpp>

#include "cogregion/geometry.hpp"

namespace cogregion::geojson {

nlohmann::json to_json(LonLat p);
nlohmann::json to_json(const Polygon& poly);
nlohmann::json to_json(const MultiPolygon& poly);

/// Accepts a Polygon geometry, or a Feature wrapping one.
/// Throws InvalidGeoJSON on malformed input.
Polygon parse_polygon(const nlohmann::json& j);

/// Accepts Polygon or MultiPolygon geometry (optionally inside a Feature).
MultiPolygon parse_multipolygon(const nlohmann::json& j);

/// Raw exterior ring of a Polygon geometry, without normalization. Used for
/// freehand paths, which are validated separately.
Ring parse_exterior_ring(const nlohmann::json& j);

}  // namespace cogregion::geojson
