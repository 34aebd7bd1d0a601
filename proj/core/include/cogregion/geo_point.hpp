#pragma once

#include <string>

#include "cogregion/geometry.hpp"
#include "cogregion/time.hpp"

namespace cogregion {

inline constexpr const char* kNoGeography = "none";

/// One record of the dataset.
struct GeoPoint {
  std::string id;
  LonLat position;
  double magnitude = 0.0;
  Timestamp timestamp{};
  /// Name of the containing admin geography, resolved at ingestion.
  std::string admin_geography = kNoGeography;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

}  // namespace cogregion
