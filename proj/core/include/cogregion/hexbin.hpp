#pragma once

// Pointy-top hexagonal binning in projected space for map previews.

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "cogregion/geo_point.hpp"
#include "cogregion/geometry.hpp"

namespace cogregion {

inline constexpr int kHexBaseColumns = 24;
inline constexpr int kHexBaseZoom = 3;
inline constexpr int kMaxZoom = 22;

/// Axial coordinates of a hex cell.
struct HexCell {
  int q = 0;
  int r = 0;

  friend auto operator<=>(const HexCell&, const HexCell&) = default;
};

struct HexGridSpec {
  PlanarPoint origin{0.0, 0.0};
  double hex_size = 1.0;  // center-to-vertex, projected units
};

struct HexBin {
  LonLat center;
  std::size_t count = 0;
  HexCell cell;
};

/// Projected viewport width / (24 * 2^(zoom - 3)). Throws ValidationError
/// for zoom outside [0, 22].
double hex_size_for_zoom(int zoom, const Rectangle& viewport);

HexCell assign_hex(PlanarPoint p, const HexGridSpec& grid) noexcept;
inline HexCell assign_hex(LonLat p, const HexGridSpec& grid) noexcept {
  return assign_hex(project_equal_area(p), grid);
}

PlanarPoint hex_center(HexCell cell, const HexGridSpec& grid) noexcept;

/// Counts the points inside `viewport` per cell of a grid anchored at the
/// projected origin. Bins are sorted by count descending, then by cell.
/// `hex_size_override` replaces the zoom-derived size when set (must be > 0).
std::vector<HexBin> aggregate_hexbins(std::span<const GeoPoint> points, const Rectangle& viewport,
                                      int zoom, std::optional<double> hex_size_override = {});

}  // namespace cogregion
