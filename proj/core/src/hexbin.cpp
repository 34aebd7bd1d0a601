#include "cogregion/hexbin.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cogregion/errors.hpp"

namespace cogregion {
namespace {

const double kSqrt3 = std::sqrt(3.0);

}  // namespace

double hex_size_for_zoom(int zoom, const Rectangle& viewport) {
  if (zoom < 0 || zoom > kMaxZoom) {
    throw Error(ErrorCode::ValidationError, "zoom must be in [0, 22]");
  }
  const double width = viewport.projected().width();
  return width / (kHexBaseColumns * std::ldexp(1.0, zoom - kHexBaseZoom));
}

HexCell assign_hex(PlanarPoint p, const HexGridSpec& grid) noexcept {
  const double x = (p.x - grid.origin.x) / grid.hex_size;
  const double y = (p.y - grid.origin.y) / grid.hex_size;
  const double fq = (kSqrt3 / 3.0) * x - y / 3.0;
  const double fr = (2.0 / 3.0) * y;
  const double fs = -fq - fr;

  double rq = std::round(fq);
  double rr = std::round(fr);
  const double rs = std::round(fs);
  const double dq = std::abs(rq - fq);
  const double dr = std::abs(rr - fr);
  const double ds = std::abs(rs - fs);
  if (dq > dr && dq > ds) {
    rq = -rr - rs;
  } else if (dr > ds) {
    rr = -rq - rs;
  }
  return {static_cast<int>(rq), static_cast<int>(rr)};
}

PlanarPoint hex_center(HexCell cell, const HexGridSpec& grid) noexcept {
  return {grid.origin.x + grid.hex_size * kSqrt3 * (cell.q + cell.r / 2.0),
          grid.origin.y + grid.hex_size * 1.5 * cell.r};
}

std::vector<HexBin> aggregate_hexbins(std::span<const GeoPoint> points, const Rectangle& viewport,
                                      int zoom, std::optional<double> hex_size_override) {
  HexGridSpec grid;
  if (hex_size_override) {
    if (!(*hex_size_override > 0.0) || !std::isfinite(*hex_size_override)) {
      throw Error(ErrorCode::ValidationError, "hex_size must be a positive number");
    }
    grid.hex_size = *hex_size_override;
  } else {
    grid.hex_size = hex_size_for_zoom(zoom, viewport);
  }

  const Box view = viewport.projected();
  std::map<HexCell, std::size_t> counts;
  for (const GeoPoint& p : points) {
    const PlanarPoint q = project_equal_area(p.position);
    if (!view.contains(q)) continue;
    ++counts[assign_hex(q, grid)];
  }

  std::vector<HexBin> bins;
  bins.reserve(counts.size());
  for (const auto& [cell, count] : counts) {
    bins.push_back({unproject_equal_area(hex_center(cell, grid)), count, cell});
  }
  std::stable_sort(bins.begin(), bins.end(),
                   [](const HexBin& a, const HexBin& b) { return a.count > b.count; });
  return bins;
}

}  // namespace cogregion
