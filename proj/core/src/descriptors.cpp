#include "cogregion/descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cogregion/errors.hpp"

namespace cogregion {

double nearest_rank(std::span<const double> sorted, double fraction) {
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(fraction * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

DescriptorThresholds compute_descriptor_thresholds(std::span<const GeoPoint> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyDataset, "descriptors need a non-empty dataset");
  std::vector<double> magnitudes;
  std::vector<double> times;
  magnitudes.reserve(points.size());
  times.reserve(points.size());
  for (const GeoPoint& p : points) {
    magnitudes.push_back(p.magnitude);
    times.push_back(static_cast<double>(p.timestamp.time_since_epoch().count()));
  }
  std::sort(magnitudes.begin(), magnitudes.end());
  std::sort(times.begin(), times.end());
  DescriptorThresholds t;
  t.large_magnitude = nearest_rank(magnitudes, kLargeQuantile);
  t.small_magnitude = nearest_rank(magnitudes, kSmallQuantile);
  // Millisecond counts are exact in a double for any plausible date.
  t.recent_from = Timestamp{std::chrono::milliseconds{
      static_cast<std::chrono::milliseconds::rep>(nearest_rank(times, kRecentQuantile))}};
  return t;
}

PointPredicate resolve_descriptor(Descriptor d, const DescriptorThresholds& t) {
  switch (d) {
    case Descriptor::Large:
      return [m = t.large_magnitude](const GeoPoint& p) { return p.magnitude >= m; };
    case Descriptor::Small:
      return [m = t.small_magnitude](const GeoPoint& p) { return p.magnitude <= m; };
    case Descriptor::Recent:
      return [from = t.recent_from](const GeoPoint& p) { return p.timestamp >= from; };
  }
  return [](const GeoPoint&) { return true; };
}

PointPredicate resolve_descriptor(Descriptor d, std::span<const GeoPoint> dataset) {
  return resolve_descriptor(d, compute_descriptor_thresholds(dataset));
}

}  // namespace cogregion
