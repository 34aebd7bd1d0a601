#pragma once

// Quantile semantics for the query descriptors: "large" keeps magnitudes at
// or above the 75th percentile, "small" at or below the 25th, "recent"
// timestamps at or above the 75th. Percentiles use the nearest-rank method.

#include <functional>
#include <span>

#include "cogregion/geo_point.hpp"
#include "cogregion/query.hpp"

namespace cogregion {

inline constexpr double kLargeQuantile = 0.75;
inline constexpr double kSmallQuantile = 0.25;
inline constexpr double kRecentQuantile = 0.75;

/// Nearest-rank percentile: the ceil(fraction * n)-th smallest value
/// (1-based, at least the first). `sorted` must be ascending and non-empty.
double nearest_rank(std::span<const double> sorted, double fraction);

struct DescriptorThresholds {
  double large_magnitude = 0.0;  // keep magnitude >= this
  double small_magnitude = 0.0;  // keep magnitude <= this
  Timestamp recent_from{};       // keep timestamp >= this

  friend bool operator==(const DescriptorThresholds&, const DescriptorThresholds&) = default;
};

/// Throws EmptyDataset.
DescriptorThresholds compute_descriptor_thresholds(std::span<const GeoPoint> points);

using PointPredicate = std::function<bool(const GeoPoint&)>;

PointPredicate resolve_descriptor(Descriptor d, const DescriptorThresholds& thresholds);
/// Computes the thresholds on the fly. Throws EmptyDataset.
PointPredicate resolve_descriptor(Descriptor d, std::span<const GeoPoint> dataset);

}  // namespace cogregion
