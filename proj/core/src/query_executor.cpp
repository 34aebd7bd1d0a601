#include "cogregion/executor.hpp"

#include <algorithm>
#include <cstdio>

#include "cogregion/errors.hpp"

namespace cogregion {
namespace {

RegionScope scope_of(const NamedRegion& region) {
  return {region.name, region.included_geographies()};
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string describe(Descriptor d, const DescriptorThresholds& t) {
  switch (d) {
    case Descriptor::Large:
      return "large: magnitude >= " + format_number(t.large_magnitude);
    case Descriptor::Small:
      return "small: magnitude <= " + format_number(t.small_magnitude);
    case Descriptor::Recent:
      return "recent: time >= " + format_iso8601(t.recent_from);
  }
  return {};
}

}  // namespace

bool RegionScope::contains(std::string_view geography) const {
  return std::find(geographies.begin(), geographies.end(), geography) != geographies.end();
}

RegionScope resolve_scope(const SpatialRef& ref, const Dataset& dataset, const RegionStore& store) {
  switch (ref.kind) {
    case SpatialRef::Kind::NamedRegion:
      return scope_of(store.get_region(ref.name));
    case SpatialRef::Kind::Geography:
      if (!dataset.find_geography(ref.name)) {
        throw Error(ErrorCode::UnknownRegion, "no geography named '" + ref.name + "'");
      }
      return {ref.name, {ref.name}};
    case SpatialRef::Kind::PendingSelection:
      throw Error(ErrorCode::PendingSelection, "the map selection has not been made yet");
    case SpatialRef::Kind::None:
      break;
  }
  throw Error(ErrorCode::ValidationError, "query has no region reference");
}

ComparisonStats region_stats(const RegionScope& scope, const Dataset& dataset) {
  ComparisonStats stats{scope.name, 0, {}, {}, {}};
  double sum = 0.0;
  for (const GeoPoint& p : dataset.points) {
    if (!scope.contains(p.admin_geography)) continue;
    ++stats.count;
    sum += p.magnitude;
    stats.min = stats.min ? std::min(*stats.min, p.magnitude) : p.magnitude;
    stats.max = stats.max ? std::max(*stats.max, p.magnitude) : p.magnitude;
  }
  if (stats.count > 0) stats.mean = sum / static_cast<double>(stats.count);
  return stats;
}

std::pair<ComparisonStats, ComparisonStats> compare_regions(const NamedRegion& a,
                                                            const NamedRegion& b,
                                                            const Dataset& dataset) {
  return {region_stats(scope_of(a), dataset), region_stats(scope_of(b), dataset)};
}

QueryResult execute(const QueryAst& ast, const Dataset& dataset, const RegionStore& store) {
  if (ast.kind == QueryKind::Compare) {
    const RegionScope left = resolve_scope(ast.left, dataset, store);
    const RegionScope right = resolve_scope(ast.right, dataset, store);
    return CompareResult{region_stats(left, dataset), region_stats(right, dataset)};
  }

  ShowResult result;
  std::vector<PointPredicate> predicates;
  for (Descriptor d : ast.descriptors) {
    predicates.push_back(resolve_descriptor(d, dataset.thresholds));
    result.filters.push_back(describe(d, dataset.thresholds));
  }
  std::optional<RegionScope> scope;
  if (ast.spatial.kind != SpatialRef::Kind::None) {
    scope = resolve_scope(ast.spatial, dataset, store);
    result.filters.push_back("in: " + scope->name);
  }
  for (std::size_t i = 0; i < dataset.points.size(); ++i) {
    const GeoPoint& p = dataset.points[i];
    if (scope && !scope->contains(p.admin_geography)) continue;
    if (std::all_of(predicates.begin(), predicates.end(),
                    [&](const PointPredicate& keep) { return keep(p); })) {
      result.points.push_back(i);
    }
  }
  return result;
}

Vocabulary make_vocabulary(const Dataset& dataset, const RegionStore& store) {
  Vocabulary v;
  v.region_names = store.names_by_recency();
  v.geography_names = dataset.geography_names();
  return v;
}

}  // namespace cogregion
