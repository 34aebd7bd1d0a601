#pragma once

// Shared datasets for unit and acceptance tests.

#include <filesystem>
#include <random>
#include <string>

#include "cogregion/dataset.hpp"
#include "cogregion/query.hpp"

namespace fixture {

std::filesystem::path data_dir();

/// Fresh directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

cogregion::Polygon box(double west, double south, double east, double north);
cogregion::AdminGeography box_geography(const std::string& name, double west, double south,
                                        double east, double north);
cogregion::GeoPoint point(const std::string& id, double lon, double lat, double mag,
                          const std::string& time = "2023-01-01T00:00:00Z");

/// Geography A = [0,1]x[0,1] and B = [1,2]x[0,1] in degrees. A holds ten
/// points, four of them east of lon 0.5; B holds five points, all west of
/// lon 1.5. One more point lies outside both.
cogregion::Dataset two_state_dataset();
/// [0.5, 1.5] x [0, 1]: half of each square.
cogregion::Rectangle two_state_selection();
/// The two squares as GeoJSON FeatureCollection text.
std::string two_state_geojson();
/// The two-state points as USGS-style CSV text.
std::string two_state_csv();

/// A jittered cols x rows lattice of quadrilateral geographies over
/// [-120,-80]x[30,50] with `n` uniform random points.
cogregion::Dataset random_dataset(std::mt19937_64& rng, int cols, int rows, std::size_t n);

/// A random query that the grammar accepts in full, drawn from the
/// vocabulary's region and geography names.
std::string random_query(std::mt19937_64& rng, const cogregion::Vocabulary& vocab);

}  // namespace fixture
