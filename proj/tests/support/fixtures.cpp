#include "fixtures.hpp"

#include <atomic>
#include <sstream>

#include "cogregion/geojson.hpp"

namespace fixture {

using namespace cogregion;

std::filesystem::path data_dir() { return COGREGION_DATA_DIR; }

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  std::random_device rd;
  path_ = std::filesystem::temp_directory_path() /
          ("cogregion-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

Polygon box(double west, double south, double east, double north) {
  return rectangle_to_polygon(Rectangle(west, south, east, north));
}

AdminGeography box_geography(const std::string& name, double west, double south, double east,
                             double north) {
  return AdminGeography::make(name, MultiPolygon({box(west, south, east, north)}));
}

GeoPoint point(const std::string& id, double lon, double lat, double mag, const std::string& time) {
  return {id, {lon, lat}, mag, *parse_iso8601(time), kNoGeography};
}

namespace {

struct Row {
  const char* id;
  double lon, lat, mag;
  const char* time;
};

// A: six points west of 0.5, four east of it. B: five points west of 1.5.
constexpr Row kTwoStateRows[] = {
    {"a1", 0.10, 0.20, 1.2, "2023-01-05T10:00:00Z"}, {"a2", 0.20, 0.70, 2.5, "2023-02-11T08:30:00Z"},
    {"a3", 0.30, 0.40, 3.1, "2023-03-02T12:00:00Z"}, {"a4", 0.35, 0.85, 1.8, "2023-03-20T01:15:00Z"},
    {"a5", 0.40, 0.15, 4.6, "2023-04-07T19:45:00Z"}, {"a6", 0.45, 0.55, 2.2, "2023-05-01T06:00:00Z"},
    {"a7", 0.60, 0.30, 5.3, "2023-06-14T14:20:00Z"}, {"a8", 0.70, 0.60, 3.7, "2023-07-09T22:10:00Z"},
    {"a9", 0.80, 0.25, 2.9, "2023-08-18T03:05:00Z"}, {"a10", 0.90, 0.75, 4.1, "2023-09-25T17:40:00Z"},
    {"b1", 1.10, 0.50, 3.3, "2023-10-02T09:00:00Z"}, {"b2", 1.20, 0.20, 1.5, "2023-10-19T11:11:00Z"},
    {"b3", 1.25, 0.80, 4.9, "2023-11-03T04:30:00Z"}, {"b4", 1.35, 0.35, 2.7, "2023-11-28T20:00:00Z"},
    {"b5", 1.45, 0.65, 3.9, "2023-12-15T13:25:00Z"}, {"z1", 5.00, 5.00, 2.0, "2023-06-01T00:00:00Z"},
};

}  // namespace

Dataset two_state_dataset() {
  std::vector<AdminGeography> registry{box_geography("A", 0, 0, 1, 1),
                                       box_geography("B", 1, 0, 2, 1)};
  std::vector<GeoPoint> points;
  for (const Row& r : kTwoStateRows) {
    GeoPoint p = point(r.id, r.lon, r.lat, r.mag, r.time);
    p.admin_geography = std::string(assign_geography(p.position, registry));
    points.push_back(std::move(p));
  }
  return Dataset::build(std::move(points), std::move(registry));
}

Rectangle two_state_selection() { return Rectangle(0.5, 0.0, 1.5, 1.0); }

std::string two_state_geojson() {
  nlohmann::json fc = {{"type", "FeatureCollection"}, {"features", nlohmann::json::array()}};
  for (const auto& [name, w] : {std::pair{"A", 0.0}, std::pair{"B", 1.0}}) {
    fc["features"].push_back({{"type", "Feature"},
                              {"properties", {{"name", name}}},
                              {"geometry", geojson::to_json(box(w, 0, w + 1, 1))}});
  }
  return fc.dump();
}

std::string two_state_csv() {
  std::ostringstream out;
  out << "time,latitude,longitude,depth,mag,magType,id,place\n";
  for (const Row& r : kTwoStateRows) {
    out << r.time << ',' << r.lat << ',' << r.lon << ",10.0," << r.mag << ",ml," << r.id
        << ",\"near " << r.id << ", fixture\"\n";
  }
  return out.str();
}

Dataset random_dataset(std::mt19937_64& rng, int cols, int rows, std::size_t n) {
  constexpr double west = -120, south = 30, east = -80, north = 50;
  const double dx = (east - west) / cols;
  const double dy = (north - south) / rows;
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  std::vector<std::vector<LonLat>> lattice(static_cast<std::size_t>(cols + 1),
                                           std::vector<LonLat>(static_cast<std::size_t>(rows + 1)));
  for (int i = 0; i <= cols; ++i) {
    for (int j = 0; j <= rows; ++j) {
      const bool border = i == 0 || j == 0 || i == cols || j == rows;
      lattice[i][j] = {west + i * dx + (border ? 0 : jitter(rng) * dx),
                       south + j * dy + (border ? 0 : jitter(rng) * dy)};
    }
  }
  std::vector<AdminGeography> registry;
  for (int i = 0; i < cols; ++i) {
    for (int j = 0; j < rows; ++j) {
      Ring ring{lattice[i][j], lattice[i + 1][j], lattice[i + 1][j + 1], lattice[i][j + 1]};
      registry.push_back(AdminGeography::make("G" + std::to_string(i) + "_" + std::to_string(j),
                                              MultiPolygon({Polygon::from_rings(ring)})));
    }
  }
  std::uniform_real_distribution<double> ulon(west, east), ulat(south, north), umag(1.0, 7.0);
  std::vector<GeoPoint> points;
  for (std::size_t k = 0; k < n; ++k) {
    GeoPoint p{"p" + std::to_string(k), {ulon(rng), ulat(rng)}, umag(rng),
               Timestamp{std::chrono::milliseconds{1'600'000'000'000LL + static_cast<long long>(k) * 60'000}},
               kNoGeography};
    p.admin_geography = std::string(assign_geography(p.position, registry));
    points.push_back(std::move(p));
  }
  return Dataset::build(std::move(points), std::move(registry));
}

std::string random_query(std::mt19937_64& rng, const Vocabulary& v) {
  auto pick = [&](const std::vector<std::string>& xs) {
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
  };
  std::vector<std::string> refs = v.region_names;
  refs.insert(refs.end(), v.geography_names.begin(), v.geography_names.end());
  auto ref = [&] { return (rng() % 2 ? "the " : "") + pick(refs); };
  if (rng() % 4 == 0) return "compare " + ref() + " " + pick({"and", "with", "to"}) + " " + ref();
  std::string q = pick({"", "show me ", "what are the ", "find all ", "list "});
  const int n = static_cast<int>(rng() % 3);
  for (int i = 0; i < n; ++i) q += pick({"large ", "big ", "small ", "recent "});
  q += pick({"earthquakes", "ones", "them"});
  if (rng() % 3) q += " " + pick({"", "that occurred "}) + pick({"in", "near", "around"}) + " " + ref();
  if (rng() % 5 == 0) q += "?";
  return q;
}

}  // namespace fixture
