#include <gtest/gtest.h>

#include "cogregion/api.hpp"
#include "cogregion/geojson.hpp"
#include "fixtures.hpp"

using namespace cogregion;
using nlohmann::json;

namespace {

struct ApiEnv {
  fixture::TempDir dir;
  Dataset dataset = fixture::two_state_dataset();
  RegionStore store{dir / "regions.json"};
  Api api{dataset, store};

  ApiResponse get(const std::string& path, std::map<std::string, std::string, std::less<>> params = {}) {
    return api.handle({"GET", path, std::move(params), ""});
  }
  ApiResponse post(const std::string& path, const json& body) {
    return api.handle({"POST", path, {}, body.dump()});
  }
  ApiResponse del(const std::string& path) { return api.handle({"DELETE", path, {}, ""}); }
};

json selection_json() { return geojson::to_json(fixture::box(0.5, 0, 1.5, 1)); }

}  // namespace

TEST(Api, AutocompleteOpensWidget) {
  ApiEnv env;
  const auto r = env.get("/api/autocomplete", {{"q", "large earthquakes in"}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body["widget"], "map");
  EXPECT_EQ(r.body["status"], "partial");
  EXPECT_EQ(r.body["suggestions"][0]["kind"], "map_widget");
  const auto done = env.get("/api/autocomplete", {{"q", "earthquakes"}});
  EXPECT_EQ(done.body["status"], "complete");
  EXPECT_TRUE(done.body["widget"].is_null());
}

TEST(Api, CoverageFixtureAndParity) {
  ApiEnv env;
  const auto r = env.post("/api/coverage", {{"selection", selection_json()}, {"kind", "rectangle"}});
  ASSERT_EQ(r.status, 200) << r.body.dump();
  ASSERT_EQ(r.body["entries"].size(), 2u);
  EXPECT_EQ(r.body["entries"][0]["geography"], "B");
  EXPECT_NEAR(r.body["entries"][0]["score"].get<double>(), 0.675, 1e-9);
  EXPECT_EQ(r.body["entries"][1]["geography"], "A");
  EXPECT_NEAR(r.body["entries"][1]["score"].get<double>(), 0.465, 1e-9);

  const auto lib = compute_coverage(SelectionGeometry::rectangle(fixture::two_state_selection()),
                                    env.dataset.points, env.dataset.index, env.dataset.registry);
  EXPECT_EQ(r.body, coverage_to_json(lib));
  EXPECT_EQ(env.post("/api/coverage", {{"selection", selection_json()}, {"kind", "rectangle"}}).body, r.body);
}

TEST(Api, CoverageConfigOverrides) {
  ApiEnv env;
  auto r = env.post("/api/coverage", {{"selection", selection_json()}, {"kind", "rectangle"}, {"threshold", 0.5}});
  EXPECT_EQ(r.body["entries"].size(), 1u);
  r = env.post("/api/coverage", {{"selection", selection_json()}, {"kind", "rectangle"}, {"weight_area", 1.0}});
  EXPECT_NEAR(r.body["entries"][0]["score"].get<double>(), 0.5, 1e-12);
  r = env.post("/api/coverage",
               {{"selection", selection_json()}, {"weight_area", 0.9}, {"weight_points", 0.9}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["code"], "ValidationError");
}

TEST(Api, CoverageFreehandErrors) {
  ApiEnv env;
  const json bowtie = {{"type", "Polygon"}, {"coordinates", {{{0, 0}, {1, 1}, {1, 0}, {0, 1}, {0, 0}}}}};
  auto r = env.post("/api/coverage", {{"selection", bowtie}, {"kind", "freehand"}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["code"], "SelfIntersectingSelection");
  r = env.post("/api/coverage", {{"selection", bowtie}, {"kind", "rectangle"}});
  EXPECT_EQ(r.status, 400);
  r = env.post("/api/coverage", {{"kind", "rectangle"}});
  EXPECT_EQ(r.status, 400);
  r = env.api.handle({"POST", "/api/coverage", {}, "{oops"});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["code"], "ValidationError");
}

TEST(Api, QueryShowAndErrors) {
  ApiEnv env;
  auto r = env.post("/api/query", {{"text", "large earthquakes in A"}});
  ASSERT_EQ(r.status, 200) << r.body.dump();
  EXPECT_EQ(r.body["kind"], "show");
  const auto ast = parse("large earthquakes in A", make_vocabulary(env.dataset, env.store)).ast;
  const auto lib = std::get<ShowResult>(execute(*ast, env.dataset, env.store));
  ASSERT_EQ(r.body["points"].size(), lib.points.size());
  for (std::size_t i = 0; i < lib.points.size(); ++i) {
    EXPECT_EQ(r.body["points"][i], to_json(env.dataset.points[lib.points[i]]));
  }
  EXPECT_EQ(r.body["filters"], lib.filters);

  r = env.post("/api/query", {{"text", "earthquakes in atlantis"}});
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(r.body["code"], "UnknownRegion");
  r = env.post("/api/query", {{"text", "compare A and atlantis"}});
  EXPECT_EQ(r.status, 422);
  r = env.post("/api/query", {{"text", "earthquakes sorted by depth"}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["position"], 12);
  r = env.post("/api/query", {{"text", "earthquakes near"}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["code"], "PendingSelection");
}

TEST(Api, RegionLifecycle) {
  ApiEnv env;
  const auto cov = env.post("/api/coverage", {{"selection", selection_json()}, {"kind", "rectangle"}});
  const json save = {{"name", "Middle"},
                     {"selection", selection_json()},
                     {"kind", "rectangle"},
                     {"included", {"A", "B"}},
                     {"coverage_token", cov.body["coverage_token"]}};
  auto r = env.post("/api/regions", save);
  ASSERT_EQ(r.status, 201) << r.body.dump();
  EXPECT_EQ(r.body, to_json(env.store.get_region("middle")));
  EXPECT_EQ(env.post("/api/regions", save).status, 422);

  r = env.get("/api/regions");
  ASSERT_EQ(r.body["regions"].size(), 1u);
  EXPECT_EQ(r.body["regions"][0]["name"], "Middle");

  r = env.post("/api/query", {{"text", "compare middle and A"}});
  ASSERT_EQ(r.status, 200) << r.body.dump();
  EXPECT_EQ(r.body["left"]["count"], 15);
  EXPECT_EQ(r.body["right"]["count"], 10);

  r = env.post("/api/regions/Middle/remove", {{"geography", "B"}});
  ASSERT_EQ(r.status, 200) << r.body.dump();
  EXPECT_EQ(env.post("/api/regions/Middle/remove", {{"geography", "B"}}).status, 422);
  EXPECT_EQ(env.post("/api/regions/nowhere/remove", {{"geography", "B"}}).status, 404);

  r = env.post("/api/compare", {{"left", "middle"}, {"right", "B"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["left"]["count"], 10);
  EXPECT_EQ(r.body["right"]["count"], 5);
  EXPECT_EQ(env.post("/api/compare", {{"left", "x"}, {"right", "B"}}).status, 422);

  EXPECT_EQ(env.del("/api/regions/middle").status, 200);
  EXPECT_EQ(env.del("/api/regions/middle").status, 404);
}

TEST(Api, StaleTokenIsRejected) {
  ApiEnv env;
  const auto cov = env.post("/api/coverage", {{"selection", selection_json()}, {"kind", "rectangle"}});
  auto r = env.post("/api/regions", {{"name", "r"},
                                     {"selection", selection_json()},
                                     {"kind", "rectangle"},
                                     {"threshold", 0.5},
                                     {"included", {"B"}},
                                     {"coverage_token", cov.body["coverage_token"]}});
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(r.body["code"], "StaleCoverage");
  r = env.post("/api/regions", {{"name", "r"}, {"selection", selection_json()}, {"included", {"Atlantis"}}});
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(r.body["code"], "UnknownGeographyInIncludedSet");
  r = env.post("/api/regions", {{"name", " "}, {"selection", selection_json()}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.body["code"], "InvalidName");
}

TEST(Api, Hexbins) {
  ApiEnv env;
  auto r = env.get("/api/hexbins", {{"west", "-1"}, {"south", "-1"}, {"east", "3"}, {"north", "2"}, {"zoom", "6"}});
  ASSERT_EQ(r.status, 200) << r.body.dump();
  std::size_t total = 0;
  for (const auto& b : r.body["bins"]) total += b["count"].get<std::size_t>();
  EXPECT_EQ(total, 15u);
  r = env.get("/api/hexbins", {{"west", "-1"}, {"south", "-1"}, {"east", "3"}, {"north", "2"}, {"zoom", "6"},
                               {"hex_size", "10"}});
  EXPECT_EQ(r.body["bins"].size(), 1u);
  EXPECT_EQ(env.get("/api/hexbins", {{"west", "x"}}).status, 400);
  EXPECT_EQ(env.get("/api/hexbins", {{"west", "3"}, {"south", "0"}, {"east", "1"}, {"north", "1"}, {"zoom", "3"}}).status,
            400);
}

TEST(Api, MetaAndUnknownRoutes) {
  ApiEnv env;
  const auto r = env.get("/api/meta");
  EXPECT_EQ(r.body["point_count"], 16);
  EXPECT_EQ(r.body["geography_names"], (json{"A", "B"}));
  EXPECT_TRUE(r.body["descriptor_thresholds"].contains("large_magnitude"));
  EXPECT_EQ(env.get("/api/nothing").status, 404);
  EXPECT_EQ(env.del("/api/meta").status, 404);
}

TEST(Api, ReadsHaveNoSideEffects) {
  ApiEnv env;
  env.store.save_region("west", SelectionGeometry::rectangle(Rectangle(0, 0, 1, 1)),
                        compute_coverage(SelectionGeometry::rectangle(Rectangle(0, 0, 1, 1)),
                                         env.dataset.points, env.dataset.index, env.dataset.registry),
                        {"A"});
  const auto before = env.get("/api/regions").body;
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(env.get("/api/autocomplete", {{"q", "earthquakes in w"}}).body,
              env.get("/api/autocomplete", {{"q", "earthquakes in w"}}).body);
    EXPECT_EQ(env.post("/api/query", {{"text", "recent earthquakes in west"}}).body,
              env.post("/api/query", {{"text", "recent earthquakes in west"}}).body);
  }
  EXPECT_EQ(env.get("/api/regions").body, before);
}
