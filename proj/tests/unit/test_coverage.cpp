#include <gtest/gtest.h>

#include <random>

#include "cogregion/coverage.hpp"
#include "cogregion/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cogregion;

namespace {

CoverageResult two_state(const Dataset& d, const CoverageConfig& cfg = {}) {
  return compute_coverage(SelectionGeometry::rectangle(fixture::two_state_selection()), d.points,
                          d.index, d.registry, cfg);
}

const CoverageEntry* find(const CoverageResult& r, const std::string& name) {
  for (const auto& e : r.entries) {
    if (e.geography == name) return &e;
  }
  return nullptr;
}

}  // namespace

TEST(ConfidenceScore, WeightedSum) {
  EXPECT_NEAR(confidence_score(0.5, 0.4), 0.465, 1e-12);
  EXPECT_NEAR(confidence_score(0.5, 1.0), 0.675, 1e-12);
  EXPECT_DOUBLE_EQ(confidence_score(1, 1), 1.0);
  EXPECT_DOUBLE_EQ(confidence_score(0, 0), 0.0);
  const CoverageConfig area_only{1.0, 0.0, 0.2};
  EXPECT_DOUBLE_EQ(confidence_score(0.3, 0.9, area_only), 0.3);
}

TEST(CoverageConfig, Defaults) {
  const CoverageConfig cfg;
  EXPECT_EQ(cfg.weight_area, 0.65);
  EXPECT_EQ(cfg.weight_points, 0.35);
  EXPECT_EQ(cfg.threshold, 0.2);
  EXPECT_EQ(cfg.denominator, PointDenominator::PerGeography);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(CoverageConfig, RejectsBadValues) {
  for (const CoverageConfig& bad : {CoverageConfig{0.7, 0.7, 0.2}, CoverageConfig{-0.1, 1.1, 0.2},
                                    CoverageConfig{0.5, 0.5, 1.5}}) {
    EXPECT_THROW(bad.validate(), Error);
  }
}

TEST(Coverage, TwoStateFixture) {
  const Dataset d = fixture::two_state_dataset();
  const CoverageResult r = two_state(d);
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[0].geography, "B");
  EXPECT_EQ(r.entries[1].geography, "A");
  EXPECT_NEAR(r.entries[0].p_area, 0.5, 1e-12);
  EXPECT_NEAR(r.entries[0].p_points, 1.0, 1e-12);
  EXPECT_NEAR(r.entries[0].score, 0.675, 1e-9);
  EXPECT_NEAR(r.entries[1].p_area, 0.5, 1e-12);
  EXPECT_NEAR(r.entries[1].p_points, 0.4, 1e-12);
  EXPECT_NEAR(r.entries[1].score, 0.465, 1e-9);
  EXPECT_EQ(r.selected_point_count, 9u);
  EXPECT_EQ(r.entries[1].selected_point_ids, (std::vector<std::string>{"a7", "a8", "a9", "a10"}));
}

TEST(Coverage, ThresholdFilters) {
  const Dataset d = fixture::two_state_dataset();
  const CoverageResult r = two_state(d, {0.65, 0.35, 0.5});
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].geography, "B");
}

TEST(Coverage, ZeroThresholdKeepsEveryTouchedGeography) {
  const Dataset d = fixture::two_state_dataset();
  const auto r = compute_coverage(SelectionGeometry::rectangle(Rectangle(0.95, 0.1, 1.05, 0.15)),
                                  d.points, d.index, d.registry, {0.65, 0.35, 0.0});
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[0].geography, "A");  // tie on score, broken by name
  EXPECT_DOUBLE_EQ(r.entries[0].score, r.entries[1].score);
}

TEST(Coverage, DatasetDenominator) {
  const Dataset d = fixture::two_state_dataset();
  const auto r = two_state(d, {0.65, 0.35, 0.0, PointDenominator::Dataset});
  const auto* b = find(r, "B");
  ASSERT_TRUE(b);
  EXPECT_NEAR(b->p_points, 5.0 / 16.0, 1e-12);
}

TEST(Coverage, WholeDomainGivesFullArea) {
  std::mt19937_64 rng(77);
  const Dataset d = fixture::random_dataset(rng, 5, 4, 500);
  const auto r = compute_coverage(SelectionGeometry::rectangle(Rectangle(-120, 30, -80, 50)),
                                  d.points, d.index, d.registry, {0.65, 0.35, 0.0});
  ASSERT_EQ(r.entries.size(), d.registry.size());
  for (const auto& e : r.entries) {
    EXPECT_NEAR(e.p_area, 1.0, 1e-6) << e.geography;
    EXPECT_NEAR(e.score, 1.0, 1e-6) << e.geography;
  }
}

TEST(Coverage, FreehandMatchesRectangleForTheSameBox) {
  const Dataset d = fixture::two_state_dataset();
  const auto rect = two_state(d);
  const std::vector<LonLat> path{{0.5, 0}, {1.5, 0}, {1.5, 1}, {0.5, 1}};
  const auto free = compute_coverage(SelectionGeometry::freehand(path), d.points, d.index, d.registry);
  ASSERT_EQ(free.entries.size(), rect.entries.size());
  for (std::size_t i = 0; i < rect.entries.size(); ++i) {
    EXPECT_EQ(free.entries[i].geography, rect.entries[i].geography);
    EXPECT_NEAR(free.entries[i].score, rect.entries[i].score, 1e-12);
    EXPECT_EQ(free.entries[i].selected_point_ids, rect.entries[i].selected_point_ids);
  }
}

TEST(Coverage, PointsTallyAgainstLinearScan) {
  std::mt19937_64 rng(31);
  const Dataset d = fixture::random_dataset(rng, 4, 4, 2000);
  for (int k = 0; k < 10; ++k) {
    const Polygon poly = Polygon::from_rings(oracle::random_star(rng, {-100, 40}, 3, 12, 11));
    const auto r = compute_coverage(SelectionGeometry{SelectionKind::Freehand, poly}, d.points,
                                    d.index, d.registry, {0.65, 0.35, 0.0});
    for (const AdminGeography& g : d.registry) {
      std::size_t in = 0;
      for (const auto& p : d.points) in += p.admin_geography == g.name && oracle::inside(p.position, poly);
      const double area = polygon_intersection_area(g.shape, poly) / g.total_area;
      const auto* e = find(r, g.name);
      if (in == 0 && area == 0.0) {
        EXPECT_EQ(e, nullptr);
        continue;
      }
      ASSERT_TRUE(e) << g.name;
      EXPECT_NEAR(e->p_points, static_cast<double>(in) / g.total_points, 1e-12);
      EXPECT_NEAR(e->p_area, area, 1e-12);
    }
  }
}

TEST(Coverage, Errors) {
  const Dataset d = fixture::two_state_dataset();
  try {
    compute_coverage(SelectionGeometry::rectangle(Rectangle(0, 0, 1, 1)), d.points, d.index, {});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyRegistry);
  }
  EXPECT_THROW(compute_coverage(SelectionGeometry::rectangle(Rectangle(0, 0, 1, 1)), d.points,
                                d.index, d.registry, {0.9, 0.9, 0.2}),
               Error);
}

TEST(Coverage, NestedSelectionsAreMonotone) {
  std::mt19937_64 rng(2024);
  const Dataset d = fixture::random_dataset(rng, 6, 5, 3000);
  std::uniform_real_distribution<double> lon(-125, -75), lat(25, 45), size(1, 15), grow(0, 5);
  for (int k = 0; k < 30; ++k) {
    const double w = lon(rng), s = lat(rng), e = w + size(rng), n = s + size(rng);
    const Rectangle inner(w, s, e, n);
    const Rectangle outer(w - grow(rng), s - grow(rng), e + grow(rng), n + grow(rng));
    const CoverageConfig cfg{0.65, 0.35, 0.0};
    const auto a = compute_coverage(SelectionGeometry::rectangle(inner), d.points, d.index, d.registry, cfg);
    const auto b = compute_coverage(SelectionGeometry::rectangle(outer), d.points, d.index, d.registry, cfg);
    for (const auto& small : a.entries) {
      const auto* big = find(b, small.geography);
      ASSERT_TRUE(big) << small.geography;
      EXPECT_GE(big->score + 1e-12, small.score) << small.geography;
    }
  }
}
