#include <gtest/gtest.h>

#include <random>

#include "cogregion/query.hpp"
#include "fixtures.hpp"

using namespace cogregion;
using Status = ParseOutcome::Status;

namespace {

Vocabulary vocab() {
  Vocabulary v;
  v.region_names = {"midwest", "west", "east", "pacific northwest"};
  v.geography_names = {"California", "Nevada", "New Mexico", "New York"};
  return v;
}

bool has_text(const std::vector<Suggestion>& s, const std::string& text) {
  return std::any_of(s.begin(), s.end(), [&](const Suggestion& x) {
    return x.kind == Suggestion::Kind::TextCompletion && x.text == text;
  });
}

}  // namespace

TEST(Parser, SpatialPrepositionOpensWidget) {
  const auto out = parse("large earthquakes in", vocab());
  EXPECT_EQ(out.status, Status::Partial);
  EXPECT_TRUE(out.widget_trigger);
  ASSERT_FALSE(out.suggestions.empty());
  EXPECT_EQ(out.suggestions[0].kind, Suggestion::Kind::MapWidgetTrigger);
  EXPECT_EQ(out.suggestions[0].rank, 0);
  EXPECT_NE(std::find(out.expected.begin(), out.expected.end(), "region_ref"), out.expected.end());
  for (const auto& name : vocab().region_names) EXPECT_TRUE(has_text(out.suggestions, name)) << name;
}

TEST(Parser, CompareTwoNamedRegions) {
  const auto out = parse("compare the west and the east", vocab());
  ASSERT_EQ(out.status, Status::Complete) << out.message;
  EXPECT_EQ(out.ast->kind, QueryKind::Compare);
  EXPECT_EQ(out.ast->left, (SpatialRef{SpatialRef::Kind::NamedRegion, "west"}));
  EXPECT_EQ(out.ast->right, (SpatialRef{SpatialRef::Kind::NamedRegion, "east"}));
}

TEST(Parser, RecentOnesInTheMidwest) {
  const auto out = parse("what are the recent ones in the midwest?", vocab());
  ASSERT_EQ(out.status, Status::Complete) << out.message;
  EXPECT_EQ(out.ast->kind, QueryKind::Show);
  EXPECT_EQ(out.ast->descriptors, std::vector<Descriptor>{Descriptor::Recent});
  EXPECT_EQ(out.ast->spatial, (SpatialRef{SpatialRef::Kind::NamedRegion, "midwest"}));
}

TEST(Parser, EmptyInputOffersStartTokens) {
  const auto out = parse("", vocab());
  EXPECT_EQ(out.status, Status::Partial);
  EXPECT_FALSE(out.widget_trigger);
  EXPECT_TRUE(has_text(out.suggestions, "earthquakes"));
  EXPECT_TRUE(has_text(out.suggestions, "large"));
  EXPECT_TRUE(has_text(out.suggestions, "show me"));
  for (const auto& s : out.suggestions) EXPECT_EQ(s.kind, Suggestion::Kind::TextCompletion);
}

TEST(Parser, NearPutsWidgetFirstThenRegionsByRecency) {
  const auto s = suggest_completions("recent earthquakes near", vocab());
  ASSERT_GE(s.size(), 5u);
  EXPECT_EQ(s[0].kind, Suggestion::Kind::MapWidgetTrigger);
  EXPECT_EQ(s[1].text, "midwest");
  EXPECT_EQ(s[2].text, "west");
  EXPECT_EQ(s[3].text, "east");
  EXPECT_EQ(s[4].text, "pacific northwest");
}

TEST(Parser, UniquePrefixCompletion) {
  Vocabulary v;
  v.region_names = {"west", "east"};
  const auto s = suggest_completions("compare the w", v);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].text, "west");
  EXPECT_EQ(apply_completion("compare the w", s[0]), "compare the west");
}

TEST(Parser, GeographyNamesAndMultiWordRegions) {
  auto out = parse("small earthquakes in New Mexico", vocab());
  ASSERT_EQ(out.status, Status::Complete);
  EXPECT_EQ(out.ast->spatial, (SpatialRef{SpatialRef::Kind::Geography, "New Mexico"}));
  out = parse("show me earthquakes around the Pacific Northwest", vocab());
  ASSERT_EQ(out.status, Status::Complete);
  EXPECT_EQ(out.ast->spatial.name, "pacific northwest");
  EXPECT_TRUE(has_text(suggest_completions("earthquakes in new ", vocab()), "new mexico"));
}

TEST(Parser, DescriptorsAndAliases) {
  const auto out = parse("Show me BIG recent small earthquakes", vocab());
  ASSERT_EQ(out.status, Status::Complete);
  EXPECT_EQ(out.ast->descriptors,
            (std::vector<Descriptor>{Descriptor::Large, Descriptor::Recent, Descriptor::Small}));
  EXPECT_EQ(out.ast->spatial.kind, SpatialRef::Kind::None);
}

TEST(Parser, UnknownSpatialRegionKeepsWidget) {
  const auto out = parse("earthquakes in atlantis", vocab());
  EXPECT_EQ(out.status, Status::Partial);
  EXPECT_TRUE(out.widget_trigger);
  EXPECT_EQ(out.unresolved_region, "atlantis");
}

TEST(Parser, InvalidTrailingTokens) {
  auto out = parse("earthquakes sorted by depth", vocab());
  EXPECT_EQ(out.status, Status::Invalid);
  EXPECT_EQ(out.position, std::string("earthquakes ").size());
  out = parse("compare west and mars", vocab());
  EXPECT_EQ(out.status, Status::Invalid);
  EXPECT_EQ(out.unknown_region, "mars");
  out = parse("xyzzy", vocab());
  EXPECT_EQ(out.status, Status::Invalid);
  EXPECT_EQ(out.position, 0u);
  EXPECT_TRUE(suggest_completions("xyzzy", vocab()).empty());
}

TEST(Parser, PrefixLiveness) {
  std::mt19937_64 rng(99);
  const Vocabulary v = vocab();
  for (int k = 0; k < 200; ++k) {
    const std::string q = fixture::random_query(rng, v);
    ASSERT_EQ(parse(q, v).status, Status::Complete) << q;
    for (std::size_t len = 0; len < q.size(); ++len) {
      EXPECT_NE(parse(q.substr(0, len), v).status, Status::Invalid) << "'" << q.substr(0, len) << "'";
    }
  }
}

TEST(Parser, SuggestionSoundness) {
  std::mt19937_64 rng(100);
  const Vocabulary v = vocab();
  for (int k = 0; k < 60; ++k) {
    const std::string q = fixture::random_query(rng, v);
    for (std::size_t len = 0; len <= q.size(); ++len) {
      const std::string prefix = q.substr(0, len);
      for (const auto& s : suggest_completions(prefix, v)) {
        if (s.kind != Suggestion::Kind::TextCompletion) continue;
        const std::string next = apply_completion(prefix, s);
        EXPECT_NE(parse(next, v).status, Status::Invalid) << "'" << prefix << "' + '" << s.text << "'";
      }
    }
  }
}

TEST(Parser, Deterministic) {
  const auto a = parse("large earthquakes near the w", vocab());
  const auto b = parse("large earthquakes near the w", vocab());
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.suggestions, b.suggestions);
  EXPECT_EQ(a.expected, b.expected);
}

TEST(Parser, PartialAlwaysCarriesSuggestions) {
  for (const char* q : {"", "s", "show me", "large", "earthquakes in", "compare", "compare the",
                        "compare west", "compare west and"}) {
    const auto out = parse(q, vocab());
    if (out.status == Status::Partial) {
      EXPECT_TRUE(!out.suggestions.empty() || out.widget_trigger) << q;
    }
    if (out.widget_trigger) {
      EXPECT_EQ(out.suggestions.front().kind, Suggestion::Kind::MapWidgetTrigger) << q;
    }
  }
}
