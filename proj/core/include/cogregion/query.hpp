#pragma once

// Natural-language query grammar with partial-parse autocompletion.
//
//   query         := show_query | compare_query
//   show_query    := {filler | descriptor} entity {trailer} [spatial]
//   compare_query := "compare" region_ref ("and" | "with" | "to") region_ref
//   descriptor    := "large" | "big" | "small" | "recent"
//   entity        := dataset noun | "ones" | "them"
//   spatial       := ("in" | "near" | "around") region_ref
//   region_ref    := ["the"] (saved region name | admin geography name)
//
// Matching is case-insensitive; punctuation separates words. A spatial
// clause without a resolvable region is Partial and requests the map widget.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cogregion {

enum class Descriptor { Large, Small, Recent };

std::string_view to_string(Descriptor d) noexcept;

enum class QueryKind { Show, Compare };

struct SpatialRef {
  enum class Kind { None, NamedRegion, Geography, PendingSelection };
  Kind kind = Kind::None;
  std::string name;  // canonical spelling from the vocabulary

  friend bool operator==(const SpatialRef&, const SpatialRef&) = default;
};

struct QueryAst {
  QueryKind kind = QueryKind::Show;
  std::vector<Descriptor> descriptors;
  SpatialRef spatial;  // Show only
  SpatialRef left;     // Compare only
  SpatialRef right;    // Compare only

  friend bool operator==(const QueryAst&, const QueryAst&) = default;
};

struct Suggestion {
  enum class Kind { TextCompletion, MapWidgetTrigger };
  Kind kind = Kind::TextCompletion;
  std::string text;
  /// Offset in the input where `text` starts; the input from there on is
  /// replaced. Equal to the input length when the text is a new word.
  std::size_t replace_from = 0;
  int rank = 0;

  friend bool operator==(const Suggestion&, const Suggestion&) = default;
};

struct ParseOutcome {
  enum class Status { Complete, Partial, Invalid };
  Status status = Status::Invalid;
  std::optional<QueryAst> ast;          // Complete only
  std::vector<std::string> expected;    // token classes expected at the end of input
  std::vector<Suggestion> suggestions;  // also filled for Complete inputs
  bool widget_trigger = false;
  /// Text after a spatial preposition that names no known region.
  std::optional<std::string> unresolved_region;
  // Invalid only.
  std::size_t position = 0;
  std::string message;
  std::optional<std::string> unknown_region;
};

std::string_view to_string(ParseOutcome::Status s) noexcept;

/// Names the parser can resolve.
struct Vocabulary {
  /// Saved region names, most recently used first.
  std::vector<std::string> region_names;
  std::vector<std::string> geography_names;
  std::vector<std::string> entity_nouns{"earthquakes"};
};

/// Never throws; malformed input yields an Invalid outcome.
ParseOutcome parse(std::string_view text, const Vocabulary& vocab);

std::vector<Suggestion> suggest_completions(std::string_view prefix, const Vocabulary& vocab);

/// The text that results from accepting a suggestion.
std::string apply_completion(std::string_view prefix, const Suggestion& s);

}  // namespace cogregion
