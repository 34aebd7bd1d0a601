#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "cogregion/query.hpp"

namespace cogregion {
namespace {

struct Token {
  std::string text;  // lowercased
  std::size_t begin = 0;
  std::size_t end = 0;
};

bool is_word_char(unsigned char c) {
  return std::isalnum(c) || c == '\'' || c == '-' || c >= 0x80;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_char(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    Token t;
    t.begin = i;
    while (i < text.size() && is_word_char(static_cast<unsigned char>(text[i]))) {
      t.text.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
      ++i;
    }
    t.end = i;
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::vector<std::string> words_of(std::string_view name) {
  std::vector<std::string> words;
  for (Token& t : tokenize(name)) words.push_back(std::move(t.text));
  return words;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

const std::vector<std::string> kIntroFillers{
    "show", "me", "what", "are", "the", "all", "list", "find", "display", "give", "get",
    "were", "is", "a", "an", "some", "of", "which", "there", "any", "where", "have", "been"};
const std::vector<std::string> kTrailerFillers{"that", "are", "were", "which", "occurred",
                                               "happened", "located"};
const std::vector<std::pair<std::string, Descriptor>> kDescriptors{
    {"large", Descriptor::Large},
    {"big", Descriptor::Large},
    {"small", Descriptor::Small},
    {"recent", Descriptor::Recent}};
const std::vector<std::string> kAnaphors{"ones", "them"};
const std::vector<std::string> kPrepositions{"in", "near", "around"};
const std::vector<std::string> kConjunctions{"and", "with", "to"};
const std::vector<std::vector<std::string>> kIntroPhrases{{"show", "me"}, {"what", "are", "the"}};

// Suggestion buckets, lowest first.
enum Bucket {
  kRegionBucket = 1,
  kGeographyBucket,
  kDescriptorBucket,
  kEntityBucket,
  kKeywordBucket,
  kIntroBucket,
  kArticleBucket,
  kFillerBucket,
};

struct Candidate {
  std::vector<std::string> words;
  SpatialRef ref;
  Bucket bucket;
};

enum class Match { None, Prefix, Full };

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& vocab)
      : text_(text), tokens_(tokenize(text)) {
    open_last_ = !tokens_.empty() && tokens_.back().end == text.size();
    for (const auto& name : vocab.region_names) {
      auto words = words_of(name);
      if (!words.empty()) {
        regions_.push_back({std::move(words), {SpatialRef::Kind::NamedRegion, name}, kRegionBucket});
      }
    }
    std::vector<std::string> geos = vocab.geography_names;
    std::sort(geos.begin(), geos.end());
    for (const auto& name : geos) {
      auto words = words_of(name);
      if (!words.empty()) {
        regions_.push_back({std::move(words), {SpatialRef::Kind::Geography, name}, kGeographyBucket});
      }
    }
    for (const auto& noun : vocab.entity_nouns) {
      auto words = words_of(noun);
      if (!words.empty()) entities_.push_back(std::move(words));
    }
    for (const auto& a : kAnaphors) entities_.push_back({a});
  }

  ParseOutcome run() {
    parse_query();
    return finish();
  }

 private:
  std::size_t n() const { return tokens_.size(); }

  // Match `words` against the tokens starting at i. Prefix means the input
  // ended inside the phrase (possibly inside its last typed word).
  Match match(std::size_t i, const std::vector<std::string>& words) const {
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (i + k == n()) return Match::Prefix;
      const std::string& tok = tokens_[i + k].text;
      if (tok == words[k]) continue;
      if (i + k == n() - 1 && open_last_ && words[k].starts_with(tok)) return Match::Prefix;
      return Match::None;
    }
    return Match::Full;
  }

  std::size_t offset_of(std::size_t i) const { return i < n() ? tokens_[i].begin : text_.size(); }

  void offer(std::size_t i, const std::vector<std::string>& words, Bucket bucket) {
    offer_text(offset_of(i), join(words), bucket);
  }

  void offer_text(std::size_t from, std::string text, Bucket bucket) {
    auto key = std::make_pair(from, text);
    if (!offered_.insert(key).second) return;
    pending_.push_back({std::move(text), from, bucket, pending_.size()});
  }

  // Try a single-word alternative; offers it when it is a prefix match.
  bool word_full(std::size_t i, const std::string& word, Bucket bucket) {
    const Match m = match(i, {word});
    if (m == Match::Prefix) offer(i, {word}, bucket);
    return m == Match::Full;
  }

  void expect(std::string cls) {
    if (std::find(expected_.begin(), expected_.end(), cls) == expected_.end()) {
      expected_.push_back(std::move(cls));
    }
  }

  void fail(std::size_t i, std::string message) {
    const std::size_t pos = offset_of(i);
    if (!failed_ || pos >= fail_pos_) {
      failed_ = true;
      fail_pos_ = pos;
      fail_msg_ = std::move(message);
    }
  }

  void parse_query() {
    const Match m = match(0, {"compare"});
    if (m == Match::Full) {
      parse_compare(1);
      return;
    }
    if (m == Match::Prefix) offer(0, {"compare"}, kKeywordBucket);
    if (n() == 0) expect("compare");
    parse_show(0);
  }

  void parse_show(std::size_t i) {
    QueryAst ast;
    ast.kind = QueryKind::Show;
    while (true) {
      const bool at_end = i == n();
      if (at_end) {
        need_more_ = true;
        expect("descriptor");
        expect("entity");
        if (i == 0) {
          expect("intro");
          for (const auto& phrase : kIntroPhrases) offer(i, phrase, kIntroBucket);
        }
      }
      if (i == 0 && !at_end) {
        for (const auto& phrase : kIntroPhrases) {
          if (match(i, phrase) == Match::Prefix) offer(i, phrase, kIntroBucket);
        }
      }

      std::optional<Descriptor> descriptor;
      for (const auto& [word, d] : kDescriptors) {
        if (word_full(i, word, kDescriptorBucket)) descriptor = d;
      }
      std::optional<std::size_t> entity_len;
      for (const auto& words : entities_) {
        const Match m = match(i, words);
        if (m == Match::Prefix) offer(i, words, kEntityBucket);
        if (m == Match::Full && (!entity_len || words.size() > *entity_len)) entity_len = words.size();
      }
      bool filler = false;
      if (!at_end) {
        for (const auto& word : kIntroFillers) {
          if (word_full(i, word, kFillerBucket)) filler = true;
        }
      }
      if (at_end) return;

      if (descriptor) {
        if (std::find(ast.descriptors.begin(), ast.descriptors.end(), *descriptor) ==
            ast.descriptors.end()) {
          ast.descriptors.push_back(*descriptor);
        }
        ++i;
      } else if (entity_len) {
        parse_after_entity(i + *entity_len, ast);
        return;
      } else if (filler) {
        ++i;
      } else {
        if (!ends_in_prefix_at(i)) fail(i, "expected a descriptor or what to show");
        else need_more_ = true;
        return;
      }
    }
  }

  // True when token i is the trailing partial word and something was offered
  // for it.
  bool ends_in_prefix_at(std::size_t i) const {
    if (i + 1 != n() || !open_last_) return false;
    const std::size_t from = tokens_[i].begin;
    return std::any_of(pending_.begin(), pending_.end(),
                       [&](const Pending& p) { return p.from == from; });
  }

  void parse_after_entity(std::size_t i, const QueryAst& ast) {
    while (true) {
      if (i == n()) {
        accept(ast);
        expect("preposition");
        for (const auto& p : kPrepositions) offer(i, {p}, kKeywordBucket);
        return;
      }
      std::optional<std::string> prep;
      for (const auto& p : kPrepositions) {
        if (word_full(i, p, kKeywordBucket)) prep = p;
      }
      bool filler = false;
      for (const auto& w : kTrailerFillers) {
        if (word_full(i, w, kFillerBucket)) filler = true;
      }
      if (prep) {
        parse_spatial(i + 1, ast);
        return;
      }
      if (filler) {
        ++i;
        continue;
      }
      if (ends_in_prefix_at(i)) need_more_ = true;
      else fail(i, "expected 'in', 'near' or 'around'");
      return;
    }
  }

  struct RefMatch {
    std::size_t end;  // token index after the match
    SpatialRef ref;
  };

  // All full region matches starting at i, longest first. Offers completions
  // for partial matches; `*partial` reports whether any were found.
  std::vector<RefMatch> match_region(std::size_t i, bool* partial) {
    std::vector<RefMatch> full;
    bool any_prefix = false;
    auto scan = [&](std::size_t start) {
      for (const Candidate& c : regions_) {
        const Match m = match(start, c.words);
        if (m == Match::Prefix) {
          offer(start, c.words, c.bucket);
          any_prefix = true;
        } else if (m == Match::Full) {
          full.push_back({start + c.words.size(), c.ref});
        }
      }
    };
    scan(i);
    // Optional leading article.
    const Match article = match(i, {"the"});
    if (article == Match::Full) {
      scan(i + 1);
    } else if (article == Match::Prefix && i < n()) {
      offer(i, {"the"}, kArticleBucket);
      any_prefix = true;
    }
    std::stable_sort(full.begin(), full.end(),
                     [](const RefMatch& a, const RefMatch& b) { return a.end > b.end; });
    *partial = any_prefix;
    return full;
  }

  void parse_spatial(std::size_t i, QueryAst ast) {
    expect("region_ref");
    if (i == n()) {
      need_more_ = true;
      widget_ = true;
      bool partial = false;
      match_region(i, &partial);
      return;
    }
    bool partial = false;
    const auto matches = match_region(i, &partial);
    for (const RefMatch& m : matches) {
      if (m.end == n()) {
        ast.spatial = m.ref;
        accept(ast);
        return;
      }
    }
    need_more_ = true;
    widget_ = true;
    if (!partial) {
      std::string rest(text_.substr(tokens_[i].begin, tokens_.back().end - tokens_[i].begin));
      unresolved_region_ = std::move(rest);
    }
  }

  std::string unknown_text(std::size_t i) const {
    std::size_t j = i;
    while (j < n() && std::find(kConjunctions.begin(), kConjunctions.end(), tokens_[j].text) ==
                          kConjunctions.end()) {
      ++j;
    }
    if (j == i) return tokens_[i].text;
    return std::string(text_.substr(tokens_[i].begin, tokens_[j - 1].end - tokens_[i].begin));
  }

  void parse_compare(std::size_t i) {
    expect("region_ref");
    bool partial = false;
    const auto left = match_region(i, &partial);
    if (i == n()) {
      need_more_ = true;
      if (regions_.empty()) fail(i, "no regions are available to compare");
      return;
    }
    if (left.empty()) {
      if (partial) {
        need_more_ = true;
      } else {
        fail(i, "unknown region '" + unknown_text(i) + "'");
        unknown_region_ = unknown_text(i);
      }
      return;
    }
    for (const RefMatch& l : left) {
      const std::size_t j = l.end;
      if (j == n()) {
        need_more_ = true;
        expect("conjunction");
        for (const auto& c : kConjunctions) offer(j, {c}, kKeywordBucket);
        continue;
      }
      bool conj = false;
      for (const auto& c : kConjunctions) {
        if (word_full(j, c, kKeywordBucket)) conj = true;
      }
      if (!conj) {
        if (ends_in_prefix_at(j)) need_more_ = true;
        else fail(j, "expected 'and', 'with' or 'to'");
        continue;
      }
      parse_compare_right(j + 1, l.ref);
    }
  }

  void parse_compare_right(std::size_t i, const SpatialRef& left) {
    bool partial = false;
    const auto right = match_region(i, &partial);
    if (i == n()) {
      need_more_ = true;
      return;
    }
    for (const RefMatch& r : right) {
      if (r.end == n()) {
        QueryAst ast;
        ast.kind = QueryKind::Compare;
        ast.left = left;
        ast.right = r.ref;
        accept(ast);
        return;
      }
    }
    if (partial) {
      need_more_ = true;
    } else if (!right.empty()) {
      fail(right.front().end, "unexpected words after the second region");
    } else {
      fail(i, "unknown region '" + unknown_text(i) + "'");
      unknown_region_ = unknown_text(i);
    }
  }

  void accept(const QueryAst& ast) {
    if (!complete_) {
      complete_ = true;
      ast_ = ast;
    }
  }

  ParseOutcome finish() {
    ParseOutcome out;
    out.expected = expected_;
    std::vector<Suggestion> suggestions;
    int rank = 0;
    if (widget_ && !complete_) {
      suggestions.push_back({Suggestion::Kind::MapWidgetTrigger, "", text_.size(), rank++});
    }
    std::stable_sort(pending_.begin(), pending_.end(), [](const Pending& a, const Pending& b) {
      return a.bucket < b.bucket;
    });
    for (const Pending& p : pending_) {
      suggestions.push_back({Suggestion::Kind::TextCompletion, p.text, p.from, rank++});
    }

    if (complete_) {
      out.status = ParseOutcome::Status::Complete;
      out.ast = ast_;
      out.suggestions = std::move(suggestions);
      return out;
    }
    if (need_more_ && !suggestions.empty()) {
      out.status = ParseOutcome::Status::Partial;
      out.suggestions = std::move(suggestions);
      out.widget_trigger = widget_;
      if (widget_) out.unresolved_region = unresolved_region_;
      return out;
    }
    out.status = ParseOutcome::Status::Invalid;
    out.position = failed_ ? fail_pos_ : text_.size();
    out.message = failed_ ? fail_msg_ : "incomplete query with no possible continuation";
    out.unknown_region = unknown_region_;
    return out;
  }

  struct Pending {
    std::string text;
    std::size_t from;
    Bucket bucket;
    std::size_t order;
  };

  std::string_view text_;
  std::vector<Token> tokens_;
  bool open_last_ = false;
  std::vector<Candidate> regions_;
  std::vector<std::vector<std::string>> entities_;

  bool complete_ = false;
  QueryAst ast_;
  bool need_more_ = false;
  bool widget_ = false;
  std::optional<std::string> unresolved_region_;
  std::optional<std::string> unknown_region_;
  std::vector<std::string> expected_;
  std::vector<Pending> pending_;
  std::set<std::pair<std::size_t, std::string>> offered_;
  bool failed_ = false;
  std::size_t fail_pos_ = 0;
  std::string fail_msg_;
};

}  // namespace

std::string_view to_string(Descriptor d) noexcept {
  switch (d) {
    case Descriptor::Large: return "large";
    case Descriptor::Small: return "small";
    case Descriptor::Recent: return "recent";
  }
  return "?";
}

std::string_view to_string(ParseOutcome::Status s) noexcept {
  switch (s) {
    case ParseOutcome::Status::Complete: return "complete";
    case ParseOutcome::Status::Partial: return "partial";
    case ParseOutcome::Status::Invalid: return "invalid";
  }
  return "?";
}

ParseOutcome parse(std::string_view text, const Vocabulary& vocab) {
  return Parser(text, vocab).run();
}

std::vector<Suggestion> suggest_completions(std::string_view prefix, const Vocabulary& vocab) {
  ParseOutcome outcome = parse(prefix, vocab);
  if (outcome.status == ParseOutcome::Status::Invalid) return {};
  return std::move(outcome.suggestions);
}

std::string apply_completion(std::string_view prefix, const Suggestion& s) {
  if (s.kind != Suggestion::Kind::TextCompletion) return std::string(prefix);
  std::string out(prefix.substr(0, std::min(s.replace_from, prefix.size())));
  if (s.replace_from >= prefix.size() && !out.empty() &&
      is_word_char(static_cast<unsigned char>(out.back()))) {
    out.push_back(' ');
  }
  out += s.text;
  return out;
}

}  // namespace cogregion
