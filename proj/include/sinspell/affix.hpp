#pragma once

// Hunspell-subset dictionary: parse .aff / .dic files and decide whether a
// word is formable as (prefix?) + stem + (suffix?), with the Sinhala
// negative marker additionally recognized as a word-internal infix.
//
// Supported .aff directives: SET, TRY, REP, FLAG long, PFX, SFX. Everything
// else is skipped with a warning. A Dictionary is immutable after load;
// recognize/analyze/expand_all are read-only and safe to call concurrently.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sinspell/text.hpp"

namespace sinspell {

enum class AffixKind { Prefix, Suffix };

// One element of a rule condition: "." (any), a literal grapheme, or a
// bracketed class, possibly negated ("[^...]").
struct ConditionItem {
  bool any = false;
  bool negated = false;
  std::vector<Grapheme> set;
};

struct AffixRule {
  AffixKind kind = AffixKind::Suffix;
  std::string flag;
  std::string strip;  // removed from the stem edge before appending
  std::string append; // attached at the affected edge
  std::string condition_text = ".";
  std::vector<ConditionItem> condition;
  bool cross_product = false;

  // Matches `condition` against the post-strip stem: right-anchored for
  // suffixes, left-anchored for prefixes.
  bool condition_matches(const std::vector<Grapheme>& base) const;
};

struct AffixTable {
  // flag -> rules, in declaration order
  std::map<std::string, std::vector<AffixRule>> rules;
  std::vector<std::pair<std::string, std::string>> replacements; // REP pairs
  std::string alphabet;    // TRY characters, UTF-8
  bool long_flags = false; // FLAG long: flags are two characters wide
};

struct AffParseResult {
  AffixTable table;
  std::vector<std::string> warnings;
};

// Parses .aff text. Malformed rule lines (wrong arity, count mismatches)
// throw ParseError with a 1-based line number; unknown directives are
// collected as warnings.
AffParseResult parse_aff(std::string_view text);

struct StemEntry {
  std::string stem; // normalized
  std::set<std::string> flags;
};

// The reserved needs-affix flag: a stem carrying it is not a valid bare
// word. Written "!" (doubled to "!!" under FLAG long).
bool is_needs_affix_flag(const std::string& flag);

struct Analysis {
  std::string stem;
  std::optional<AffixRule> prefix;
  std::optional<AffixRule> suffix;
  // codepoint index where the negative infix was removed, if any
  std::optional<std::size_t> infix_at;
};

class Dictionary {
public:
  Dictionary() = default;
  Dictionary(std::map<std::string, StemEntry> entries, AffixTable table);

  // True iff `word` is a bare stem, stem + one suffix, one prefix + stem,
  // prefix + stem + suffix (both rules cross-product), or any of those with
  // one internal occurrence of the negative infix deleted.
  bool recognize(std::string_view word) const;
  std::optional<Analysis> analyze(std::string_view word) const;

  // Exact accepted-word set by forward generation. Throws ExpandLimitError
  // when the set would exceed `limit`.
  std::set<std::string> expand_all(std::size_t limit) const;

  const std::map<std::string, StemEntry>& entries() const { return entries_; }
  const AffixTable& table() const { return table_; }

  const std::u32string& negative_infix() const { return negative_infix_; }
  void set_negative_infix(std::string_view infix);

  // Grapheme inventory of stems, appends and TRY characters; the edit
  // alphabet for suggestion generation.
  const std::vector<Grapheme>& alphabet_graphemes() const { return alphabet_; }

private:
  bool valid_bare(const StemEntry& e) const;
  std::optional<Analysis> analyze_no_infix(const std::u32string& word) const;
  void rebuild_indexes();

  std::map<std::string, StemEntry> entries_;
  AffixTable table_;
  std::u32string negative_infix_ = U"නො"; // නො
  std::vector<Grapheme> alphabet_;

  struct RuleRef {
    const AffixRule* rule;
  };
  // appended-string -> rules, for O(word length) candidate enumeration
  std::unordered_map<std::u32string, std::vector<RuleRef>> suffix_by_append_;
  std::unordered_map<std::u32string, std::vector<RuleRef>> prefix_by_append_;
  std::size_t max_suffix_append_ = 0;
  std::size_t max_prefix_append_ = 0;
};

struct DicParseResult {
  Dictionary dict;
  std::vector<std::string> warnings;
};

// Parses .dic text against a loaded table. First line is the declared entry
// count (mismatches warn, not fail). Duplicate stems merge their flag sets.
// Flags with no rule block are reported in warnings and kept on the entry.
DicParseResult parse_dic(std::string_view text, const AffixTable& table);

// Convenience: parse both files and build the dictionary, accumulating
// warnings from both stages.
DicParseResult load_dictionary(std::string_view aff_text, std::string_view dic_text);

} // namespace sinspell
