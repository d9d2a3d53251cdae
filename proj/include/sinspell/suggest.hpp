#pragma once

// Correction-candidate generation and ranking for rejected words.
// Candidate classes, cheapest first: confusion-set substitutions (vowel
// length, similar-sounding letters, ...), replacement-table rewrites,
// two-word splits, single grapheme edits, and - only when nothing cheap
// exists - double edits.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sinspell/affix.hpp"
#include "sinspell/text.hpp"

namespace sinspell {

// Ranking weights. Confusion and split errors dominate real corpora, so
// they must outrank generic edits.
inline constexpr double kReplacementCost = 0.6;
inline constexpr double kSplitCost = 0.75;
inline constexpr double kEditCost = 1.0;
inline constexpr double kEdit2Cost = 2.0;
// double edits are generated only if no candidate cheaper than this exists
inline constexpr double kEdit2Gate = 1.25;
// cap on membership probes during double-edit enumeration
inline constexpr std::size_t kEdit2Budget = 200000;

struct ConfusionSet {
  std::vector<std::string> members; // grapheme strings, mutually confusable
  double weight = 0.5;              // must stay below kEditCost
};

class ConfusionTable {
public:
  ConfusionTable() = default;
  explicit ConfusionTable(std::vector<ConfusionSet> sets);

  const std::vector<ConfusionSet>& sets() const { return sets_; }

  // Substitution weight between two single graphemes: the cheapest set
  // containing both, else the generic edit cost.
  double substitution_weight(const Grapheme& a, const Grapheme& b) const;

private:
  std::vector<ConfusionSet> sets_;
  struct PairHash {
    std::size_t operator()(const std::pair<std::u32string, std::u32string>& p) const {
      return std::hash<std::u32string>()(p.first) * 31 ^
             std::hash<std::u32string>()(p.second);
    }
  };
  std::unordered_map<std::pair<std::u32string, std::u32string>, double, PairHash>
      pair_weights_;
};

// One confusion set per line: "weight TAB member TAB member...". "#" lines
// are comments. Sets need at least two distinct members and a weight below
// the generic edit cost.
ConfusionTable parse_confusions(std::string_view text);

// Frequency sidecar, "word TAB count" per line. Missing words count as 0.
using FrequencyTable = std::unordered_map<std::string, std::uint64_t>;
FrequencyTable parse_frequencies(std::string_view text);

enum class SuggestionSource { Confusion, Edit1, Edit2, Split, ReplacementTable };

struct Suggestion {
  std::string candidate;
  double cost = 0.0;
  SuggestionSource source = SuggestionSource::Edit1;
};

const char* to_string(SuggestionSource source);

// Weighted grapheme-level edit distance: insert/delete/substitute/adjacent
// transpose at 1.0, in-set substitutions at the set weight. Symmetric for
// symmetric weight tables.
double edit_cost(const ConfusionTable& confusions,
                 const std::vector<Grapheme>& a, const std::vector<Grapheme>& b);

// Generates at most `k` suggestions for `word`, deduplicated (minimum cost
// wins) and sorted by (cost, frequency descending, lexicographic). Every
// candidate - both halves, for splits - passes dict.recognize. A word the
// dictionary already accepts yields an empty list.
std::vector<Suggestion> generate(const Dictionary& dict,
                                 const ConfusionTable& confusions,
                                 std::string_view word, std::size_t k = 10,
                                 const FrequencyTable* frequencies = nullptr);

// If two adjacent Word tokens, read as one word (ignoring an intervening
// hyphen), form a dictionary word and either half is suspect - unrecognized,
// or a bound suffix like වල/වලට/වලින් - suggests the joined form. Reported
// under the Split source: it is the same word-boundary error class.
std::optional<Suggestion> suggest_join(const Dictionary& dict,
                                       const Token& first, const Token& second);

} // namespace sinspell
