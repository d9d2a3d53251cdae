#pragma once

// Error mining from parallel (original, corrected) documents: sentence
// alignment, token-level diffing into classified error records, and
// grapheme-confusion statistics for calibrating suggestion weights.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sinspell/errors.hpp"
#include "sinspell/text.hpp"

namespace sinspell {

struct SentencePair {
  std::string original;
  std::string corrected;
  double alignment_score = 0.0;
};

// Splits on sentence terminators (. ? ! । and newlines); trimmed, empties
// dropped.
std::vector<std::string> split_sentences(std::string_view text);

// Monotone sentence alignment permitting 1:1, 1:2 and 2:1 beads, scored by
// length ratio plus a bonus per shared token of three or more graphemes.
// Throws AlignError for an empty document or sentence counts outside the
// 2:1 overall ratio these bead shapes can bridge.
std::vector<SentencePair> align(std::string_view original_doc,
                                std::string_view corrected_doc);

enum class EditClass { Insertion, Deletion, Substitution, Split, Join };

const char* to_string(EditClass c);

struct EditOp {
  enum class Kind { Substitute, Insert, Delete };
  Kind kind = Kind::Substitute;
  std::string from; // grapheme (empty for Insert)
  std::string to;   // grapheme (empty for Delete)
};

struct ErrorRecord {
  std::string wrong;     // empty for pure insertions
  std::string corrected; // empty for pure deletions
  EditClass edit_class = EditClass::Substitution;
  std::optional<std::vector<EditOp>> detail; // grapheme script, substitutions
};

// Token-level diff of an aligned pair. Change regions classify as Split
// (one token whose halves concatenate to it), Join (the symmetric case),
// Substitution (1:1, with a grapheme edit script), Insertion or Deletion.
// A 1:1 substitution whose grapheme distance exceeds max(3, 40% of the
// longer token) is split into Deletion + Insertion instead. Irregular
// regions are decomposed by a small alignment DP and classified per bead.
std::vector<ErrorRecord> diff(const SentencePair& pair);

// Aggregates substituted grapheme pairs across all Substitution records,
// ordered by descending count (ties by pair).
std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>>
confusion_stats(const std::vector<ErrorRecord>& records);

// Grapheme-level minimum edit script (insert/delete/substitute), used for
// Substitution details and recomputable by callers.
std::vector<EditOp> edit_script(const std::string& from, const std::string& to);

std::string render_script(const std::vector<EditOp>& ops);

// TSV renderings: "wrong TAB corrected TAB class TAB script" per record.
std::string records_tsv(const std::vector<ErrorRecord>& records);
std::string stats_tsv(
    const std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>>&
        stats);

} // namespace sinspell
