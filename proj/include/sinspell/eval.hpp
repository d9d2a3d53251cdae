#pragma once

// Detection and suggestion-quality evaluation: true-positive / true-negative
// rates over word lists, first-suggestion accuracy, and mean reciprocal
// rank over (misspelled, gold) cases.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sinspell/affix.hpp"
#include "sinspell/suggest.hpp"

namespace sinspell {

struct DetectionReport {
  std::size_t tp = 0; // correct words recognized
  std::size_t fn = 0; // correct words rejected
  std::size_t tn = 0; // incorrect words rejected
  std::size_t fp = 0; // incorrect words recognized
  std::optional<double> tp_rate; // 100*tp/(tp+fn); absent for an empty list
  std::optional<double> tn_rate; // 100*tn/(tn+fp); absent for an empty list
};

DetectionReport eval_detection(const Dictionary& dict,
                               const std::vector<std::string>& correct_words,
                               const std::vector<std::string>& incorrect_words);

struct SuggestionReport {
  double first_accuracy = 0.0; // percent of cases with gold at rank 1
  double mrr = 0.0;            // mean reciprocal rank, absent gold counts 0
  std::size_t evaluated = 0;
  std::size_t skipped = 0;     // cases whose "misspelled" word was recognized
  std::vector<std::string> warnings;
};

SuggestionReport eval_suggestions(
    const Dictionary& dict, const ConfusionTable& confusions,
    const std::vector<std::pair<std::string, std::string>>& cases,
    std::size_t max_suggestions = 10,
    const FrequencyTable* frequencies = nullptr);

// Case file: "misspelled TAB gold" per line, "#" comments.
std::vector<std::pair<std::string, std::string>> parse_cases(
    std::string_view text);

// Percentages print truncated to one decimal, matching how the evaluation
// tables are conventionally derived from raw counts (1897/1917 -> 98.9).
// MRR prints to three decimals.
std::string format_percent(double value);
std::string format_mrr(double value);

// Aligned text table and TSV renderings of the reports.
std::string render_detection(const DetectionReport& report,
                             std::string_view name = "sinspell");
std::string render_suggestions(const SuggestionReport& report,
                               std::size_t case_count,
                               std::string_view name = "sinspell");
std::string detection_tsv(const DetectionReport& report,
                          std::string_view name = "sinspell");
std::string suggestions_tsv(const SuggestionReport& report,
                            std::size_t case_count,
                            std::string_view name = "sinspell");

} // namespace sinspell
