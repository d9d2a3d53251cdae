#include "sinspell/eval.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sinspell {

DetectionReport eval_detection(const Dictionary& dict,
                               const std::vector<std::string>& correct_words,
                               const std::vector<std::string>& incorrect_words) {
  DetectionReport report;
  for (const auto& w : correct_words)
    (dict.recognize(w) ? report.tp : report.fn)++;
  for (const auto& w : incorrect_words)
    (dict.recognize(w) ? report.fp : report.tn)++;
  if (report.tp + report.fn > 0)
    report.tp_rate = 100.0 * static_cast<double>(report.tp) /
                     static_cast<double>(report.tp + report.fn);
  if (report.tn + report.fp > 0)
    report.tn_rate = 100.0 * static_cast<double>(report.tn) /
                     static_cast<double>(report.tn + report.fp);
  return report;
}

SuggestionReport eval_suggestions(
    const Dictionary& dict, const ConfusionTable& confusions,
    const std::vector<std::pair<std::string, std::string>>& cases,
    std::size_t max_suggestions, const FrequencyTable* frequencies) {
  SuggestionReport report;
  std::size_t rank1 = 0;
  double reciprocal_sum = 0.0;
  for (const auto& [misspelled, gold] : cases) {
    if (dict.recognize(misspelled)) {
      ++report.skipped;
      report.warnings.push_back("case '" + misspelled +
                                "' is recognized, skipped");
      continue;
    }
    const auto suggestions =
        generate(dict, confusions, misspelled, max_suggestions, frequencies);
    const std::string gold_norm = normalize(gold);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < suggestions.size(); ++i) {
      if (suggestions[i].candidate == gold_norm) {
        rank = i + 1;
        break;
      }
    }
    ++report.evaluated;
    if (rank == 1) ++rank1;
    if (rank > 0) reciprocal_sum += 1.0 / static_cast<double>(rank);
  }
  if (report.evaluated > 0) {
    report.first_accuracy =
        100.0 * static_cast<double>(rank1) / static_cast<double>(report.evaluated);
    report.mrr = reciprocal_sum / static_cast<double>(report.evaluated);
  }
  return report;
}

std::vector<std::pair<std::string, std::string>> parse_cases(
    std::string_view text) {
  std::vector<std::pair<std::string, std::string>> cases;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(line_no, "expected 'misspelled TAB gold'");
    cases.emplace_back(normalize(line.substr(0, tab)),
                       normalize(line.substr(tab + 1)));
  }
  return cases;
}

std::string format_percent(double value) {
  // truncate, not round: 98.956... prints as 98.9
  const double truncated = std::floor(value * 10.0 + 1e-9) / 10.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", truncated);
  return buf;
}

std::string format_mrr(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  return buf;
}

namespace {

std::string pad(std::string s, std::size_t width) {
  while (s.size() < width) s += ' ';
  return s;
}

} // namespace

std::string render_detection(const DetectionReport& report,
                             std::string_view name) {
  std::string out;
  out += pad("checker", 12) + pad("TP", 8) + pad("FN", 8) + pad("TP%", 8) +
         pad("TN", 8) + pad("FP", 8) + pad("TN%", 8) + "\n";
  out += pad(std::string(name), 12) + pad(std::to_string(report.tp), 8) +
         pad(std::to_string(report.fn), 8) +
         pad(report.tp_rate ? format_percent(*report.tp_rate) : "-", 8) +
         pad(std::to_string(report.tn), 8) + pad(std::to_string(report.fp), 8) +
         pad(report.tn_rate ? format_percent(*report.tn_rate) : "-", 8) + "\n";
  return out;
}

std::string render_suggestions(const SuggestionReport& report,
                               std::size_t case_count, std::string_view name) {
  std::string out;
  out += pad("checker", 12) + pad("cases", 8) + pad("1st%", 8) + "MRR\n";
  out += pad(std::string(name), 12) + pad(std::to_string(case_count), 8) +
         pad(format_percent(report.first_accuracy), 8) + format_mrr(report.mrr) +
         "\n";
  return out;
}

std::string detection_tsv(const DetectionReport& report, std::string_view name) {
  std::string out{name};
  out += "\t" + std::to_string(report.tp) + "\t" + std::to_string(report.fn) +
         "\t" + (report.tp_rate ? format_percent(*report.tp_rate) : "-") + "\t" +
         std::to_string(report.tn) + "\t" + std::to_string(report.fp) + "\t" +
         (report.tn_rate ? format_percent(*report.tn_rate) : "-") + "\n";
  return out;
}

std::string suggestions_tsv(const SuggestionReport& report,
                            std::size_t case_count, std::string_view name) {
  std::string out{name};
  out += "\t" + std::to_string(case_count) + "\t" +
         format_percent(report.first_accuracy) + "\t" + format_mrr(report.mrr) +
         "\n";
  return out;
}

} // namespace sinspell
