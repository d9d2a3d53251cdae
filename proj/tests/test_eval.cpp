#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sinspell/eval.hpp"

using namespace sinspell;

namespace {

Dictionary sample_dictionary() {
  auto loaded =
      load_dictionary(testutil::slurp(testutil::data_path("sample.aff")),
                      testutil::slurp(testutil::data_path("sample.dic")));
  return std::move(loaded.dict);
}

} // namespace

TEST_CASE("eval_detection counts and rates") {
  const auto dict = sample_dictionary();
  const std::vector<std::string> correct = {"අම්මා", "දිගට", "ම", "දරන"};
  const std::vector<std::string> incorrect = {"දරණ", "දිගටම", "qqq"};
  const auto report = eval_detection(dict, correct, incorrect);
  CHECK(report.tp == 4);
  CHECK(report.fn == 0);
  CHECK(report.tn == 3);
  CHECK(report.fp == 0);
  REQUIRE(report.tp_rate.has_value());
  CHECK(*report.tp_rate == doctest::Approx(100.0));
  // partition invariants
  CHECK(report.tp + report.fn == correct.size());
  CHECK(report.tn + report.fp == incorrect.size());
}

TEST_CASE("eval_detection: empty list leaves its rate absent") {
  const auto dict = sample_dictionary();
  const auto report = eval_detection(dict, {"අම්මා"}, {});
  CHECK(report.tp_rate.has_value());
  CHECK_FALSE(report.tn_rate.has_value());
  CHECK(render_detection(report).find("-") != std::string::npos);
}

TEST_CASE("percentage arithmetic reproduces the published table rates") {
  // counts from the evaluation tables; printed rates are truncated
  auto rate = [](std::size_t a, std::size_t b) {
    return format_percent(100.0 * static_cast<double>(a) /
                          static_cast<double>(a + b));
  };
  CHECK(rate(1897, 20) == "98.9");
  CHECK(rate(1912, 5) == "99.7");
  CHECK(rate(1853, 64) == "96.6");
  CHECK(rate(420, 37) == "91.9");
  CHECK(rate(449, 8) == "98.2");
}

TEST_CASE("mrr formula on hand-computed fixtures") {
  // ranks [1, 2, absent]: plant three cases against a tiny dictionary
  const auto loaded = load_dictionary("", "3\nදරන\nමම\nගෙදර\n");
  const auto confusions = parse_confusions("0.5\tන\tණ\n0.5\tල\tළ\n");
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"දරණ", "දරන"},   // rank 1 via the confusion set
      {"මමළ", "මම"},    // deletion candidate at cost 1, behind no one...
      {"qqq", "ගෙදර"},  // absent: no candidate reaches ගෙදර
  };
  const auto report = eval_suggestions(loaded.dict, confusions, cases);
  CHECK(report.evaluated == 3);
  // rank of මම for "මමළ": verify it is 1 so adjust expectations precisely
  const auto direct = generate(loaded.dict, confusions, "මමළ");
  REQUIRE(!direct.empty());
  CHECK(direct[0].candidate == "මම");
  // so ranks are [1, 1, absent]: mrr = 2/3, first accuracy 66.6%
  CHECK(report.mrr == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(format_percent(report.first_accuracy) == "66.6");
}

TEST_CASE("mrr: all gold at rank 1") {
  const auto loaded = load_dictionary("", "1\nදරන\n");
  const auto confusions = parse_confusions("0.5\tන\tණ\n");
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"දරණ", "දරන"}};
  const auto report = eval_suggestions(loaded.dict, confusions, cases);
  CHECK(report.mrr == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.first_accuracy == doctest::Approx(100.0));
}

TEST_CASE("eval_suggestions skips recognized inputs with a warning") {
  const auto loaded = load_dictionary("", "2\nදරන\nමම\n");
  const auto confusions = parse_confusions("0.5\tන\tණ\n");
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"මම", "දරන"}, {"දරණ", "දරන"}};
  const auto report = eval_suggestions(loaded.dict, confusions, cases);
  CHECK(report.evaluated == 1);
  CHECK(report.skipped == 1);
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings[0].find("මම") != std::string::npos);
}

TEST_CASE("first_accuracy/100 never exceeds mrr") {
  const auto loaded = load_dictionary("", "3\nදරන\nමම\nගෙදර\n");
  const auto confusions = parse_confusions("0.5\tන\tණ\n");
  std::mt19937 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::pair<std::string, std::string>> cases;
    const std::size_t n = 1 + rng() % 6;
    for (std::size_t i = 0; i < n; ++i) {
      switch (rng() % 3) {
        case 0: cases.push_back({"දරණ", "දරන"}); break;
        case 1: cases.push_back({"මමළ", "මම"}); break;
        default: cases.push_back({"xyz", "ගෙදර"}); break;
      }
    }
    const auto report = eval_suggestions(loaded.dict, confusions, cases);
    CHECK(report.first_accuracy / 100.0 <= report.mrr + 1e-12);
  }
}

TEST_CASE("report rendering: the published row layout") {
  SuggestionReport fixture;
  fixture.first_accuracy = 62.3;
  fixture.mrr = 0.729;
  fixture.evaluated = 100;
  const auto text = render_suggestions(fixture, 100, "sinspell");
  CHECK(text.find("62.3") != std::string::npos);
  CHECK(text.find("0.729") != std::string::npos);
  CHECK(text.find("100") != std::string::npos);
  const auto tsv = suggestions_tsv(fixture, 100, "sinspell");
  CHECK(tsv == "sinspell\t100\t62.3\t0.729\n");

  DetectionReport det;
  det.tp = 1897;
  det.fn = 20;
  det.tp_rate = 100.0 * 1897 / 1917;
  det.tn = 449;
  det.fp = 8;
  det.tn_rate = 100.0 * 449 / 457;
  const auto dtsv = detection_tsv(det, "sinspell");
  CHECK(dtsv == "sinspell\t1897\t20\t98.9\t449\t8\t98.2\n");
}
