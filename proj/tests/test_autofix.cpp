#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sinspell/autofix.hpp"

using namespace sinspell;

TEST_CASE("load_rules: formats and validation") {
  CHECK(load_rules("").empty());
  CHECK(load_rules("# only a comment\n").empty());

  const auto collapse = load_rules("ාා\tා\tAnywhere\n");
  REQUIRE(collapse.size() == 1);
  CHECK(collapse[0].pattern == "ාා");
  CHECK(collapse[0].replacement == "ා");
  CHECK(collapse[0].scope == RuleScope::Anywhere);

  const auto token = load_rules("අපේක්ෂක්ෂා\tඅපේක්ෂා\tWholeToken\n");
  REQUIRE(token.size() == 1);
  CHECK(token[0].scope == RuleScope::WholeToken);

  // self-feeding: the replacement contains the pattern
  CHECK_THROWS_AS(load_rules("ක\tකක\tAnywhere\n"), ParseError);
  // identity rule
  CHECK_THROWS_AS(load_rules("ක\tක\tAnywhere\n"), ParseError);
  // duplicate pattern
  CHECK_THROWS_AS(load_rules("ක\tග\tAnywhere\nක\tට\tAnywhere\n"), ParseError);
  // empty pattern
  CHECK_THROWS_AS(load_rules("\tග\tAnywhere\n"), ParseError);
  // bad scope
  CHECK_THROWS_AS(load_rules("ක\tග\tEverywhere\n"), ParseError);
  try {
    load_rules("ක\tග\tAnywhere\nග\tගග\tAnywhere\n");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("apply_rules: no match leaves text alone") {
  const auto rules = load_rules("ාා\tා\tAnywhere\n");
  const auto result = apply_rules(rules, "මම ගෙදර යමි");
  CHECK(result.text == "මම ගෙදර යමි");
  CHECK(result.fixes.empty());
}

TEST_CASE("apply_rules: whole-token rewrite") {
  const auto rules = load_rules("අපේක්ෂක්ෂා\tඅපේක්ෂා\tWholeToken\n");
  const auto result = apply_rules(rules, "මම අපේක්ෂක්ෂා කරමි");
  CHECK(result.text == "මම අපේක්ෂා කරමි");
  REQUIRE(result.fixes.size() == 1);
  CHECK(result.fixes[0].before == "අපේක්ෂක්ෂා");
  CHECK(result.fixes[0].after == "අපේක්ෂා");
  CHECK(result.fixes[0].rule_index == 0);

  // embedded in a longer token, the WholeToken rule must not fire
  const auto inside = apply_rules(rules, "අපේක්ෂක්ෂාව");
  CHECK(inside.text == "අපේක්ෂක්ෂාව");
  CHECK(inside.fixes.empty());
}

TEST_CASE("apply_rules: collapse inside surrounding text") {
  const auto rules = load_rules("ාා\tා\tAnywhere\n");
  const auto result = apply_rules(rules, "දරාා ම");
  CHECK(result.text == "දරා ම");
  REQUIRE(result.fixes.size() == 1);
  CHECK(result.fixes[0].begin == std::string("දර").size());
}

TEST_CASE("apply_rules: leftmost-longest wins") {
  const auto rules = load_rules("කක\tග\tAnywhere\nකකක\tට\tAnywhere\n");
  // the longer pattern wins regardless of rule order
  CHECK(apply_rules(rules, "කකක").text == "ට");
  // leftmost: the first two codepoints match first
  CHECK(apply_rules(rules, "කකකක").text == "ටක");
}

TEST_CASE("apply_rules: ZWJ cleanup from the shipped rule file") {
  const auto rules =
      load_rules(testutil::slurp(testutil::data_path("autofix_rules.tsv")));
  // a vowel sign directly after ZWJ: the ZWJ goes away
  const std::string broken = "කර‍ා";
  const auto result = apply_rules(rules, broken);
  CHECK(result.text == "කරා");
  // a real conjunct is untouched
  const std::string fine = "අවශ්‍ය";
  CHECK(apply_rules(rules, fine).text == fine);
}

namespace {

// Texts seeded with rule patterns at random positions, each plant padded by
// clean carrier characters (independent errors do not touch).
std::string seeded_text(std::mt19937& rng, const std::vector<RewriteRule>& rules) {
  std::string text;
  std::uniform_int_distribution<std::size_t> pick(0, rules.size() - 1);
  std::uniform_int_distribution<int> words(1, 4);
  const int plants = 1 + static_cast<int>(rng() % 6);
  for (int p = 0; p < plants; ++p) {
    const int w = words(rng);
    for (int i = 0; i < w; ++i) text += testutil::random_word(rng) + " ";
    const auto& rule = rules[pick(rng)];
    if (rule.scope == RuleScope::WholeToken) {
      text += rule.pattern + " ";
    } else {
      // embed mid-word with consonant padding on both sides
      text += "ක" + rule.pattern + "ර ";
    }
  }
  text += testutil::random_word(rng);
  return text;
}

} // namespace

TEST_CASE("apply_rules: idempotence and audit replay on seeded texts") {
  const auto rules =
      load_rules(testutil::slurp(testutil::data_path("autofix_rules.tsv")));
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string text = seeded_text(rng, rules);
    CAPTURE(text);
    const auto once = apply_rules(rules, text);
    const auto twice = apply_rules(rules, once.text);
    CHECK(twice.text == once.text);
    CHECK(twice.fixes.empty());
    // independent replay of the audit trail
    std::string replayed;
    std::size_t at = 0;
    for (const auto& fix : once.fixes) {
      CHECK(fix.begin >= at);
      CHECK(text.substr(fix.begin, fix.end - fix.begin) == fix.before);
      replayed += text.substr(at, fix.begin - at);
      replayed += fix.after;
      at = fix.end;
    }
    replayed += text.substr(at);
    CHECK(replayed == once.text);
    CHECK(replay_fixes(text, once.fixes) == once.text);
  }
}

TEST_CASE("apply_rules is deterministic") {
  const auto rules =
      load_rules(testutil::slurp(testutil::data_path("autofix_rules.tsv")));
  std::mt19937 rng(99);
  const std::string text = seeded_text(rng, rules);
  const auto a = apply_rules(rules, text);
  const auto b = apply_rules(rules, text);
  CHECK(a.text == b.text);
  REQUIRE(a.fixes.size() == b.fixes.size());
  for (std::size_t i = 0; i < a.fixes.size(); ++i) {
    CHECK(a.fixes[i].begin == b.fixes[i].begin);
    CHECK(a.fixes[i].rule_index == b.fixes[i].rule_index);
  }
}

TEST_CASE("fixes_tsv lists one record per fix") {
  const auto rules = load_rules("ාා\tා\tAnywhere\n");
  const auto result = apply_rules(rules, "දරාා දරාා");
  REQUIRE(result.fixes.size() == 2);
  const auto tsv = fixes_tsv(result.fixes);
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 2);
  CHECK(tsv.find("ාා\tා") != std::string::npos);
}
