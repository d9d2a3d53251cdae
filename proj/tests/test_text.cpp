#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sinspell/text.hpp"

using namespace sinspell;

TEST_CASE("utf8 codec round-trips and rejects malformed input") {
  CHECK(encode_utf8(decode_utf8("hello")) == "hello");
  CHECK(encode_utf8(decode_utf8("දරන")) == "දරන");
  CHECK(decode_utf8("දරන").size() == 3);

  CHECK_THROWS_AS(decode_utf8("\xFF"), DecodeError);
  CHECK_THROWS_AS(decode_utf8("ab\x80"), DecodeError);
  try {
    decode_utf8("ab\x80");
    FAIL("expected throw");
  } catch (const DecodeError& e) {
    CHECK(e.offset() == 2);
  }
  // truncated three-byte sequence
  CHECK_THROWS_AS(decode_utf8(std::string("\xE0\xB6")), DecodeError);
  // overlong encoding of '/'
  CHECK_THROWS_AS(decode_utf8(std::string("\xC0\xAF")), DecodeError);
  // surrogate half
  CHECK_THROWS_AS(decode_utf8(std::string("\xED\xA0\x80")), DecodeError);
}

TEST_CASE("normalize: ASCII fixed point and idempotence on composed text") {
  CHECK(normalize("abc") == "abc");
  CHECK(normalize("දරන") == "දරන");
  CHECK(normalize(normalize("දරන")) == normalize("දරන"));
}

TEST_CASE("normalize composes decomposed Sinhala vowel signs") {
  // expected composites taken from the Unicode canonical composition data
  CHECK(normalize(std::u32string{U'ක', U'ෙ', U'්'}) ==
        std::u32string{U'ක', U'ේ'});
  CHECK(normalize(std::u32string{U'ක', U'ෙ', U'ා'}) ==
        std::u32string{U'ක', U'ො'});
  CHECK(normalize(std::u32string{U'ක', U'ෙ', U'ා', U'්'}) ==
        std::u32string{U'ක', U'ෝ'});
  CHECK(normalize(std::u32string{U'ක', U'ො', U'්'}) ==
        std::u32string{U'ක', U'ෝ'});
  CHECK(normalize(std::u32string{U'ක', U'ෙ', U'ෟ'}) ==
        std::u32string{U'ක', U'ෞ'});
  // no pair: kombuva followed by something non-composing stays put
  CHECK(normalize(std::u32string{U'ක', U'ෙ', U'ම'}) ==
        std::u32string{U'ක', U'ෙ', U'ම'});
}

TEST_CASE("normalize preserves ZWJ conjunct sequences") {
  const std::string word = "අවශ්‍ය"; // අවශ්‍ය
  CHECK(normalize(word) == word);
}

TEST_CASE("normalize is idempotent on random strings") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> kind(0, 5);
  for (int trial = 0; trial < 500; ++trial) {
    std::u32string s;
    const std::size_t n = rng() % 30;
    for (std::size_t i = 0; i < n; ++i) {
      switch (kind(rng)) {
        case 0: s += static_cast<char32_t>(U'a' + rng() % 26); break;
        case 1: s += static_cast<char32_t>(0x0D85 + rng() % 0x12); break;
        case 2: s += static_cast<char32_t>(0x0D9A + rng() % 0x18); break;
        case 3: s += static_cast<char32_t>(0x0DCF + rng() % 0x11); break;
        case 4: s += U'‍'; break;
        default: s += static_cast<char32_t>(0x0DD8 + rng() % 8); break;
      }
    }
    const std::u32string once = normalize(s);
    CHECK(normalize(once) == once);
  }
}

TEST_CASE("segment splits words into orthographic units") {
  auto utf8_of = [](const std::vector<Grapheme>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(g.utf8());
    return out;
  };
  CHECK(utf8_of(segment("මම")) == std::vector<std::string>{"ම", "ම"});
  CHECK(utf8_of(segment("දරණ")) == std::vector<std::string>{"ද", "ර", "ණ"});
  CHECK(utf8_of(segment("අම්මා")) ==
        std::vector<std::string>{"අ", "ම්", "මා"});
}

TEST_CASE("segment keeps virama+ZWJ conjuncts in one cluster") {
  const auto gs = segment("අවශ්‍ය");
  REQUIRE(gs.size() == 3);
  CHECK(gs[0].utf8() == "අ");
  CHECK(gs[1].utf8() == "ව");
  CHECK(gs[2].utf8() == "ශ්‍ය");
  // touching-letter order: ZWJ before the virama
  const auto touching = segment("ක‍්ෂ");
  REQUIRE(touching.size() == 1);
}

TEST_CASE("segment rejects a leading combining mark") {
  CHECK_THROWS_AS(segment("ාම"), SegmentError);
  try {
    segment("ාම");
    FAIL("expected throw");
  } catch (const SegmentError& e) {
    CHECK(e.position() == 0);
  }
  // lenient mode groups it instead
  CHECK(segment_lenient(decode_utf8("ාම")).size() == 2);
}

TEST_CASE("join(segment(w)) == w on random words") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string w = normalize(testutil::random_word(rng, 1, 8));
    CHECK(join(segment(w)) == w);
  }
}

TEST_CASE("tokenize basics") {
  CHECK(tokenize("").empty());

  const auto two = tokenize("දිගට ම");
  REQUIRE(two.size() == 2);
  CHECK(two[0].surface == "දිගට");
  CHECK(two[0].kind == TokenKind::Word);
  CHECK(two[1].surface == "ම");
  CHECK(two[1].kind == TokenKind::Word);

  const auto mixed = tokenize("කටයුතු 2020.");
  REQUIRE(mixed.size() == 3);
  CHECK(mixed[0].kind == TokenKind::Word);
  CHECK(mixed[1].kind == TokenKind::Number);
  CHECK(mixed[1].surface == "2020");
  CHECK(mixed[2].kind == TokenKind::Punctuation);
  CHECK(mixed[2].surface == ".");
}

TEST_CASE("tokenize: hyphen splits, ZWJ does not") {
  const auto hyphenated = tokenize("කටයුතු-වලට");
  REQUIRE(hyphenated.size() == 3);
  CHECK(hyphenated[0].surface == "කටයුතු");
  CHECK(hyphenated[1].kind == TokenKind::Punctuation);
  CHECK(hyphenated[2].surface == "වලට");

  const auto conjunct = tokenize("අවශ්‍ය දේ");
  REQUIRE(conjunct.size() == 2);
  CHECK(conjunct[0].surface == "අවශ්‍ය");
}

TEST_CASE("tokenize spans tile the input") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string text = testutil::random_text(rng, 15);
    const auto tokens = tokenize(text);
    std::size_t last_end = 0;
    for (const auto& t : tokens) {
      CHECK(t.begin >= last_end);
      CHECK(t.end > t.begin);
      CHECK(text.substr(t.begin, t.end - t.begin) == t.surface);
      // the gap is whitespace only
      for (std::size_t i = last_end; i < t.begin; ++i) {
        const auto b = static_cast<unsigned char>(text[i]);
        if (b < 0x80) CHECK(std::isspace(b));
      }
      last_end = t.end;
    }
  }
}
