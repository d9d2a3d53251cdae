#pragma once

// Unicode foundation for Sinhala text: UTF-8 codec, canonical composition,
// grapheme-cluster segmentation and tokenization.
//
// All functions here are pure and thread-safe.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sinspell/errors.hpp"

namespace sinspell {

// One orthographic unit: a base letter plus any attached vowel signs,
// virama, and ZWJ-joined conjunct parts. Edit operations and confusion
// classes act on these, not on raw codepoints.
struct Grapheme {
  std::u32string cps;

  bool operator==(const Grapheme&) const = default;
  auto operator<=>(const Grapheme&) const = default;
  std::string utf8() const;
};

enum class TokenKind { Word, Number, Punctuation, Other };

struct Token {
  std::string surface;
  std::size_t begin = 0; // byte offset into the source text, half-open
  std::size_t end = 0;
  TokenKind kind = TokenKind::Other;
};

// UTF-8 codec. decode_utf8 rejects overlong forms, surrogates and truncated
// sequences and throws DecodeError with the byte offset.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view cps);
std::string encode_utf8(char32_t cp);

// Canonical composition tailored to the Sinhala block: decomposed vowel-sign
// sequences (e.g. kombuva + aela-pilla) are recomposed to their precomposed
// codepoints; everything else, including ZWJ, passes through unchanged.
// Idempotent. Throws DecodeError on malformed input.
std::string normalize(std::string_view text);
std::u32string normalize(std::u32string_view cps);

// Splits a normalized word into grapheme clusters. Combining signs and the
// virama attach to the preceding base; virama+ZWJ (or ZWJ+virama) followed
// by a consonant joins that consonant into the same cluster. Throws
// SegmentError if the word starts with a combining mark, virama or ZWJ.
std::vector<Grapheme> segment(std::string_view word);
std::vector<Grapheme> segment(std::u32string_view cps);

// Like segment() but never throws: a leading mark becomes its own cluster.
// Used when handling text that is known to be malformed (that is what a
// spelling checker is for).
std::vector<Grapheme> segment_lenient(std::u32string_view cps);

std::string join(const std::vector<Grapheme>& graphemes);

// Splits running text into Word / Number / Punctuation / Other tokens with
// byte spans. Sinhala letters, combining signs, ZWJ and ZWNJ are
// word-internal; hyphens split tokens; digit runs become Number tokens.
// Total: every non-whitespace byte lands in exactly one token.
std::vector<Token> tokenize(std::string_view text);

// Codepoint classes used by the tokenizer and segmenter.
bool is_sinhala_letter(char32_t cp);   // independent vowels + consonants
bool is_sinhala_mark(char32_t cp);     // dependent signs incl. virama
bool is_virama(char32_t cp);
bool is_zwj(char32_t cp);
bool is_word_char(char32_t cp);
bool is_digit_char(char32_t cp);
bool is_space_char(char32_t cp);

} // namespace sinspell
