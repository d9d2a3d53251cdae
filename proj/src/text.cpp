#include "sinspell/text.hpp"

#include <algorithm>
#include <array>

namespace sinspell {

namespace {

constexpr char32_t kZwj = U'‍';
constexpr char32_t kZwnj = U'‌';
constexpr char32_t kVirama = U'්'; // al-lakuna

// Canonical decompositions inside the Sinhala block, fully expanded
// (kombuva-based vowel signs). Source: Unicode character database.
struct Decomposition {
  char32_t cp;
  std::u32string_view expansion;
};
constexpr std::array<Decomposition, 4> kDecompositions{{
    {U'ේ', U"ේ"},       // diga kombuva
    {U'ො', U"ො"},       // kombuva haa aela-pilla
    {U'ෝ', U"ෝ"}, // kombuva haa diga aela-pilla
    {U'ෞ', U"ෞ"},       // kombuva haa gayanukitta
}};

// Primary composites for adjacent pairs, per the same data.
char32_t compose_pair(char32_t a, char32_t b) {
  if (a == U'ෙ' && b == kVirama) return U'ේ';
  if (a == U'ෙ' && b == U'ා') return U'ො';
  if (a == U'ො' && b == kVirama) return U'ෝ';
  if (a == U'ෙ' && b == U'ෟ') return U'ෞ';
  return 0;
}

const std::u32string_view* find_decomposition(char32_t cp) {
  for (const auto& d : kDecompositions)
    if (d.cp == cp) return &d.expansion;
  return nullptr;
}

bool is_combining_extender(char32_t cp) {
  if (is_sinhala_mark(cp)) return true;
  if (cp == kZwnj) return true;                  // invisible, never starts a unit
  if (cp >= 0x0300 && cp <= 0x036F) return true; // generic combining diacritics
  return false;
}

} // namespace

bool is_sinhala_letter(char32_t cp) {
  return (cp >= 0x0D85 && cp <= 0x0D96) || // independent vowels
         (cp >= 0x0D9A && cp <= 0x0DB1) || // consonants
         (cp >= 0x0DB3 && cp <= 0x0DBB) || cp == 0x0DBD ||
         (cp >= 0x0DC0 && cp <= 0x0DC6);
}

bool is_sinhala_mark(char32_t cp) {
  return (cp >= 0x0D81 && cp <= 0x0D83) || // candrabindu, anusvara, visarga
         cp == 0x0DCA ||                   // virama
         (cp >= 0x0DCF && cp <= 0x0DD4) || cp == 0x0DD6 ||
         (cp >= 0x0DD8 && cp <= 0x0DDF) || cp == 0x0DF2 || cp == 0x0DF3;
}

bool is_virama(char32_t cp) { return cp == kVirama; }
bool is_zwj(char32_t cp) { return cp == kZwj; }

bool is_word_char(char32_t cp) {
  return is_sinhala_letter(cp) || is_sinhala_mark(cp) || cp == kZwj ||
         cp == kZwnj || (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}

bool is_digit_char(char32_t cp) {
  return (cp >= U'0' && cp <= U'9') || (cp >= 0x0DE6 && cp <= 0x0DEF);
}

bool is_space_char(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\f': case U'\v':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000: case 0x200B:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto n = text.size();
  auto fail = [](std::size_t at) -> char32_t {
    throw DecodeError(at, "malformed UTF-8 at byte offset " + std::to_string(at));
  };
  while (i < n) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      fail(i);
    }
    if (i + len > n) fail(i);
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) fail(i + k);
      cp = (cp << 6) | (b & 0x3F);
    }
    // reject overlong forms, surrogates, and out-of-range values
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (len > 1 && cp < kMin[len]) fail(i);
    if (cp >= 0xD800 && cp <= 0xDFFF) fail(i);
    if (cp > 0x10FFFF) fail(i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size() * 3);
  for (char32_t cp : cps) out += encode_utf8(cp);
  return out;
}

std::u32string normalize(std::u32string_view cps) {
  // Decompose, then recompose adjacent pairs left to right. The Sinhala
  // block has a single non-starter (the virama) and every composable pair
  // is adjacent after decomposition, so this fold matches canonical
  // composition exactly for Sinhala text.
  std::u32string decomposed;
  decomposed.reserve(cps.size());
  for (char32_t cp : cps) {
    if (const auto* exp = find_decomposition(cp))
      decomposed.append(*exp);
    else
      decomposed.push_back(cp);
  }
  std::u32string out;
  out.reserve(decomposed.size());
  for (char32_t cp : decomposed) {
    if (!out.empty()) {
      if (char32_t composed = compose_pair(out.back(), cp)) {
        out.back() = composed;
        continue;
      }
    }
    out.push_back(cp);
  }
  return out;
}

std::string normalize(std::string_view text) {
  return encode_utf8(normalize(decode_utf8(text)));
}

std::string Grapheme::utf8() const { return encode_utf8(cps); }

namespace {

std::vector<Grapheme> segment_impl(std::u32string_view cps, bool lenient) {
  std::vector<Grapheme> out;
  std::size_t i = 0;
  const auto n = cps.size();
  while (i < n) {
    if (!lenient && (is_combining_extender(cps[i]) || is_zwj(cps[i])))
      throw SegmentError(i, "combining mark at cluster start (position " +
                                std::to_string(i) + ")");
    Grapheme g;
    g.cps.push_back(cps[i]);
    ++i;
    for (;;) {
      if (i < n && is_combining_extender(cps[i])) {
        g.cps.push_back(cps[i]);
        ++i;
        continue;
      }
      if (i < n && is_zwj(cps[i])) {
        // conjunct: virama + ZWJ + consonant
        if (!g.cps.empty() && is_virama(g.cps.back()) && i + 1 < n &&
            is_sinhala_letter(cps[i + 1])) {
          g.cps.push_back(cps[i]);
          g.cps.push_back(cps[i + 1]);
          i += 2;
          continue;
        }
        // touching letters: ZWJ + virama + consonant
        if (i + 2 < n && is_virama(cps[i + 1]) && is_sinhala_letter(cps[i + 2])) {
          g.cps.push_back(cps[i]);
          g.cps.push_back(cps[i + 1]);
          g.cps.push_back(cps[i + 2]);
          i += 3;
          continue;
        }
        // stray ZWJ stays attached to the current cluster
        g.cps.push_back(cps[i]);
        ++i;
        continue;
      }
      break;
    }
    out.push_back(std::move(g));
  }
  return out;
}

} // namespace

std::vector<Grapheme> segment(std::u32string_view cps) {
  return segment_impl(cps, false);
}

std::vector<Grapheme> segment(std::string_view word) {
  return segment_impl(decode_utf8(word), false);
}

std::vector<Grapheme> segment_lenient(std::u32string_view cps) {
  return segment_impl(cps, true);
}

std::string join(const std::vector<Grapheme>& graphemes) {
  std::string out;
  for (const auto& g : graphemes) out += g.utf8();
  return out;
}

namespace {

bool is_punct_char(char32_t cp) {
  if (cp < 0x80)
    return (cp >= U'!' && cp <= U'/') || (cp >= U':' && cp <= U'@') ||
           (cp >= U'[' && cp <= U'`') || (cp >= U'{' && cp <= U'~');
  switch (cp) {
    case 0x0964: // danda
    case 0x0DF4: // kunddaliya
    case 0x00AB: case 0x00BB: case 0x2018: case 0x2019: case 0x201C:
    case 0x201D: case 0x2013: case 0x2014: case 0x2026: case 0x00B7:
      return true;
    default:
      return false;
  }
}

bool starts_word(char32_t cp) {
  return is_sinhala_letter(cp) || is_sinhala_mark(cp) ||
         (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}

} // namespace

std::vector<Token> tokenize(std::string_view text) {
  // Decode with byte offsets so token spans can slice the source exactly.
  const std::u32string cps = decode_utf8(text);
  std::vector<std::size_t> offsets;
  offsets.reserve(cps.size() + 1);
  {
    std::size_t byte = 0;
    for (char32_t cp : cps) {
      offsets.push_back(byte);
      byte += encode_utf8(cp).size();
    }
    offsets.push_back(byte);
  }

  std::vector<Token> out;
  std::size_t i = 0;
  const auto n = cps.size();
  auto flush = [&](std::size_t from, std::size_t to, TokenKind kind) {
    Token t;
    t.begin = offsets[from];
    t.end = offsets[to];
    t.surface = std::string(text.substr(t.begin, t.end - t.begin));
    t.kind = kind;
    out.push_back(std::move(t));
  };
  while (i < n) {
    const char32_t c = cps[i];
    if (is_space_char(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (starts_word(c)) {
      ++i;
      while (i < n && is_word_char(cps[i])) ++i;
      flush(start, i, TokenKind::Word);
    } else if (is_digit_char(c)) {
      ++i;
      while (i < n && is_digit_char(cps[i])) ++i;
      flush(start, i, TokenKind::Number);
    } else if (is_punct_char(c)) {
      ++i;
      flush(start, i, TokenKind::Punctuation);
    } else {
      ++i;
      while (i < n && !is_space_char(cps[i]) && !starts_word(cps[i]) &&
             !is_digit_char(cps[i]) && !is_punct_char(cps[i]))
        ++i;
      flush(start, i, TokenKind::Other);
    }
  }
  return out;
}

} // namespace sinspell
