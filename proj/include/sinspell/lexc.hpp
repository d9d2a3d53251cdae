#pragma once

// .lexc morphological lexicon support: parse continuation-class lexicons and
// compile them to the .dic/.aff pair consumed by the affix engine. Deeper
// continuation chains are pre-expanded so recognition only ever needs one
// suffix rule per word.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sinspell/errors.hpp"

namespace sinspell {

struct LexcEntry {
  std::string analysis;     // tag side, may be empty
  std::string surface;      // may be empty ("0" in source means empty)
  std::string continuation; // lexicon name, or "#" for end-of-word
  std::size_t line = 0;
};

struct LexcLexicon {
  std::string name;
  std::vector<LexcEntry> entries;
};

struct LexcSource {
  std::vector<std::string> multichar_symbols;
  std::vector<LexcLexicon> lexicons; // in file order
  std::string root_name = "Root";

  const LexcLexicon* find(const std::string& name) const;
};

// Parses .lexc text: "!" comment lines, a Multichar_Symbols header, LEXICON
// blocks with ";"-terminated entries. An entry's last token is its
// continuation; a leading "analysis:" part is split off at the first colon.
// Undefined continuations and a missing Root throw ParseError.
LexcSource parse_lexc(std::string_view text);

struct CompiledLexicon {
  std::string dic_text;
  std::string aff_text;
};

// Compiles the lexicon: every path Root -> ... -> "#" factors at its final
// hop into stem (all earlier surfaces, concatenated) plus suffix (the last
// surface). Each distinct set of non-empty suffixes becomes one flag; an
// empty suffix in the class means the stem is valid bare, otherwise the
// stem carries the reserved needs-affix flag. More than 26 distinct classes
// switch the output to two-character flags via FLAG long. Deterministic:
// identical input bytes produce identical output bytes. Throws ParseError
// on a continuation cycle.
CompiledLexicon compile_lexc(const LexcSource& src);

} // namespace sinspell
