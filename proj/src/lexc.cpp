#include "sinspell/lexc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sinspell/text.hpp"

namespace sinspell {

const LexcLexicon* LexcSource::find(const std::string& name) const {
  for (const auto& l : lexicons)
    if (l.name == name) return &l;
  return nullptr;
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

LexcSource parse_lexc(std::string_view text) {
  LexcSource src;
  LexcLexicon* current = nullptr;
  bool in_multichar = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto bang = raw.find('!'); bang != std::string::npos)
      raw.erase(bang);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    std::istringstream tokens(line);
    std::string first;
    tokens >> first;

    if (first == "Multichar_Symbols") {
      in_multichar = true;
      std::string sym;
      while (tokens >> sym) src.multichar_symbols.push_back(sym);
      continue;
    }
    if (first == "LEXICON") {
      in_multichar = false;
      std::string name;
      if (!(tokens >> name))
        throw ParseError(line_no, "LEXICON without a name");
      src.lexicons.push_back(LexcLexicon{name, {}});
      current = &src.lexicons.back();
      continue;
    }
    if (in_multichar && !current) {
      // symbol list continued onto following lines
      src.multichar_symbols.push_back(first);
      std::string sym;
      while (tokens >> sym) src.multichar_symbols.push_back(sym);
      continue;
    }
    if (!current)
      throw ParseError(line_no, "entry before any LEXICON block");
    if (line.back() != ';')
      throw ParseError(line_no, "entry does not end with ';'");

    std::string body = trim(line.substr(0, line.size() - 1));
    if (body.empty())
      throw ParseError(line_no, "empty entry");

    // last whitespace-separated token is the continuation
    const auto last_ws = body.find_last_of(" \t");
    LexcEntry entry;
    entry.line = line_no;
    if (last_ws == std::string::npos) {
      entry.continuation = body;
    } else {
      entry.continuation = body.substr(last_ws + 1);
      std::string data = trim(body.substr(0, last_ws));
      if (auto colon = data.find(':'); colon != std::string::npos) {
        entry.analysis = trim(data.substr(0, colon));
        entry.surface = trim(data.substr(colon + 1));
      } else {
        entry.surface = data;
      }
    }
    if (entry.surface == "0") entry.surface.clear(); // lexc zero surface
    entry.surface = normalize(entry.surface);
    current->entries.push_back(std::move(entry));
  }

  if (!src.find(src.root_name))
    throw ParseError(0, "missing LEXICON " + src.root_name);
  for (const auto& lex : src.lexicons)
    for (const auto& e : lex.entries)
      if (e.continuation != "#" && !src.find(e.continuation))
        throw ParseError(e.line, "entry in LEXICON " + lex.name +
                                     " continues to undefined lexicon '" +
                                     e.continuation + "'");
  return src;
}

namespace {

// DFS cycle check over the continuation graph reachable from Root; returns
// the reachable lexicons in topological order.
std::vector<const LexcLexicon*> topo_order(const LexcSource& src) {
  enum class Mark { White, Gray, Black };
  std::map<std::string, Mark> marks;
  std::vector<const LexcLexicon*> order;
  std::vector<std::string> stack;

  auto visit = [&](auto&& self, const std::string& name) -> void {
    if (name == "#") return;
    auto& mark = marks.try_emplace(name, Mark::White).first->second;
    if (mark == Mark::Black) return;
    if (mark == Mark::Gray) {
      std::string cycle;
      auto at = std::find(stack.begin(), stack.end(), name);
      for (; at != stack.end(); ++at) cycle += *at + " -> ";
      throw ParseError(0, "continuation cycle: " + cycle + name);
    }
    mark = Mark::Gray;
    stack.push_back(name);
    const LexcLexicon* lex = src.find(name);
    for (const auto& e : lex->entries) self(self, e.continuation);
    stack.pop_back();
    marks[name] = Mark::Black;
    order.push_back(lex);
  };
  visit(visit, src.root_name);
  std::reverse(order.begin(), order.end());
  return order;
}

std::string flag_name(std::size_t index, bool long_flags) {
  if (!long_flags) return std::string(1, static_cast<char>('A' + index));
  std::string name(2, 'A');
  name[0] = static_cast<char>('A' + index / 26);
  name[1] = static_cast<char>('A' + index % 26);
  return name;
}

} // namespace

CompiledLexicon compile_lexc(const LexcSource& src) {
  const auto order = topo_order(src);

  // stem strings reaching each lexicon (surfaces concatenated from Root)
  std::map<std::string, std::set<std::string>> prefixes;
  prefixes[src.root_name].insert("");
  for (const LexcLexicon* lex : order) {
    const auto& from = prefixes[lex->name];
    for (const auto& e : lex->entries) {
      if (e.continuation == "#") continue;
      auto& to = prefixes[e.continuation];
      for (const auto& p : from) to.insert(p + e.surface);
    }
  }

  // suffix class per lexicon: surfaces of its "#" entries
  struct ClassUse {
    const LexcLexicon* lex;
    std::set<std::string> suffixes; // non-empty surfaces
    bool bare = false;              // class contains the empty suffix
  };
  std::vector<ClassUse> uses;
  for (const LexcLexicon* lex : order) {
    ClassUse use{lex, {}, false};
    for (const auto& e : lex->entries) {
      if (e.continuation != "#") continue;
      if (e.surface.empty())
        use.bare = true;
      else
        use.suffixes.insert(e.surface);
    }
    if (use.bare || !use.suffixes.empty()) uses.push_back(std::move(use));
  }

  // one flag per distinct non-empty suffix set, in first-appearance order
  std::vector<std::set<std::string>> classes;
  std::map<std::set<std::string>, std::size_t> class_index;
  for (const auto& use : uses) {
    if (use.suffixes.empty()) continue;
    if (class_index.emplace(use.suffixes, classes.size()).second)
      classes.push_back(use.suffixes);
  }
  const bool long_flags = classes.size() > 26;

  // merge stems across lexicons: flags union, bare if any class allows it
  struct StemOut {
    std::set<std::string> flags;
    bool bare = false;
  };
  std::map<std::string, StemOut> stems;
  for (const auto& use : uses) {
    std::string flag;
    if (!use.suffixes.empty())
      flag = flag_name(class_index.at(use.suffixes), long_flags);
    for (const auto& p : prefixes[use.lex->name]) {
      if (p.empty()) {
        // no stem part: the suffixes themselves are whole words
        for (const auto& s : use.suffixes) stems[s].bare = true;
        continue;
      }
      auto& out = stems[p];
      if (!flag.empty()) out.flags.insert(flag);
      if (use.bare) out.bare = true;
    }
  }

  CompiledLexicon result;

  std::string dic;
  dic += std::to_string(stems.size()) + "\n";
  const std::string needs_affix = long_flags ? "!!" : "!";
  for (const auto& [stem, out] : stems) {
    dic += stem;
    if (!out.flags.empty() || !out.bare) {
      dic += "/";
      for (const auto& f : out.flags) dic += f;
      if (!out.bare) dic += needs_affix;
    }
    dic += "\n";
  }
  result.dic_text = std::move(dic);

  // TRY alphabet: every codepoint used by stems or suffixes, sorted
  std::set<char32_t> alphabet;
  for (const auto& [stem, out] : stems)
    for (char32_t cp : decode_utf8(stem)) alphabet.insert(cp);
  for (const auto& cls : classes)
    for (const auto& s : cls)
      for (char32_t cp : decode_utf8(s)) alphabet.insert(cp);

  std::string aff;
  aff += "SET UTF-8\n";
  if (!alphabet.empty()) {
    aff += "TRY ";
    for (char32_t cp : alphabet) aff += encode_utf8(cp);
    aff += "\n";
  }
  if (long_flags) aff += "FLAG long\n";

  // analysis tags kept as comments next to the rules they produced
  std::map<std::size_t, std::set<std::pair<std::string, std::string>>> tags;
  for (const auto& use : uses) {
    if (use.suffixes.empty()) continue;
    const auto idx = class_index.at(use.suffixes);
    for (const auto& e : use.lex->entries)
      if (e.continuation == "#" && !e.analysis.empty())
        tags[idx].emplace(e.analysis, e.surface.empty() ? "0" : e.surface);
  }

  for (std::size_t idx = 0; idx < classes.size(); ++idx) {
    const std::string flag = flag_name(idx, long_flags);
    aff += "\n";
    if (auto it = tags.find(idx); it != tags.end())
      for (const auto& [analysis, surface] : it->second)
        aff += "# " + analysis + ": " + surface + "\n";
    aff += "SFX " + flag + " Y " + std::to_string(classes[idx].size()) + "\n";
    for (const auto& s : classes[idx])
      aff += "SFX " + flag + " 0 " + s + " .\n";
  }
  result.aff_text = std::move(aff);
  return result;
}

} // namespace sinspell
