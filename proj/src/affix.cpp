#include "sinspell/affix.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace sinspell {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (auto& l : lines)
    if (!l.empty() && l.back() == '\r') l.pop_back();
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok.front() == '#') break; // comment to end of line
    fields.push_back(tok);
  }
  return fields;
}

std::vector<ConditionItem> parse_condition(const std::string& text,
                                           std::size_t line_no) {
  std::vector<ConditionItem> items;
  const std::u32string cps = decode_utf8(text);
  std::size_t i = 0;
  while (i < cps.size()) {
    if (cps[i] == U'.') {
      items.push_back(ConditionItem{true, false, {}});
      ++i;
    } else if (cps[i] == U'[') {
      auto close = cps.find(U']', i);
      if (close == std::u32string::npos)
        throw ParseError(line_no, "unterminated character class in condition");
      std::u32string inner = cps.substr(i + 1, close - i - 1);
      ConditionItem item;
      if (!inner.empty() && inner.front() == U'^') {
        item.negated = true;
        inner.erase(inner.begin());
      }
      if (inner.empty())
        throw ParseError(line_no, "empty character class in condition");
      item.set = segment_lenient(inner);
      items.push_back(std::move(item));
      i = close + 1;
    } else {
      // literal run up to the next special character, one item per grapheme
      std::size_t end = i;
      while (end < cps.size() && cps[end] != U'.' && cps[end] != U'[') ++end;
      for (auto& g : segment_lenient(cps.substr(i, end - i)))
        items.push_back(ConditionItem{false, false, {std::move(g)}});
      i = end;
    }
  }
  return items;
}

bool item_matches(const ConditionItem& item, const Grapheme& g) {
  if (item.any) return true;
  const bool in_set =
      std::find(item.set.begin(), item.set.end(), g) != item.set.end();
  return item.negated ? !in_set : in_set;
}

std::string zero_to_empty(const std::string& s) { return s == "0" ? "" : s; }

// Splits a .dic flag field by the table's flag mode.
std::vector<std::string> split_flag_field(const std::string& field,
                                          bool long_flags, std::size_t line_no) {
  std::vector<std::string> flags;
  const std::u32string cps = decode_utf8(field);
  if (long_flags) {
    if (cps.size() % 2 != 0)
      throw ParseError(line_no, "odd-length flag field under FLAG long: '" +
                                    field + "'");
    for (std::size_t i = 0; i < cps.size(); i += 2)
      flags.push_back(encode_utf8(cps.substr(i, 2)));
  } else {
    for (char32_t cp : cps) flags.push_back(encode_utf8(cp));
  }
  return flags;
}

} // namespace

bool is_needs_affix_flag(const std::string& flag) {
  return flag == "!" || flag == "!!";
}

bool AffixRule::condition_matches(const std::vector<Grapheme>& base) const {
  if (condition.size() > base.size()) return false;
  const std::size_t offset =
      kind == AffixKind::Suffix ? base.size() - condition.size() : 0;
  for (std::size_t i = 0; i < condition.size(); ++i)
    if (!item_matches(condition[i], base[offset + i])) return false;
  return true;
}

AffParseResult parse_aff(std::string_view text) {
  AffParseResult result;
  AffixTable& table = result.table;

  const auto lines = split_lines(text);

  std::size_t rep_expected = 0;
  // open PFX/SFX block: flag, kind, cross, outstanding rule count
  struct OpenBlock {
    std::string flag;
    AffixKind kind;
    bool cross;
    std::size_t remaining;
    std::size_t header_line;
  };
  std::optional<OpenBlock> block;

  auto check_flag_width = [&](const std::string& flag, std::size_t line_no) {
    const auto w = decode_utf8(flag).size();
    const std::size_t want = table.long_flags ? 2 : 1;
    if (w != want)
      throw ParseError(line_no, "flag '" + flag + "' must be " +
                                    std::to_string(want) + " character(s) wide");
  };

  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    auto fields = split_fields(lines[idx]);
    if (fields.empty()) continue;
    const std::string& dir = fields[0];

    if (block && dir != (block->kind == AffixKind::Prefix ? "PFX" : "SFX"))
      throw ParseError(line_no, "expected " + std::to_string(block->remaining) +
                                    " more rule(s) for flag '" + block->flag +
                                    "' declared at line " +
                                    std::to_string(block->header_line));
    if (rep_expected > 0 && dir != "REP")
      throw ParseError(line_no, "expected " + std::to_string(rep_expected) +
                                    " more REP pair(s)");

    if (dir == "SET") {
      if (fields.size() != 2)
        throw ParseError(line_no, "SET takes one argument");
      if (fields[1] != "UTF-8")
        result.warnings.push_back("line " + std::to_string(line_no) +
                                  ": unsupported encoding '" + fields[1] +
                                  "', UTF-8 assumed");
    } else if (dir == "TRY") {
      if (fields.size() != 2)
        throw ParseError(line_no, "TRY takes one argument");
      table.alphabet = normalize(fields[1]);
    } else if (dir == "FLAG") {
      if (fields.size() != 2 || fields[1] != "long")
        throw ParseError(line_no, "only 'FLAG long' is supported");
      if (!table.rules.empty())
        throw ParseError(line_no, "FLAG must precede all PFX/SFX blocks");
      table.long_flags = true;
    } else if (dir == "REP") {
      if (rep_expected == 0) {
        if (fields.size() != 2)
          throw ParseError(line_no, "REP header takes a count");
        try {
          rep_expected = std::stoul(fields[1]);
        } catch (const std::exception&) {
          throw ParseError(line_no, "bad REP count '" + fields[1] + "'");
        }
      } else {
        if (fields.size() != 3)
          throw ParseError(line_no, "REP pair takes two arguments");
        table.replacements.emplace_back(normalize(fields[1]),
                                        normalize(fields[2]));
        --rep_expected;
      }
    } else if (dir == "PFX" || dir == "SFX") {
      const AffixKind kind = dir == "PFX" ? AffixKind::Prefix : AffixKind::Suffix;
      if (!block) {
        // header: PFX flag cross count
        if (fields.size() != 4)
          throw ParseError(line_no, dir + " header takes flag, cross-product "
                                          "and rule count");
        check_flag_width(fields[1], line_no);
        if (fields[2] != "Y" && fields[2] != "N")
          throw ParseError(line_no, "cross-product must be Y or N");
        std::size_t count = 0;
        try {
          count = std::stoul(fields[3]);
        } catch (const std::exception&) {
          throw ParseError(line_no, "bad rule count '" + fields[3] + "'");
        }
        if (count == 0) continue;
        block = OpenBlock{fields[1], kind, fields[2] == "Y", count, line_no};
      } else {
        // rule: PFX flag strip append [condition]
        if (fields.size() != 4 && fields.size() != 5)
          throw ParseError(line_no,
                           dir + " rule takes strip, append and an optional "
                                 "condition");
        if (fields[1] != block->flag || kind != block->kind)
          throw ParseError(line_no, "rule flag '" + fields[1] +
                                        "' does not match open " +
                                        (block->kind == AffixKind::Prefix
                                             ? std::string("PFX")
                                             : std::string("SFX")) +
                                        " block '" + block->flag + "'");
        AffixRule rule;
        rule.kind = kind;
        rule.flag = fields[1];
        rule.strip = normalize(zero_to_empty(fields[2]));
        rule.append = normalize(zero_to_empty(fields[3]));
        rule.condition_text = normalize(fields.size() == 5 ? fields[4] : ".");
        rule.condition = parse_condition(rule.condition_text, line_no);
        rule.cross_product = block->cross;
        table.rules[rule.flag].push_back(std::move(rule));
        if (--block->remaining == 0) block.reset();
      }
    } else {
      result.warnings.push_back("line " + std::to_string(line_no) +
                                ": unknown directive '" + dir + "' skipped");
    }
  }
  if (block)
    throw ParseError(lines.size(), "unterminated " +
                                       std::string(block->kind == AffixKind::Prefix
                                                       ? "PFX"
                                                       : "SFX") +
                                       " block for flag '" + block->flag + "'");
  if (rep_expected > 0)
    throw ParseError(lines.size(), "unterminated REP block");
  return result;
}

DicParseResult parse_dic(std::string_view text, const AffixTable& table) {
  std::map<std::string, StemEntry> entries;
  std::vector<std::string> warnings;

  const auto lines = split_lines(text);
  std::size_t first = 0;
  std::optional<std::size_t> declared;
  while (first < lines.size()) {
    const auto& l = lines[first];
    if (l.find_first_not_of(" \t") == std::string::npos) {
      ++first;
      continue;
    }
    try {
      std::size_t pos = 0;
      declared = std::stoul(l, &pos);
      if (pos != l.size()) declared.reset();
    } catch (const std::exception&) {
      declared.reset();
    }
    break;
  }
  if (!declared)
    warnings.push_back("missing entry count on first line");
  else
    ++first;

  std::size_t count = 0;
  for (std::size_t idx = first; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    std::string line = lines[idx];
    const auto beg = line.find_first_not_of(" \t");
    if (beg == std::string::npos) continue;
    const auto fin = line.find_last_not_of(" \t");
    line = line.substr(beg, fin - beg + 1);

    std::string stem_part = line, flag_part;
    if (auto slash = line.find('/'); slash != std::string::npos) {
      stem_part = line.substr(0, slash);
      flag_part = line.substr(slash + 1);
    }
    if (stem_part.empty())
      throw ParseError(line_no, "empty stem");
    const std::string stem = normalize(stem_part);
    ++count;

    StemEntry& entry = entries.try_emplace(stem, StemEntry{stem, {}}).first->second;
    for (auto& flag : split_flag_field(flag_part, table.long_flags, line_no)) {
      if (!is_needs_affix_flag(flag) && !table.rules.count(flag))
        warnings.push_back("line " + std::to_string(line_no) + ": stem '" +
                           stem + "' uses flag '" + flag +
                           "' with no rule block");
      entry.flags.insert(std::move(flag));
    }
  }
  if (declared && *declared != count)
    warnings.push_back("entry count mismatch: declared " +
                       std::to_string(*declared) + ", found " +
                       std::to_string(count));

  DicParseResult result{Dictionary(std::move(entries), table), std::move(warnings)};
  return result;
}

DicParseResult load_dictionary(std::string_view aff_text,
                               std::string_view dic_text) {
  auto aff = parse_aff(aff_text);
  auto result = parse_dic(dic_text, aff.table);
  result.warnings.insert(result.warnings.begin(),
                         std::make_move_iterator(aff.warnings.begin()),
                         std::make_move_iterator(aff.warnings.end()));
  return result;
}

// ---------------------------------------------------------------------------
// Dictionary

Dictionary::Dictionary(std::map<std::string, StemEntry> entries, AffixTable table)
    : entries_(std::move(entries)), table_(std::move(table)) {
  rebuild_indexes();
}

void Dictionary::set_negative_infix(std::string_view infix) {
  negative_infix_ = normalize(decode_utf8(infix));
}

void Dictionary::rebuild_indexes() {
  suffix_by_append_.clear();
  prefix_by_append_.clear();
  max_suffix_append_ = 0;
  max_prefix_append_ = 0;

  std::set<Grapheme> inventory;
  auto harvest = [&](std::string_view s) {
    for (auto& g : segment_lenient(decode_utf8(s))) inventory.insert(std::move(g));
  };

  for (const auto& [flag, rules] : table_.rules) {
    for (const auto& rule : rules) {
      const std::u32string append = decode_utf8(rule.append);
      if (rule.kind == AffixKind::Suffix) {
        suffix_by_append_[append].push_back(RuleRef{&rule});
        max_suffix_append_ = std::max(max_suffix_append_, append.size());
      } else {
        prefix_by_append_[append].push_back(RuleRef{&rule});
        max_prefix_append_ = std::max(max_prefix_append_, append.size());
      }
      harvest(rule.append);
    }
  }
  for (const auto& [stem, entry] : entries_) harvest(stem);
  harvest(table_.alphabet);
  alphabet_.assign(inventory.begin(), inventory.end());
}

bool Dictionary::valid_bare(const StemEntry& e) const {
  return std::none_of(e.flags.begin(), e.flags.end(), is_needs_affix_flag);
}

namespace {

bool ends_with(const std::u32string& s, const std::u32string& tail) {
  return s.size() >= tail.size() &&
         s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

bool starts_with(const std::u32string& s, const std::u32string& head) {
  return s.size() >= head.size() && s.compare(0, head.size(), head) == 0;
}

} // namespace

std::optional<Analysis> Dictionary::analyze_no_infix(
    const std::u32string& word) const {
  if (word.empty()) return std::nullopt;
  const std::string word_utf8 = encode_utf8(word);

  // bare stem
  if (auto it = entries_.find(word_utf8);
      it != entries_.end() && valid_bare(it->second))
    return Analysis{word_utf8, std::nullopt, std::nullopt, std::nullopt};

  // stem + one suffix
  for (std::size_t len = 0; len <= std::min(max_suffix_append_, word.size());
       ++len) {
    const std::u32string tail = word.substr(word.size() - len);
    auto hit = suffix_by_append_.find(tail);
    if (hit == suffix_by_append_.end()) continue;
    const std::u32string base = word.substr(0, word.size() - len);
    for (const auto& ref : hit->second) {
      const AffixRule& r = *ref.rule;
      const std::string stem = encode_utf8(base) + r.strip;
      auto it = entries_.find(stem);
      if (it == entries_.end() || !it->second.flags.count(r.flag)) continue;
      if (!r.condition_matches(segment_lenient(base))) continue;
      return Analysis{stem, std::nullopt, r, std::nullopt};
    }
  }

  // one prefix + stem
  for (std::size_t len = 0; len <= std::min(max_prefix_append_, word.size());
       ++len) {
    const std::u32string head = word.substr(0, len);
    auto hit = prefix_by_append_.find(head);
    if (hit == prefix_by_append_.end()) continue;
    const std::u32string base = word.substr(len);
    for (const auto& ref : hit->second) {
      const AffixRule& r = *ref.rule;
      const std::string stem = r.strip + encode_utf8(base);
      auto it = entries_.find(stem);
      if (it == entries_.end() || !it->second.flags.count(r.flag)) continue;
      if (!r.condition_matches(segment_lenient(base))) continue;
      return Analysis{stem, r, std::nullopt, std::nullopt};
    }
  }

  // prefix + stem + suffix, both rules cross-product
  for (std::size_t plen = 0;
       plen <= std::min(max_prefix_append_, word.size()); ++plen) {
    const std::u32string head = word.substr(0, plen);
    auto phit = prefix_by_append_.find(head);
    if (phit == prefix_by_append_.end()) continue;
    for (std::size_t slen = 0;
         slen <= std::min(max_suffix_append_, word.size() - plen); ++slen) {
      const std::u32string tail = word.substr(word.size() - slen);
      auto shit = suffix_by_append_.find(tail);
      if (shit == suffix_by_append_.end()) continue;
      const std::u32string middle =
          word.substr(plen, word.size() - plen - slen);
      for (const auto& pref : phit->second) {
        const AffixRule& p = *pref.rule;
        if (!p.cross_product) continue;
        const std::u32string pstrip = decode_utf8(p.strip);
        for (const auto& sref : shit->second) {
          const AffixRule& s = *sref.rule;
          if (!s.cross_product) continue;
          const std::u32string sstrip = decode_utf8(s.strip);
          const std::string stem =
              p.strip + encode_utf8(middle) + s.strip;
          auto it = entries_.find(stem);
          if (it == entries_.end() || !it->second.flags.count(p.flag) ||
              !it->second.flags.count(s.flag))
            continue;
          if (!p.condition_matches(segment_lenient(middle + sstrip))) continue;
          if (!s.condition_matches(segment_lenient(pstrip + middle))) continue;
          return Analysis{stem, p, s, std::nullopt};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Analysis> Dictionary::analyze(std::string_view word) const {
  const std::u32string w = normalize(decode_utf8(word));
  if (auto a = analyze_no_infix(w)) return a;

  // negative infix: delete one internal occurrence and retry (no recursion)
  const auto& infix = negative_infix_;
  if (infix.empty() || w.size() <= infix.size()) return std::nullopt;
  for (std::size_t i = 1; i + infix.size() + 1 <= w.size(); ++i) {
    if (w.compare(i, infix.size(), infix) != 0) continue;
    std::u32string shorter = w.substr(0, i) + w.substr(i + infix.size());
    // a deletion seam that re-composes under canonical normalization means
    // the remainder is not a writable word form; skip such occurrences
    if (normalize(shorter) != shorter) continue;
    if (auto a = analyze_no_infix(shorter)) {
      a->infix_at = i;
      return a;
    }
  }
  return std::nullopt;
}

bool Dictionary::recognize(std::string_view word) const {
  return analyze(word).has_value();
}

std::set<std::string> Dictionary::expand_all(std::size_t limit) const {
  std::set<std::string> out;
  // surfaces are raw concatenations; forms that are not canonically stable
  // can never arrive as normalized input, so they are not words
  auto add = [&](std::string word) {
    const std::u32string cps = decode_utf8(word);
    if (normalize(cps) != cps) return;
    out.insert(std::move(word));
    if (out.size() > limit) throw ExpandLimitError(limit, out.size());
  };

  for (const auto& [stem_utf8, entry] : entries_) {
    const std::u32string stem = decode_utf8(stem_utf8);

    if (valid_bare(entry)) add(stem_utf8);

    // collect this entry's applicable rules once
    std::vector<const AffixRule*> prefixes, suffixes;
    for (const auto& flag : entry.flags) {
      auto it = table_.rules.find(flag);
      if (it == table_.rules.end()) continue;
      for (const auto& r : it->second)
        (r.kind == AffixKind::Prefix ? prefixes : suffixes).push_back(&r);
    }

    struct Applied {
      const AffixRule* rule;
      std::u32string base; // stem minus strip
    };
    std::vector<Applied> ok_prefixes, ok_suffixes;
    for (const AffixRule* r : suffixes) {
      const std::u32string strip = decode_utf8(r->strip);
      if (!ends_with(stem, strip)) continue;
      std::u32string base = stem.substr(0, stem.size() - strip.size());
      if (!r->condition_matches(segment_lenient(base))) continue;
      add(encode_utf8(base) + r->append);
      ok_suffixes.push_back(Applied{r, std::move(base)});
    }
    for (const AffixRule* r : prefixes) {
      const std::u32string strip = decode_utf8(r->strip);
      if (!starts_with(stem, strip)) continue;
      std::u32string base = stem.substr(strip.size());
      if (!r->condition_matches(segment_lenient(base))) continue;
      add(r->append + encode_utf8(base));
      ok_prefixes.push_back(Applied{r, std::move(base)});
    }
    for (const auto& p : ok_prefixes) {
      if (!p.rule->cross_product) continue;
      const std::u32string pstrip = decode_utf8(p.rule->strip);
      for (const auto& s : ok_suffixes) {
        if (!s.rule->cross_product) continue;
        const std::u32string sstrip = decode_utf8(s.rule->strip);
        if (stem.size() < pstrip.size() + sstrip.size()) continue;
        const std::u32string middle =
            stem.substr(pstrip.size(), stem.size() - pstrip.size() - sstrip.size());
        add(p.rule->append + encode_utf8(middle) + s.rule->append);
      }
    }
  }

  // negative infix: every internal insertion point of every accepted word
  if (!negative_infix_.empty()) {
    const std::vector<std::string> base(out.begin(), out.end());
    const std::string infix_utf8 = encode_utf8(negative_infix_);
    for (const auto& word : base) {
      const std::u32string w = decode_utf8(word);
      for (std::size_t p = 1; p < w.size(); ++p)
        add(encode_utf8(w.substr(0, p)) + infix_utf8 + encode_utf8(w.substr(p)));
    }
  }
  return out;
}

} // namespace sinspell
