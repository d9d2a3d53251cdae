#include "sinspell/autofix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sinspell/text.hpp"

namespace sinspell {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

} // namespace

std::vector<RewriteRule> load_rules(std::string_view text) {
  std::vector<RewriteRule> rules;
  std::set<std::string> patterns;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    auto fields = split_tabs(raw);
    if (fields.size() != 3)
      throw ParseError(line_no,
                       "expected 'pattern TAB replacement TAB scope'");
    RewriteRule rule;
    rule.pattern = normalize(fields[0]);
    rule.replacement = normalize(fields[1]);
    if (fields[2] == "Anywhere")
      rule.scope = RuleScope::Anywhere;
    else if (fields[2] == "WholeToken")
      rule.scope = RuleScope::WholeToken;
    else
      throw ParseError(line_no, "scope must be Anywhere or WholeToken, got '" +
                                    fields[2] + "'");
    if (rule.pattern.empty())
      throw ParseError(line_no, "empty pattern");
    if (rule.pattern == rule.replacement)
      throw ParseError(line_no, "pattern equals replacement");
    if (rule.replacement.find(rule.pattern) != std::string::npos)
      throw ParseError(line_no, "self-feeding rule: replacement contains "
                                "pattern");
    if (!patterns.insert(rule.pattern).second)
      throw ParseError(line_no, "duplicate pattern '" + rule.pattern + "'");
    rules.push_back(std::move(rule));
  }
  return rules;
}

namespace {

// Trie over pattern codepoints; terminal nodes carry the rule index.
struct TrieNode {
  std::map<char32_t, std::size_t> next;
  std::ptrdiff_t rule = -1;
};

struct Trie {
  std::vector<TrieNode> nodes{TrieNode{}};

  void insert(const std::u32string& pattern, std::size_t rule_index) {
    std::size_t at = 0;
    for (char32_t cp : pattern) {
      auto it = nodes[at].next.find(cp);
      if (it == nodes[at].next.end()) {
        nodes.push_back(TrieNode{});
        it = nodes[at].next.emplace(cp, nodes.size() - 1).first;
      }
      at = it->second;
    }
    if (nodes[at].rule < 0) nodes[at].rule = static_cast<std::ptrdiff_t>(rule_index);
  }
};

} // namespace

RewriteResult apply_rules(const std::vector<RewriteRule>& rules,
                          std::string_view text) {
  RewriteResult result;
  if (rules.empty()) {
    result.text = std::string(text);
    return result;
  }

  Trie trie;
  for (std::size_t i = 0; i < rules.size(); ++i)
    trie.insert(decode_utf8(rules[i].pattern), i);

  // Word-token spans, for WholeToken applicability.
  std::set<std::pair<std::size_t, std::size_t>> word_spans;
  for (const auto& t : tokenize(text))
    if (t.kind == TokenKind::Word) word_spans.emplace(t.begin, t.end);

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

  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < cps.size()) {
    // walk the trie as far as the text matches, keep the longest applicable
    std::size_t node = 0;
    std::ptrdiff_t match_rule = -1;
    std::size_t match_len = 0;
    for (std::size_t j = i; j < cps.size(); ++j) {
      auto it = trie.nodes[node].next.find(cps[j]);
      if (it == trie.nodes[node].next.end()) break;
      node = it->second;
      const auto rule_idx = trie.nodes[node].rule;
      if (rule_idx < 0) continue;
      if (rules[rule_idx].scope == RuleScope::WholeToken &&
          !word_spans.count({offsets[i], offsets[j + 1]}))
        continue;
      match_rule = rule_idx;
      match_len = j + 1 - i;
    }
    if (match_rule < 0) {
      out += encode_utf8(cps[i]);
      ++i;
      continue;
    }
    const auto& rule = rules[match_rule];
    AppliedFix fix;
    fix.begin = offsets[i];
    fix.end = offsets[i + match_len];
    fix.before = std::string(text.substr(fix.begin, fix.end - fix.begin));
    fix.after = rule.replacement;
    fix.rule_index = static_cast<std::size_t>(match_rule);
    out += rule.replacement;
    result.fixes.push_back(std::move(fix));
    i += match_len;
  }
  result.text = std::move(out);
  return result;
}

std::string replay_fixes(std::string_view original,
                         const std::vector<AppliedFix>& fixes) {
  std::string out;
  std::size_t at = 0;
  for (const auto& fix : fixes) {
    out += original.substr(at, fix.begin - at);
    out += fix.after;
    at = fix.end;
  }
  out += original.substr(at);
  return out;
}

std::string fixes_tsv(const std::vector<AppliedFix>& fixes) {
  std::string out;
  for (const auto& fix : fixes) {
    out += std::to_string(fix.begin) + "\t" + std::to_string(fix.end) + "\t" +
           fix.before + "\t" + fix.after + "\t" +
           std::to_string(fix.rule_index) + "\n";
  }
  return out;
}

} // namespace sinspell
