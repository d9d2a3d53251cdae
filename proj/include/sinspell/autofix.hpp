#pragma once

// Deterministic rewriting of evident errors: an ordered rule list compiled
// into a pattern trie, applied in a single left-to-right, leftmost-longest,
// non-overlapping pass. Every replacement is recorded so the rewrite can be
// audited and replayed.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sinspell/errors.hpp"

namespace sinspell {

enum class RuleScope { Anywhere, WholeToken };

struct RewriteRule {
  std::string pattern;     // non-empty literal, != replacement
  std::string replacement; // must not contain the pattern
  RuleScope scope = RuleScope::Anywhere;
};

// One rule per line, "pattern TAB replacement TAB scope"; "#" lines are
// comments. Load fails on an empty pattern, a rule that rewrites to itself,
// a self-feeding rule (replacement contains the pattern — the single-pass
// idempotence guarantee), or a duplicate pattern.
std::vector<RewriteRule> load_rules(std::string_view text);

struct AppliedFix {
  std::size_t begin = 0; // byte span in the original text
  std::size_t end = 0;
  std::string before;
  std::string after;
  std::size_t rule_index = 0;
};

struct RewriteResult {
  std::string text;
  std::vector<AppliedFix> fixes; // spans non-overlapping, increasing
};

// Single pass over `text`: at each position the longest matching pattern
// applies (rule order breaks ties); WholeToken rules fire only when the
// match spans an entire Word token; matches never overlap.
RewriteResult apply_rules(const std::vector<RewriteRule>& rules,
                          std::string_view text);

// Reconstructs the rewritten text from the original plus the audit list.
std::string replay_fixes(std::string_view original,
                         const std::vector<AppliedFix>& fixes);

// Serializes fixes as TSV: begin, end, before, after, rule index.
std::string fixes_tsv(const std::vector<AppliedFix>& fixes);

} // namespace sinspell
