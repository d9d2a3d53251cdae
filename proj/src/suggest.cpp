#include "sinspell/suggest.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

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

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

} // namespace

ConfusionTable::ConfusionTable(std::vector<ConfusionSet> sets)
    : sets_(std::move(sets)) {
  for (const auto& set : sets_) {
    std::vector<std::u32string> singles;
    for (const auto& m : set.members) {
      auto gs = segment_lenient(decode_utf8(m));
      if (gs.size() == 1) singles.push_back(gs[0].cps);
    }
    for (const auto& a : singles)
      for (const auto& b : singles) {
        if (a == b) continue;
        auto key = std::make_pair(a, b);
        auto it = pair_weights_.find(key);
        if (it == pair_weights_.end() || it->second > set.weight)
          pair_weights_[key] = set.weight;
      }
  }
}

double ConfusionTable::substitution_weight(const Grapheme& a,
                                           const Grapheme& b) const {
  if (a == b) return 0.0;
  auto it = pair_weights_.find(std::make_pair(a.cps, b.cps));
  return it == pair_weights_.end() ? kEditCost : it->second;
}

ConfusionTable parse_confusions(std::string_view text) {
  std::vector<ConfusionSet> sets;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(raw);
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() < 3)
      throw ParseError(line_no, "confusion set needs a weight and at least "
                                "two members");
    ConfusionSet set;
    try {
      set.weight = std::stod(fields[0]);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad weight '" + fields[0] + "'");
    }
    if (set.weight < 0.0 || set.weight >= kEditCost)
      throw ParseError(line_no, "weight must be in [0, " +
                                    std::to_string(kEditCost) + ")");
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (fields[i].empty()) continue;
      std::string member = normalize(fields[i]);
      if (std::find(set.members.begin(), set.members.end(), member) ==
          set.members.end())
        set.members.push_back(std::move(member));
    }
    if (set.members.size() < 2)
      throw ParseError(line_no, "confusion set needs at least two distinct "
                                "members");
    sets.push_back(std::move(set));
  }
  return ConfusionTable(std::move(sets));
}

FrequencyTable parse_frequencies(std::string_view text) {
  FrequencyTable out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_cr(raw);
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2)
      throw ParseError(line_no, "expected 'word TAB count'");
    try {
      out[normalize(fields[0])] += std::stoull(fields[1]);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad count '" + fields[1] + "'");
    }
  }
  return out;
}

const char* to_string(SuggestionSource source) {
  switch (source) {
    case SuggestionSource::Confusion: return "confusion";
    case SuggestionSource::Edit1: return "edit1";
    case SuggestionSource::Edit2: return "edit2";
    case SuggestionSource::Split: return "split";
    case SuggestionSource::ReplacementTable: return "replacement";
  }
  return "?";
}

double edit_cost(const ConfusionTable& confusions,
                 const std::vector<Grapheme>& a,
                 const std::vector<Grapheme>& b) {
  const std::size_t m = a.size(), n = b.size();
  std::vector<std::vector<double>> d(m + 1, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 1; i <= m; ++i) d[i][0] = static_cast<double>(i);
  for (std::size_t j = 1; j <= n; ++j) d[0][j] = static_cast<double>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      double best = d[i - 1][j - 1] + confusions.substitution_weight(a[i - 1], b[j - 1]);
      best = std::min(best, d[i - 1][j] + kEditCost);
      best = std::min(best, d[i][j - 1] + kEditCost);
      if (i > 1 && j > 1 && a[i - 2] == b[j - 1] && a[i - 1] == b[j - 2])
        best = std::min(best, d[i - 2][j - 2] + kEditCost); // transposition
      d[i][j] = best;
    }
  }
  return d[m][n];
}

namespace {

using Graphemes = std::vector<Grapheme>;

std::string slice(const Graphemes& gs, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) out += gs[i].utf8();
  return out;
}

// All strings one grapheme edit away: deletions, adjacent transpositions,
// substitutions and insertions from `alphabet`, in that fixed order.
template <typename Fn>
void for_each_edit1(const Graphemes& gs, const std::vector<Grapheme>& alphabet,
                    Fn&& fn) {
  const std::size_t n = gs.size();
  for (std::size_t i = 0; i < n; ++i)
    fn(slice(gs, 0, i) + slice(gs, i + 1, n));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (gs[i] == gs[i + 1]) continue;
    fn(slice(gs, 0, i) + gs[i + 1].utf8() + gs[i].utf8() + slice(gs, i + 2, n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::string head = slice(gs, 0, i), tail = slice(gs, i + 1, n);
    for (const auto& g : alphabet) {
      if (g == gs[i]) continue;
      fn(head + g.utf8() + tail);
    }
  }
  for (std::size_t i = 0; i <= n; ++i) {
    const std::string head = slice(gs, 0, i), tail = slice(gs, i, n);
    for (const auto& g : alphabet) fn(head + g.utf8() + tail);
  }
}

} // namespace

std::vector<Suggestion> generate(const Dictionary& dict,
                                 const ConfusionTable& confusions,
                                 std::string_view word, std::size_t k,
                                 const FrequencyTable* frequencies) {
  const std::string norm = normalize(word);
  if (norm.empty() || dict.recognize(norm)) return {};

  const Graphemes gs = segment_lenient(decode_utf8(norm));
  const std::size_t n = gs.size();

  std::map<std::string, Suggestion> best; // keyed by candidate
  auto add = [&](std::string candidate, double cost, SuggestionSource source) {
    if (candidate.empty() || candidate == norm) return;
    auto [it, inserted] =
        best.try_emplace(candidate, Suggestion{candidate, cost, source});
    if (!inserted && cost < it->second.cost) {
      it->second.cost = cost;
      it->second.source = source;
    }
  };

  // (a) confusion-set substitutions
  for (const auto& set : confusions.sets()) {
    for (const auto& member : set.members) {
      const Graphemes mg = segment_lenient(decode_utf8(member));
      if (mg.empty() || mg.size() > n) continue;
      for (std::size_t i = 0; i + mg.size() <= n; ++i) {
        if (!std::equal(mg.begin(), mg.end(), gs.begin() + i)) continue;
        for (const auto& other : set.members) {
          if (other == member) continue;
          std::string candidate =
              slice(gs, 0, i) + other + slice(gs, i + mg.size(), n);
          if (dict.recognize(candidate))
            add(std::move(candidate), set.weight, SuggestionSource::Confusion);
        }
      }
    }
  }

  // (b) replacement-table rewrites, each occurrence separately
  for (const auto& [from, to] : dict.table().replacements) {
    if (from.empty()) continue;
    for (std::size_t pos = norm.find(from); pos != std::string::npos;
         pos = norm.find(from, pos + 1)) {
      std::string candidate =
          norm.substr(0, pos) + to + norm.substr(pos + from.size());
      if (dict.recognize(candidate))
        add(std::move(candidate), kReplacementCost,
            SuggestionSource::ReplacementTable);
    }
  }

  // (c) splits at grapheme boundaries, both halves must be words
  for (std::size_t i = 1; i < n; ++i) {
    const std::string left = slice(gs, 0, i), right = slice(gs, i, n);
    if (dict.recognize(left) && dict.recognize(right))
      add(left + " " + right, kSplitCost, SuggestionSource::Split);
  }

  // (d) single grapheme edits over the dictionary alphabet
  const auto& alphabet = dict.alphabet_graphemes();
  for_each_edit1(gs, alphabet, [&](std::string candidate) {
    if (dict.recognize(candidate))
      add(std::move(candidate), kEditCost, SuggestionSource::Edit1);
  });

  // (e) double edits, only as a last resort and within a fixed probe budget
  const bool have_cheap = std::any_of(
      best.begin(), best.end(),
      [](const auto& kv) { return kv.second.cost < kEdit2Gate; });
  if (!have_cheap) {
    std::vector<std::string> first_round;
    std::unordered_set<std::string> seen{norm};
    for_each_edit1(gs, alphabet, [&](std::string candidate) {
      if (seen.insert(candidate).second) first_round.push_back(std::move(candidate));
    });
    std::size_t probes = 0;
    for (const auto& base : first_round) {
      if (probes >= kEdit2Budget) break;
      const Graphemes bg = segment_lenient(decode_utf8(base));
      for_each_edit1(bg, alphabet, [&](std::string candidate) {
        if (probes >= kEdit2Budget) return;
        if (!seen.insert(candidate).second) return;
        ++probes;
        if (dict.recognize(candidate))
          add(std::move(candidate), kEdit2Cost, SuggestionSource::Edit2);
      });
    }
  }

  std::vector<Suggestion> out;
  out.reserve(best.size());
  for (auto& [candidate, s] : best) out.push_back(std::move(s));
  auto freq_of = [&](const std::string& w) -> std::uint64_t {
    if (!frequencies) return 0;
    auto it = frequencies->find(w);
    return it == frequencies->end() ? 0 : it->second;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const Suggestion& a, const Suggestion& b) {
                     if (a.cost != b.cost) return a.cost < b.cost;
                     const auto fa = freq_of(a.candidate), fb = freq_of(b.candidate);
                     if (fa != fb) return fa > fb;
                     return a.candidate < b.candidate;
                   });
  if (out.size() > k) out.resize(k);
  return out;
}

std::optional<Suggestion> suggest_join(const Dictionary& dict,
                                       const Token& first, const Token& second) {
  static const std::vector<std::string> kBoundSuffixes = {
      "වල",                         // වල
      "වලට",                   // වලට
      "වලින්",       // වලින්
  };
  if (first.kind != TokenKind::Word || second.kind != TokenKind::Word)
    return std::nullopt;
  const std::string left = normalize(first.surface);
  const std::string right = normalize(second.surface);
  const std::string joined = left + right;
  if (!dict.recognize(joined)) return std::nullopt;
  const bool suspect_half = !dict.recognize(left) || !dict.recognize(right);
  const bool bound = std::find(kBoundSuffixes.begin(), kBoundSuffixes.end(),
                               right) != kBoundSuffixes.end();
  if (!suspect_half && !bound) return std::nullopt;
  return Suggestion{joined, kSplitCost, SuggestionSource::Split};
}

} // namespace sinspell
