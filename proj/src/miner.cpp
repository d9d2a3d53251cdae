#include "sinspell/miner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace sinspell {

const char* to_string(EditClass c) {
  switch (c) {
    case EditClass::Insertion: return "Insertion";
    case EditClass::Deletion: return "Deletion";
    case EditClass::Substitution: return "Substitution";
    case EditClass::Split: return "Split";
    case EditClass::Join: return "Join";
  }
  return "?";
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  const std::u32string cps = decode_utf8(text);
  std::u32string current;
  auto flush = [&] {
    std::size_t b = 0, e = current.size();
    while (b < e && is_space_char(current[b])) ++b;
    while (e > b && is_space_char(current[e - 1])) --e;
    if (e > b) out.push_back(encode_utf8(current.substr(b, e - b)));
    current.clear();
  };
  for (char32_t cp : cps) {
    if (cp == U'.' || cp == U'?' || cp == U'!' || cp == U'।' ||
        cp == U'\n')
      flush();
    else
      current.push_back(cp);
  }
  flush();
  return out;
}

namespace {

struct SentenceInfo {
  std::string text;
  std::size_t length = 0;           // codepoints
  std::set<std::string> anchors;    // word tokens of >= 3 graphemes
};

SentenceInfo sentence_info(std::string text) {
  SentenceInfo info;
  info.length = decode_utf8(text).size();
  for (const auto& t : tokenize(text)) {
    if (t.kind != TokenKind::Word) continue;
    if (segment_lenient(decode_utf8(t.surface)).size() >= 3)
      info.anchors.insert(t.surface);
  }
  info.text = std::move(text);
  return info;
}

double shared_anchors(const SentenceInfo& a, const SentenceInfo& b) {
  std::size_t shared = 0;
  for (const auto& t : a.anchors) shared += b.anchors.count(t);
  return static_cast<double>(shared);
}

double length_cost(std::size_t a, std::size_t b) {
  return std::fabs(std::log((static_cast<double>(a) + 1.0) /
                            (static_cast<double>(b) + 1.0)));
}

std::string join_sentences(const std::vector<SentenceInfo>& v, std::size_t from,
                           std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += " ";
    out += v[from + i].text;
  }
  return out;
}

} // namespace

std::vector<SentencePair> align(std::string_view original_doc,
                                std::string_view corrected_doc) {
  std::vector<SentenceInfo> orig, corr;
  for (auto& s : split_sentences(normalize(original_doc)))
    orig.push_back(sentence_info(std::move(s)));
  for (auto& s : split_sentences(normalize(corrected_doc)))
    corr.push_back(sentence_info(std::move(s)));
  if (orig.empty()) throw AlignError("original document has no sentences");
  if (corr.empty()) throw AlignError("corrected document has no sentences");

  const std::size_t m = orig.size(), n = corr.size();
  constexpr double kMergePenalty = 1.0;
  const double neg_inf = -std::numeric_limits<double>::infinity();

  // bead score: shared anchors minus length-ratio cost minus merge penalty
  auto score11 = [&](std::size_t i, std::size_t j) {
    return shared_anchors(orig[i], corr[j]) -
           length_cost(orig[i].length, corr[j].length);
  };
  auto score12 = [&](std::size_t i, std::size_t j) {
    SentenceInfo merged = sentence_info(join_sentences(corr, j, 2));
    return shared_anchors(orig[i], merged) -
           length_cost(orig[i].length, merged.length) - kMergePenalty;
  };
  auto score21 = [&](std::size_t i, std::size_t j) {
    SentenceInfo merged = sentence_info(join_sentences(orig, i, 2));
    return shared_anchors(merged, corr[j]) -
           length_cost(merged.length, corr[j].length) - kMergePenalty;
  };

  std::vector<std::vector<double>> best(m + 1,
                                        std::vector<double>(n + 1, neg_inf));
  std::vector<std::vector<int>> choice(m + 1, std::vector<int>(n + 1, -1));
  best[0][0] = 0.0;
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (best[i][j] == neg_inf) continue;
      if (i < m && j < n) {
        const double s = best[i][j] + score11(i, j);
        if (s > best[i + 1][j + 1]) {
          best[i + 1][j + 1] = s;
          choice[i + 1][j + 1] = 0;
        }
      }
      if (i < m && j + 1 < n) {
        const double s = best[i][j] + score12(i, j);
        if (s > best[i + 1][j + 2]) {
          best[i + 1][j + 2] = s;
          choice[i + 1][j + 2] = 1;
        }
      }
      if (i + 1 < m && j < n) {
        const double s = best[i][j] + score21(i, j);
        if (s > best[i + 2][j + 1]) {
          best[i + 2][j + 1] = s;
          choice[i + 2][j + 1] = 2;
        }
      }
    }
  }
  if (best[m][n] == neg_inf)
    throw AlignError("sentence counts " + std::to_string(m) + " vs " +
                     std::to_string(n) +
                     " cannot be aligned with 1:1, 1:2, 2:1 beads");

  std::vector<SentencePair> beads;
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    SentencePair pair;
    switch (choice[i][j]) {
      case 0:
        pair = {orig[i - 1].text, corr[j - 1].text, score11(i - 1, j - 1)};
        i -= 1;
        j -= 1;
        break;
      case 1:
        pair = {orig[i - 1].text, join_sentences(corr, j - 2, 2),
                score12(i - 1, j - 2)};
        i -= 1;
        j -= 2;
        break;
      default:
        pair = {join_sentences(orig, i - 2, 2), corr[j - 1].text,
                score21(i - 2, j - 1)};
        i -= 2;
        j -= 1;
        break;
    }
    beads.push_back(std::move(pair));
  }
  std::reverse(beads.begin(), beads.end());
  return beads;
}

// ---------------------------------------------------------------------------
// diff

namespace {

using Graphemes = std::vector<Grapheme>;

Graphemes graphemes_of(const std::string& s) {
  return segment_lenient(decode_utf8(s));
}

std::size_t unit_distance(const Graphemes& a, const Graphemes& b) {
  const std::size_t m = a.size(), n = b.size();
  std::vector<std::size_t> prev(n + 1), cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1,
                         prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

} // namespace

std::vector<EditOp> edit_script(const std::string& from, const std::string& to) {
  const Graphemes a = graphemes_of(from), b = graphemes_of(to);
  const std::size_t m = a.size(), n = b.size();
  std::vector<std::vector<std::size_t>> d(m + 1,
                                          std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = 0; i <= m; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= n; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});

  std::vector<EditOp> ops;
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        d[i][j] == d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)) {
      if (!(a[i - 1] == b[j - 1]))
        ops.push_back({EditOp::Kind::Substitute, a[i - 1].utf8(), b[j - 1].utf8()});
      --i;
      --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      ops.push_back({EditOp::Kind::Delete, a[i - 1].utf8(), ""});
      --i;
    } else {
      ops.push_back({EditOp::Kind::Insert, "", b[j - 1].utf8()});
      --j;
    }
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

namespace {

// substitution vs unrelated-token threshold
bool related_tokens(const std::string& w, const std::string& c,
                    std::size_t* distance_out = nullptr) {
  const Graphemes a = graphemes_of(w), b = graphemes_of(c);
  const std::size_t dist = unit_distance(a, b);
  if (distance_out) *distance_out = dist;
  const double longer = static_cast<double>(std::max(a.size(), b.size()));
  return static_cast<double>(dist) <= std::max(3.0, 0.4 * longer);
}

void emit_substitution(const std::string& wrong, const std::string& corrected,
                       const std::string& script_target,
                       std::vector<ErrorRecord>& out) {
  if (!related_tokens(wrong, script_target)) {
    out.push_back({wrong, "", EditClass::Deletion, std::nullopt});
    out.push_back({"", corrected, EditClass::Insertion, std::nullopt});
    return;
  }
  ErrorRecord rec{wrong, corrected, EditClass::Substitution,
                  edit_script(wrong, script_target)};
  out.push_back(std::move(rec));
}

// Decomposes an irregular (m x n) change region into 1:1 / 1:0 / 0:1 /
// 1:2 / 2:1 beads minimizing grapheme edit cost, then classifies each bead.
void decompose_region(const std::vector<std::string>& w,
                      const std::vector<std::string>& c,
                      std::vector<ErrorRecord>& out);

void emit_region(const std::vector<std::string>& w,
                 const std::vector<std::string>& c,
                 std::vector<ErrorRecord>& out) {
  if (w.empty()) {
    for (const auto& t : c)
      out.push_back({"", t, EditClass::Insertion, std::nullopt});
    return;
  }
  if (c.empty()) {
    for (const auto& t : w)
      out.push_back({t, "", EditClass::Deletion, std::nullopt});
    return;
  }
  if (w.size() == 1 && c.size() == 1) {
    emit_substitution(w[0], c[0], c[0], out);
    return;
  }
  if (w.size() == 1 && c.size() == 2) {
    if (c[0] + c[1] == w[0]) {
      out.push_back({w[0], c[0] + " " + c[1], EditClass::Split, std::nullopt});
      return;
    }
    emit_substitution(w[0], c[0] + " " + c[1], c[0] + c[1], out);
    return;
  }
  if (w.size() == 2 && c.size() == 1) {
    if (w[0] + w[1] == c[0]) {
      out.push_back({w[0] + " " + w[1], c[0], EditClass::Join, std::nullopt});
      return;
    }
    emit_substitution(w[0] + " " + w[1], c[0], c[0], out);
    return;
  }
  decompose_region(w, c, out);
}

void decompose_region(const std::vector<std::string>& w,
                      const std::vector<std::string>& c,
                      std::vector<ErrorRecord>& out) {
  const std::size_t m = w.size(), n = c.size();
  std::vector<Graphemes> wg(m), cg(n);
  for (std::size_t i = 0; i < m; ++i) wg[i] = graphemes_of(w[i]);
  for (std::size_t j = 0; j < n; ++j) cg[j] = graphemes_of(c[j]);

  constexpr double kShapePenalty = 0.25; // prefer plain 1:1 beads on ties
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> best(m + 1, std::vector<double>(n + 1, inf));
  std::vector<std::vector<int>> choice(m + 1, std::vector<int>(n + 1, -1));
  best[0][0] = 0.0;
  auto concat = [](const Graphemes& a, const Graphemes& b) {
    Graphemes out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  };
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (best[i][j] == inf) continue;
      auto relax = [&](std::size_t di, std::size_t dj, double cost, int kind) {
        if (i + di > m || j + dj > n) return;
        const double s = best[i][j] + cost;
        if (s < best[i + di][j + dj]) {
          best[i + di][j + dj] = s;
          choice[i + di][j + dj] = kind;
        }
      };
      if (i < m && j < n)
        relax(1, 1, static_cast<double>(unit_distance(wg[i], cg[j])), 0);
      if (i < m)
        relax(1, 0, static_cast<double>(wg[i].size()), 1);
      if (j < n)
        relax(0, 1, static_cast<double>(cg[j].size()), 2);
      if (i < m && j + 1 < n)
        relax(1, 2,
              static_cast<double>(unit_distance(wg[i], concat(cg[j], cg[j + 1]))) +
                  kShapePenalty,
              3);
      if (i + 1 < m && j < n)
        relax(2, 1,
              static_cast<double>(unit_distance(concat(wg[i], wg[i + 1]), cg[j])) +
                  kShapePenalty,
              4);
    }
  }

  // backtrace into bead list, then classify beads left to right
  struct Bead {
    int kind;
    std::size_t i, j;
  };
  std::vector<Bead> beads;
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    const int kind = choice[i][j];
    switch (kind) {
      case 0: i -= 1; j -= 1; break;
      case 1: i -= 1; break;
      case 2: j -= 1; break;
      case 3: i -= 1; j -= 2; break;
      default: i -= 2; j -= 1; break;
    }
    beads.push_back({kind, i, j});
  }
  std::reverse(beads.begin(), beads.end());
  for (const auto& bead : beads) {
    switch (bead.kind) {
      case 0:
        emit_region({w[bead.i]}, {c[bead.j]}, out);
        break;
      case 1:
        emit_region({w[bead.i]}, {}, out);
        break;
      case 2:
        emit_region({}, {c[bead.j]}, out);
        break;
      case 3:
        emit_region({w[bead.i]}, {c[bead.j], c[bead.j + 1]}, out);
        break;
      default:
        emit_region({w[bead.i], w[bead.i + 1]}, {c[bead.j]}, out);
        break;
    }
  }
}

} // namespace

std::vector<ErrorRecord> diff(const SentencePair& pair) {
  // word/number tokens only: punctuation (the hyphen in split forms
  // especially) must not block split/join detection
  std::vector<std::string> w, c;
  for (const auto& t : tokenize(pair.original))
    if (t.kind == TokenKind::Word || t.kind == TokenKind::Number)
      w.push_back(normalize(t.surface));
  for (const auto& t : tokenize(pair.corrected))
    if (t.kind == TokenKind::Word || t.kind == TokenKind::Number)
      c.push_back(normalize(t.surface));

  // token LCS
  const std::size_t m = w.size(), n = c.size();
  std::vector<std::vector<std::size_t>> lcs(m + 1,
                                            std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = m; i-- > 0;)
    for (std::size_t j = n; j-- > 0;)
      lcs[i][j] = w[i] == c[j] ? lcs[i + 1][j + 1] + 1
                               : std::max(lcs[i + 1][j], lcs[i][j + 1]);

  std::vector<ErrorRecord> out;
  std::size_t i = 0, j = 0, ri = 0, rj = 0;
  auto flush_region = [&] {
    if (ri == i && rj == j) return;
    emit_region({w.begin() + ri, w.begin() + i}, {c.begin() + rj, c.begin() + j},
                out);
  };
  while (i < m && j < n) {
    if (w[i] == c[j]) {
      flush_region();
      ++i;
      ++j;
      ri = i;
      rj = j;
    } else if (lcs[i + 1][j] >= lcs[i][j + 1]) {
      ++i;
    } else {
      ++j;
    }
  }
  i = m;
  j = n;
  flush_region();
  return out;
}

std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>>
confusion_stats(const std::vector<ErrorRecord>& records) {
  std::map<std::pair<std::string, std::string>, std::size_t> counts;
  for (const auto& rec : records) {
    if (rec.edit_class != EditClass::Substitution) continue;
    const std::vector<EditOp> ops =
        rec.detail ? *rec.detail : edit_script(rec.wrong, rec.corrected);
    for (const auto& op : ops)
      if (op.kind == EditOp::Kind::Substitute)
        ++counts[{op.from, op.to}];
  }
  std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>> out(
      counts.begin(), counts.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

std::string render_script(const std::vector<EditOp>& ops) {
  std::string out;
  for (const auto& op : ops) {
    if (!out.empty()) out += ",";
    switch (op.kind) {
      case EditOp::Kind::Substitute: out += op.from + "→" + op.to; break;
      case EditOp::Kind::Insert: out += "+" + op.to; break;
      case EditOp::Kind::Delete: out += "-" + op.from; break;
    }
  }
  return out;
}

std::string records_tsv(const std::vector<ErrorRecord>& records) {
  std::string out;
  for (const auto& rec : records) {
    out += rec.wrong + "\t" + rec.corrected + "\t" + to_string(rec.edit_class) +
           "\t" + (rec.detail ? render_script(*rec.detail) : "") + "\n";
  }
  return out;
}

std::string stats_tsv(
    const std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>>&
        stats) {
  std::string out;
  for (const auto& [pair, count] : stats)
    out += pair.first + "\t" + pair.second + "\t" + std::to_string(count) + "\n";
  return out;
}

} // namespace sinspell
