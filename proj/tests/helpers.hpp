#pragma once

// Shared test utilities: fixture paths, temp files, random Sinhala text and
// random dictionary generation, and a subprocess runner for CLI tests.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sinspell/text.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(SINSPELL_DATA_DIR) + "/" + name;
}

inline std::string cli_path() { return SINSPELL_CLI_PATH; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class TempDir {
public:
  TempDir() {
    auto base = std::filesystem::temp_directory_path();
    for (int i = 0; i < 1000; ++i) {
      auto candidate = base / ("sinspell_test_" + std::to_string(std::rand()) +
                               "_" + std::to_string(i));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("cannot create temp dir");
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name, const std::string& content) const {
    auto p = (path_ / name).string();
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }
  std::string path(const std::string& name) const {
    return (path_ / name).string();
  }

private:
  std::filesystem::path path_;
};

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs a shell command, capturing stdout/stderr and the exit code.
inline RunResult run(const std::string& command, const std::string& stdin_data = "") {
  TempDir dir;
  const std::string out_path = dir.path("out");
  const std::string err_path = dir.path("err");
  const std::string in_path = dir.file("in", stdin_data);
  const std::string full = command + " < " + in_path + " > " + out_path +
                           " 2> " + err_path;
  const int status = std::system(full.c_str());
  RunResult result;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

// ---------------------------------------------------------------------------
// random Sinhala material

inline const std::vector<std::string>& consonants() {
  static const std::vector<std::string> v = {
      "ක", "ග", "ච", "ජ", "ට", "ඩ", "ණ", "ත", "ද", "න",
      "ප", "බ", "ම", "ය", "ර", "ල", "ව", "ශ", "ස", "හ"};
  return v;
}

inline const std::vector<std::string>& vowel_signs() {
  static const std::vector<std::string> v = {"ා", "ැ", "ි", "ී", "ු",
                                             "ූ", "ෙ", "ේ", "ො", "ෝ"};
  return v;
}

inline const std::vector<std::string>& independent_vowels() {
  static const std::vector<std::string> v = {"අ", "ආ", "ඉ", "ඊ", "උ", "එ", "ඔ"};
  return v;
}

// One random grapheme: consonant, optionally with a vowel sign or virama.
inline std::string random_grapheme(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick_c(0, consonants().size() - 1);
  std::uniform_int_distribution<int> shape(0, 9);
  const int s = shape(rng);
  if (s < 2) {
    std::uniform_int_distribution<std::size_t> pick_v(
        0, independent_vowels().size() - 1);
    return independent_vowels()[pick_v(rng)];
  }
  std::string g = consonants()[pick_c(rng)];
  if (s < 6) {
    std::uniform_int_distribution<std::size_t> pick_v(0, vowel_signs().size() - 1);
    g += vowel_signs()[pick_v(rng)];
  } else if (s == 6) {
    g += "්"; // virama
  }
  return g;
}

inline std::string random_word(std::mt19937& rng, std::size_t min_len = 2,
                               std::size_t max_len = 5) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::string w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w += random_grapheme(rng);
  return w;
}

// Random text mixing Sinhala words, digits and punctuation.
inline std::string random_text(std::mt19937& rng, std::size_t words = 20) {
  std::uniform_int_distribution<int> kind(0, 9);
  std::string text;
  for (std::size_t i = 0; i < words; ++i) {
    if (i) text += kind(rng) == 0 ? "\n" : " ";
    const int k = kind(rng);
    if (k == 1)
      text += std::to_string(rng() % 10000);
    else if (k == 2)
      text += random_word(rng) + ".";
    else
      text += random_word(rng);
  }
  return text;
}

// ---------------------------------------------------------------------------
// random dictionaries for oracle-equivalence checks

struct SynthDictionary {
  std::string aff;
  std::string dic;
};

// A random Hunspell-subset dictionary: a handful of suffix and prefix flags
// (some cross-product), rules with occasional strips and conditions, stems
// with random flag sets, a few needs-affix stems. Small enough for
// expand_all to stay under a few thousand words before infix expansion.
inline SynthDictionary random_dictionary(std::mt19937& rng,
                                         std::size_t stem_count = 12) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> d10(0, 9);

  const std::vector<std::string> flag_names = {"A", "B", "C", "D", "E"};
  std::uniform_int_distribution<std::size_t> pick_flag(0, flag_names.size() - 1);

  // generate stems first so strips/conditions can reference real edges
  std::vector<std::string> stems;
  for (std::size_t i = 0; i < stem_count; ++i) {
    std::string stem = random_word(rng, 2, 4);
    if (d10(rng) == 0) stem += "නො"; // exercise infix-looking stems
    stems.push_back(sinspell::normalize(stem));
  }

  std::ostringstream aff;
  aff << "SET UTF-8\n";
  std::string try_chars;
  for (const auto& c : consonants()) try_chars += c;
  aff << "TRY " << try_chars << "\n";

  auto last_grapheme = [&](const std::string& stem) {
    auto gs = sinspell::segment(stem);
    return gs.back().utf8();
  };
  auto first_grapheme = [&](const std::string& stem) {
    auto gs = sinspell::segment(stem);
    return gs.front().utf8();
  };

  for (std::size_t f = 0; f < flag_names.size(); ++f) {
    const bool is_prefix = f >= 3; // D, E are prefix flags
    const bool cross = coin(rng) == 1;
    std::uniform_int_distribution<int> rule_count(1, 3);
    const int n = rule_count(rng);
    std::vector<std::string> rules;
    for (int r = 0; r < n; ++r) {
      const std::string& anchor = stems[rng() % stems.size()];
      std::string strip = "0";
      std::string condition = ".";
      const int shape = d10(rng);
      if (shape < 2) {
        // strip a real stem edge so the rule fires somewhere
        strip = is_prefix ? first_grapheme(anchor) : last_grapheme(anchor);
      } else if (shape < 4) {
        condition = is_prefix ? first_grapheme(anchor) : last_grapheme(anchor);
      } else if (shape == 4) {
        condition = "[" + last_grapheme(anchor) + first_grapheme(anchor) + "]";
      } else if (shape == 5) {
        condition = "[^" + random_grapheme(rng) + "]";
      }
      std::string append = random_word(rng, 1, 2);
      if (d10(rng) == 0) append = "0";
      rules.push_back((is_prefix ? "PFX " : "SFX ") + flag_names[f] + " " +
                      strip + " " + append + " " + condition);
    }
    aff << (is_prefix ? "PFX " : "SFX ") << flag_names[f] << " "
        << (cross ? "Y" : "N") << " " << rules.size() << "\n";
    for (const auto& r : rules) aff << r << "\n";
  }

  std::ostringstream dic;
  dic << stems.size() << "\n";
  for (const auto& stem : stems) {
    std::string flags;
    for (const auto& name : flag_names)
      if (d10(rng) < 4) flags += name;
    if (d10(rng) == 0 && !flags.empty()) flags += "!";
    dic << stem;
    if (!flags.empty()) dic << "/" << flags;
    dic << "\n";
  }
  return {aff.str(), dic.str()};
}

// A random perturbation of a word: one codepoint inserted, deleted or
// substituted.
inline std::string perturb(std::mt19937& rng, const std::string& word) {
  std::u32string cps = sinspell::decode_utf8(word);
  std::uniform_int_distribution<int> op(0, 2);
  const std::string pool = "කගටදනමයරලව";
  const std::u32string pool32 = sinspell::decode_utf8(pool);
  std::uniform_int_distribution<std::size_t> pick(0, pool32.size() - 1);
  switch (op(rng)) {
    case 0:
      cps.insert(cps.begin() + static_cast<long>(rng() % (cps.size() + 1)),
                 pool32[pick(rng)]);
      break;
    case 1:
      if (!cps.empty()) cps.erase(cps.begin() + static_cast<long>(rng() % cps.size()));
      break;
    default:
      if (!cps.empty()) cps[rng() % cps.size()] = pool32[pick(rng)];
      break;
  }
  return sinspell::encode_utf8(cps);
}

} // namespace testutil
