// sinspell - a morphology-aware spelling toolkit for Sinhala.
//
// Subcommands: check, suggest, fix, interactive, compile-lexc, mine, eval.
// Exit codes: 0 clean, 1 findings, 2 operational error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <unistd.h>

#include "sinspell/affix.hpp"
#include "sinspell/autofix.hpp"
#include "sinspell/eval.hpp"
#include "sinspell/lexc.hpp"
#include "sinspell/miner.hpp"
#include "sinspell/suggest.hpp"
#include "sinspell/text.hpp"

namespace {

using namespace sinspell;

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitError = 2;

struct Config {
  std::string dictionary_path;
  std::string affix_path;
  std::string confusion_path;
  std::string rules_path;
  std::string frequency_path;
  std::size_t max_suggestions = 10;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

// key=value config file; CLI flags override whatever it sets.
void apply_config_file(const std::string& path, bool required, Config& config) {
  std::ifstream in(path);
  if (!in) {
    if (required) throw std::runtime_error("cannot open config '" + path + "'");
    return;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "config line is not key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\"");
      if (b == std::string::npos) return std::string();
      const auto e = s.find_last_not_of(" \t\"");
      return s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "dictionary_path") config.dictionary_path = value;
    else if (key == "affix_path") config.affix_path = value;
    else if (key == "confusion_path") config.confusion_path = value;
    else if (key == "rules_path") config.rules_path = value;
    else if (key == "frequency_path") config.frequency_path = value;
    else if (key == "max_suggestions") config.max_suggestions = std::stoul(value);
    else throw ParseError(line_no, "unknown config key '" + key + "'");
  }
}

struct CheckerStack {
  Dictionary dict;
  ConfusionTable confusions;
  FrequencyTable frequencies;
  bool has_frequencies = false;
};

CheckerStack load_checker_stack(const Config& config) {
  if (config.dictionary_path.empty() || config.affix_path.empty())
    throw std::runtime_error("a dictionary is required: pass --dic and --aff "
                             "(or set them in the config file)");
  auto loaded = load_dictionary(read_file(config.affix_path),
                                read_file(config.dictionary_path));
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
  CheckerStack stack{std::move(loaded.dict), {}, {}, false};
  if (!config.confusion_path.empty())
    stack.confusions = parse_confusions(read_file(config.confusion_path));
  if (!config.frequency_path.empty()) {
    stack.frequencies = parse_frequencies(read_file(config.frequency_path));
    stack.has_frequencies = true;
  }
  return stack;
}

struct Flagged {
  Token token;
  std::size_t line = 1;
  std::size_t column = 1; // codepoint column, 1-based
  std::vector<Suggestion> suggestions;
};

// line:col of each byte offset, counting columns in codepoints
std::pair<std::size_t, std::size_t> line_col(std::string_view text,
                                             std::size_t byte_offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte_offset && i < text.size();) {
    const auto b = static_cast<unsigned char>(text[i]);
    if (b == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    std::size_t len = 1;
    if ((b & 0xE0) == 0xC0) len = 2;
    else if ((b & 0xF0) == 0xE0) len = 3;
    else if ((b & 0xF8) == 0xF0) len = 4;
    i += len;
    ++col;
  }
  return {line, col};
}

// gap between two tokens contains only whitespace and at most one hyphen
bool joinable_gap(std::string_view text, const Token& a, const Token& b) {
  bool hyphen_seen = false;
  for (std::size_t i = a.end; i < b.begin; ++i) {
    const char c = text[i];
    if (c == '-') {
      if (hyphen_seen) return false;
      hyphen_seen = true;
      continue;
    }
    if (c != ' ' && c != '\t') return false;
  }
  return true;
}

std::vector<Flagged> find_flagged(const CheckerStack& stack,
                                  std::string_view text,
                                  std::size_t max_suggestions) {
  const auto tokens = tokenize(text);
  std::vector<Flagged> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.kind != TokenKind::Word) continue;
    if (stack.dict.recognize(t.surface)) continue;
    Flagged f;
    f.token = t;
    std::tie(f.line, f.column) = line_col(text, t.begin);
    f.suggestions = generate(stack.dict, stack.confusions, t.surface,
                             max_suggestions,
                             stack.has_frequencies ? &stack.frequencies : nullptr);
    // word-boundary repairs with the neighbouring word tokens
    auto merge_join = [&](const Token& a, const Token& b) {
      if (!joinable_gap(text, a, b)) return;
      if (auto join = suggest_join(stack.dict, a, b)) {
        auto same = [&](const Suggestion& s) {
          return s.candidate == join->candidate;
        };
        if (std::none_of(f.suggestions.begin(), f.suggestions.end(), same))
          f.suggestions.push_back(*join);
      }
    };
    for (std::size_t j = i + 1; j < tokens.size(); ++j) {
      if (tokens[j].kind == TokenKind::Word) {
        merge_join(t, tokens[j]);
        break;
      }
      if (tokens[j].kind != TokenKind::Punctuation) break;
    }
    for (std::size_t j = i; j-- > 0;) {
      if (tokens[j].kind == TokenKind::Word) {
        merge_join(tokens[j], t);
        break;
      }
      if (tokens[j].kind != TokenKind::Punctuation) break;
    }
    std::stable_sort(f.suggestions.begin(), f.suggestions.end(),
                     [](const Suggestion& a, const Suggestion& b) {
                       if (a.cost != b.cost) return a.cost < b.cost;
                       return a.candidate < b.candidate;
                     });
    if (f.suggestions.size() > max_suggestions)
      f.suggestions.resize(max_suggestions);
    out.push_back(std::move(f));
  }
  return out;
}

std::string render_flagged(const std::vector<Flagged>& flagged,
                           const std::string& prefix) {
  std::string out;
  for (const auto& f : flagged) {
    out += prefix + std::to_string(f.line) + ":" + std::to_string(f.column) +
           "\t" + f.token.surface + "\t";
    for (std::size_t i = 0; i < f.suggestions.size(); ++i) {
      if (i) out += ",";
      out += f.suggestions[i].candidate;
    }
    out += "\n";
  }
  return out;
}

int cmd_check(const Config& config, const std::vector<std::string>& inputs) {
  const CheckerStack stack = load_checker_stack(config);
  const std::vector<std::string> files = inputs.empty()
                                             ? std::vector<std::string>{"-"}
                                             : inputs;
  // files are independent; check them concurrently, print in order
  std::vector<std::future<std::pair<std::string, bool>>> results;
  std::vector<std::string> texts;
  texts.reserve(files.size());
  for (const auto& f : files) texts.push_back(read_file(f));
  for (std::size_t i = 0; i < files.size(); ++i) {
    results.push_back(std::async(std::launch::async, [&, i] {
      const auto flagged =
          find_flagged(stack, texts[i], config.max_suggestions);
      const std::string prefix = files.size() > 1 ? files[i] + ":" : "";
      return std::make_pair(render_flagged(flagged, prefix), !flagged.empty());
    }));
  }
  bool any = false;
  for (auto& r : results) {
    auto [report, has] = r.get();
    std::cout << report;
    any = any || has;
  }
  return any ? kExitFindings : kExitClean;
}

int cmd_suggest(const Config& config, const std::string& word) {
  const CheckerStack stack = load_checker_stack(config);
  if (stack.dict.recognize(word)) return kExitClean;
  const auto suggestions =
      generate(stack.dict, stack.confusions, word, config.max_suggestions,
               stack.has_frequencies ? &stack.frequencies : nullptr);
  for (const auto& s : suggestions) {
    char cost[32];
    std::snprintf(cost, sizeof cost, "%.2f", s.cost);
    std::cout << s.candidate << "\t" << cost << "\t" << to_string(s.source)
              << "\n";
  }
  return kExitFindings;
}

int cmd_fix(const Config& config, const std::vector<std::string>& inputs,
            const std::string& audit_path) {
  if (config.rules_path.empty())
    throw std::runtime_error("fix needs --rules (or rules_path in the config)");
  const auto rules = load_rules(read_file(config.rules_path));
  const std::vector<std::string> files = inputs.empty()
                                             ? std::vector<std::string>{"-"}
                                             : inputs;
  std::string audit;
  for (const auto& f : files) {
    const std::string text = normalize(read_file(f));
    auto result = apply_rules(rules, text);
    std::cout << result.text;
    audit += fixes_tsv(result.fixes);
  }
  if (audit_path.empty())
    std::cerr << audit;
  else
    write_file(audit_path, audit);
  return kExitClean;
}

int cmd_interactive(const Config& config, const std::string& input,
                    const std::string& out_path, const std::string& answers_path) {
  const CheckerStack stack = load_checker_stack(config);
  const std::string text = read_file(input);

  const bool tty = isatty(fileno(stdin)) != 0;
  if (!tty && answers_path.empty()) {
    // no human attached: degrade to check behaviour
    const auto flagged = find_flagged(stack, text, config.max_suggestions);
    std::cout << render_flagged(flagged, "");
    return flagged.empty() ? kExitClean : kExitFindings;
  }

  std::ifstream answers_file;
  std::istream* answers = &std::cin;
  if (!answers_path.empty() && answers_path != "-") {
    answers_file.open(answers_path);
    if (!answers_file)
      throw std::runtime_error("cannot open answers file '" + answers_path + "'");
    answers = &answers_file;
  }

  const auto flagged = find_flagged(stack, text, config.max_suggestions);
  std::string output;
  std::size_t consumed = 0;
  // token surface -> accepted replacement, from accept-all
  std::map<std::string, std::string> accept_all;

  auto emit_upto = [&](std::size_t byte) {
    output += text.substr(consumed, byte - consumed);
    consumed = byte;
  };
  auto write_recovery = [&] {
    emit_upto(text.size());
    const std::string recovery =
        (out_path.empty() ? std::string("sinspell") : out_path) + ".recovery";
    write_file(recovery, output);
    std::cerr << "session interrupted; partial output written to " << recovery
              << "\n";
  };

  for (const auto& f : flagged) {
    emit_upto(f.token.begin);
    std::string replacement = f.token.surface;
    if (auto it = accept_all.find(f.token.surface); it != accept_all.end()) {
      replacement = it->second;
    } else {
      std::cerr << f.line << ":" << f.column << "  " << f.token.surface << "\n";
      for (std::size_t i = 0; i < f.suggestions.size(); ++i)
        std::cerr << "  " << (i + 1) << ") " << f.suggestions[i].candidate
                  << "\n";
      std::cerr << "  [1-" << f.suggestions.size()
                << "] accept, s skip, a [n] accept for all identical, "
                   "e TEXT edit> ";
      std::string answer;
      if (!std::getline(*answers, answer)) {
        write_recovery();
        return kExitError;
      }
      std::istringstream parse(answer);
      std::string op;
      parse >> op;
      if (op.empty() || op == "s") {
        // skip
      } else if (op == "a") {
        std::size_t n = 1;
        parse >> n;
        if (n >= 1 && n <= f.suggestions.size()) {
          replacement = f.suggestions[n - 1].candidate;
          accept_all[f.token.surface] = replacement;
        }
      } else if (op == "e") {
        std::string rest;
        std::getline(parse, rest);
        const auto b = rest.find_first_not_of(" \t");
        if (b != std::string::npos) replacement = rest.substr(b);
      } else {
        try {
          const std::size_t n = std::stoul(op);
          if (n >= 1 && n <= f.suggestions.size())
            replacement = f.suggestions[n - 1].candidate;
        } catch (const std::exception&) {
          // unrecognized answer: skip
        }
      }
    }
    output += replacement;
    consumed = f.token.end;
  }
  emit_upto(text.size());

  if (out_path.empty())
    std::cout << output;
  else
    write_file(out_path, output);
  return flagged.empty() ? kExitClean : kExitFindings;
}

int cmd_compile_lexc(const std::string& input, std::string out_dic,
                     std::string out_aff) {
  const auto src = parse_lexc(read_file(input));
  const auto compiled = compile_lexc(src);
  std::string base = input;
  if (base.size() > 5 && base.substr(base.size() - 5) == ".lexc")
    base = base.substr(0, base.size() - 5);
  if (out_dic.empty()) out_dic = base + ".dic";
  if (out_aff.empty()) out_aff = base + ".aff";
  write_file(out_dic, compiled.dic_text);
  write_file(out_aff, compiled.aff_text);
  std::cerr << "wrote " << out_dic << " and " << out_aff << "\n";
  return kExitClean;
}

int cmd_mine(const std::string& original, const std::string& corrected,
             const std::string& records_path, const std::string& stats_path) {
  const auto pairs = align(read_file(original), read_file(corrected));
  std::vector<ErrorRecord> records;
  for (const auto& pair : pairs) {
    auto found = diff(pair);
    records.insert(records.end(), std::make_move_iterator(found.begin()),
                   std::make_move_iterator(found.end()));
  }
  const auto stats = confusion_stats(records);
  const std::string records_text = records_tsv(records);
  const std::string stats_text = stats_tsv(stats);
  if (records_path.empty() || records_path == "-")
    std::cout << records_text;
  else
    write_file(records_path, records_text);
  if (stats_path.empty() || stats_path == "-")
    std::cerr << stats_text;
  else
    write_file(stats_path, stats_text);
  return kExitClean;
}

std::vector<std::string> read_word_list(const std::string& path) {
  std::vector<std::string> words;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t");
    words.push_back(normalize(line.substr(b, e - b + 1)));
  }
  return words;
}

int cmd_eval(const Config& config, const std::string& correct_path,
             const std::string& incorrect_path, const std::string& cases_path,
             const std::string& tsv_path) {
  const CheckerStack stack = load_checker_stack(config);
  std::string tsv;

  if (!correct_path.empty() || !incorrect_path.empty()) {
    const auto correct =
        correct_path.empty() ? std::vector<std::string>{} : read_word_list(correct_path);
    const auto incorrect = incorrect_path.empty() ? std::vector<std::string>{}
                                                  : read_word_list(incorrect_path);
    const auto report = eval_detection(stack.dict, correct, incorrect);
    std::cout << render_detection(report);
    tsv += detection_tsv(report);
  }
  if (!cases_path.empty()) {
    const auto cases = parse_cases(read_file(cases_path));
    const auto report = eval_suggestions(
        stack.dict, stack.confusions, cases, config.max_suggestions,
        stack.has_frequencies ? &stack.frequencies : nullptr);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << render_suggestions(report, report.evaluated);
    tsv += suggestions_tsv(report, report.evaluated);
  }
  if (!tsv_path.empty()) write_file(tsv_path, tsv);
  return kExitClean;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"sinspell - a morphology-aware spelling toolkit for Sinhala"};
  app.fallthrough();

  Config config;
  std::string config_path;
  bool normalize_only = false;
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--dic", config.dictionary_path, "dictionary (.dic) file");
  app.add_option("--aff", config.affix_path, "affix (.aff) file");
  app.add_option("--confusions", config.confusion_path, "confusion-set file");
  app.add_option("--rules", config.rules_path, "autofix rule file");
  app.add_option("--freq", config.frequency_path, "word-frequency sidecar");
  app.add_option("--max-suggestions", config.max_suggestions,
                 "suggestion list size");
  app.add_flag("--normalize-only", normalize_only,
               "normalize stdin (or files) to stdout and exit");

  auto* check = app.add_subcommand("check", "flag non-word tokens with suggestions");
  std::vector<std::string> check_inputs;
  check->add_option("inputs", check_inputs, "input files ('-' for stdin)");

  auto* suggest = app.add_subcommand("suggest", "suggestions for a single word");
  std::string suggest_word;
  suggest->add_option("word", suggest_word, "the word to look up")->required();

  auto* fix = app.add_subcommand("fix", "auto-correct evident errors");
  std::vector<std::string> fix_inputs;
  std::string audit_path;
  fix->add_option("inputs", fix_inputs, "input files ('-' for stdin)");
  fix->add_option("--audit", audit_path, "write the applied-fix TSV here "
                                         "(default: stderr)");

  auto* interactive =
      app.add_subcommand("interactive", "review flagged tokens one by one");
  std::string interactive_input = "-";
  std::string interactive_out;
  std::string answers_path;
  interactive->add_option("input", interactive_input, "document to review");
  interactive->add_option("--out", interactive_out,
                          "write the corrected document here (default: stdout)");
  interactive->add_option("--answers", answers_path,
                          "scripted session: read answers from this file "
                          "('-' for stdin)");

  auto* compile = app.add_subcommand("compile-lexc",
                                  "compile a .lexc lexicon to .dic/.aff");
  std::string lexc_input, out_dic, out_aff;
  compile->add_option("input", lexc_input, "the .lexc file")->required();
  compile->add_option("--out-dic", out_dic, "output .dic path");
  compile->add_option("--out-aff", out_aff, "output .aff path");

  auto* mine = app.add_subcommand("mine", "mine (wrong, corrected) pairs from a "
                                       "parallel document pair");
  std::string mine_original, mine_corrected, records_path, stats_path;
  mine->add_option("--original", mine_original, "original document")->required();
  mine->add_option("--corrected", mine_corrected, "corrected document")
      ->required();
  mine->add_option("--records", records_path,
                   "error-record TSV output (default: stdout)");
  mine->add_option("--stats", stats_path,
                   "confusion-stats TSV output (default: stderr)");

  auto* eval = app.add_subcommand("eval", "detection and suggestion metrics");
  std::string correct_path, incorrect_path, cases_path, tsv_path;
  eval->add_option("--correct", correct_path, "correct-word list");
  eval->add_option("--incorrect", incorrect_path, "incorrect-word list");
  eval->add_option("--cases", cases_path, "suggestion cases TSV "
                                          "(misspelled TAB gold)");
  eval->add_option("--tsv", tsv_path, "machine-readable report output");

  CLI11_PARSE(app, argc, argv);

  try {
    // flags win over the config file
    const Config from_flags = config;
    if (!config_path.empty())
      apply_config_file(config_path, true, config);
    else
      apply_config_file("sinspell.toml", false, config);
    if (!from_flags.dictionary_path.empty())
      config.dictionary_path = from_flags.dictionary_path;
    if (!from_flags.affix_path.empty()) config.affix_path = from_flags.affix_path;
    if (!from_flags.confusion_path.empty())
      config.confusion_path = from_flags.confusion_path;
    if (!from_flags.rules_path.empty()) config.rules_path = from_flags.rules_path;
    if (!from_flags.frequency_path.empty())
      config.frequency_path = from_flags.frequency_path;
    if (app.count("--max-suggestions"))
      config.max_suggestions = from_flags.max_suggestions;

    if (normalize_only) {
      std::vector<std::string> inputs = check_inputs;
      if (inputs.empty()) inputs.push_back("-");
      for (const auto& f : inputs) std::cout << normalize(read_file(f));
      return kExitClean;
    }
    if (check->parsed()) return cmd_check(config, check_inputs);
    if (suggest->parsed()) return cmd_suggest(config, suggest_word);
    if (fix->parsed()) return cmd_fix(config, fix_inputs, audit_path);
    if (interactive->parsed())
      return cmd_interactive(config, interactive_input, interactive_out,
                             answers_path);
    if (compile->parsed()) return cmd_compile_lexc(lexc_input, out_dic, out_aff);
    if (mine->parsed())
      return cmd_mine(mine_original, mine_corrected, records_path, stats_path);
    if (eval->parsed())
      return cmd_eval(config, correct_path, incorrect_path, cases_path,
                      tsv_path);
    std::cerr << app.help();
    return kExitError;
  } catch (const DecodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what()
              << (e.line() ? " (line " + std::to_string(e.line()) + ")" : "")
              << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
