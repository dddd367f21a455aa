// Copyright 2026 The Spellforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spellforge/corpus_io.hpp"
#include "spellforge/errors.hpp"
#include "spellforge/evaluation.hpp"
#include "spellforge/heuristic.hpp"
#include "spellforge/pipeline.hpp"
#include "spellforge/sbsc.hpp"

#ifndef SPELLFORGE_DATA_DIR
#define SPELLFORGE_DATA_DIR "data"
#endif

namespace {

using nlohmann::json;
using namespace spellforge;

std::uint64_t seed_from_env() {
  const char* env = std::getenv("SPELLFORGE_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t value = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("SPELLFORGE_SEED is not a 64-bit unsigned integer: \"" +
                          std::string(env) + "\"");
  }
  return value;
}

json parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config: " + path);
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t limit = e.byte > 0 ? std::min(text.size(), e.byte - 1) : 0;
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("config " + path + ": line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + e.what());
  }
}

// Flags always win over config-file values; a config value applies only when
// its flag was not given on the command line.
class ConfigLayer {
 public:
  ConfigLayer() = default;
  explicit ConfigLayer(json values) : values_(std::move(values)) {}

  template <typename T>
  void fill(const CLI::Option* opt, const char* key, T& target) const {
    if (opt != nullptr && opt->count() > 0) return;
    if (!values_.is_object() || !values_.contains(key)) return;
    try {
      target = values_[key].get<T>();
    } catch (const json::exception& e) {
      throw ValidationError(std::string("config field \"") + key + "\": " + e.what());
    }
  }

  ConfigLayer block(const char* key) const {
    if (values_.is_object() && values_.contains(key)) {
      if (!values_[key].is_object()) {
        throw ValidationError(std::string("config field \"") + key +
                              "\" must be an object");
      }
      return ConfigLayer(values_[key]);
    }
    return ConfigLayer();
  }

 private:
  json values_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_summary(std::uint64_t records_in, std::uint64_t records_out,
                  std::uint64_t skipped, double elapsed, json extra = json::object()) {
  json summary;
  summary["records_in"] = records_in;
  summary["records_out"] = records_out;
  summary["skipped"] = skipped;
  summary["elapsed_seconds"] = elapsed;
  summary.update(extra);
  std::cerr << summary.dump() << '\n';
}

// Options shared by every subcommand.
struct CommonOpts {
  std::string config_path;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string format = "tsv";
  CLI::Option* seed_opt = nullptr;
  CLI::Option* workers_opt = nullptr;
  CLI::Option* format_opt = nullptr;

  void attach(CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--config", config_path, "JSON config file; flags override its values");
    seed_opt = cmd->add_option("--seed", seed,
                               "64-bit seed (default: SPELLFORGE_SEED or 0)");
    workers_opt =
        cmd->add_option("--workers", workers, "worker threads; output is identical for any value")
            ->check(CLI::PositiveNumber);
    if (with_format) {
      format_opt = cmd->add_option("--format", format, "corpus format: tsv|records");
    }
  }

  ConfigLayer resolve() {
    ConfigLayer layer;
    if (!config_path.empty()) layer = ConfigLayer(parse_config_file(config_path));
    if (seed_opt->count() == 0) seed = seed_from_env();
    layer.fill(seed_opt, "seed", seed);
    layer.fill(workers_opt, "workers", workers);
    if (format_opt != nullptr) layer.fill(format_opt, "format", format);
    if (workers == 0) throw ValidationError("--workers must be positive");
    return layer;
  }

  io::Format parsed_format() const { return io::format_from_string(format); }
};

// ---------------------------------------------------------------- scan ----

struct ScanOpts {
  CommonOpts common;
  std::string pairs_path;
  std::string out_path;
};

void run_scan(ScanOpts& o) {
  Stopwatch timer;
  o.common.resolve();
  const io::Format format = o.common.parsed_format();

  io::Input input(o.pairs_path);
  io::PairReader reader(input.stream(), format);
  model::ScanSummary summary;
  const model::ErrorDistribution dist = model::scan_corpus(reader.source(), &summary);

  model::save(dist, o.out_path);
  const std::uint64_t skipped = summary.pairs_skipped + reader.malformed();
  emit_summary(summary.pairs_scanned + skipped, summary.pairs_scanned, skipped,
               timer.seconds(), {{"model", o.out_path}});
}

// ------------------------------------------------------------- corrupt ----

struct CorruptOpts {
  CommonOpts common;
  std::string model_path;
  std::string in_path;
  std::string out_path;
};

void run_corrupt(CorruptOpts& o) {
  Stopwatch timer;
  o.common.resolve();
  const io::Format format = o.common.parsed_format();

  const model::ErrorDistribution dist = model::load_file(o.model_path);
  io::Input input(o.in_path);
  io::Output output(o.out_path);
  io::PairWriter writer(output.stream(), format);

  sbsc::CorpusSummary summary;
  sbsc::corrupt_corpus(
      io::line_source(input.stream()), dist, o.common.seed,
      [&writer](const model::SentencePair& pair) { writer.write(pair); }, &summary,
      o.common.workers);
  output.finish();

  emit_summary(summary.sentences_in, summary.pairs_out, summary.skipped, timer.seconds(),
               {{"count_clamped", summary.count_clamped},
                {"dropped_ops", summary.dropped_ops}});
}

// ------------------------------------------------------------- augment ----

struct AugmentOpts {
  CommonOpts common;
  std::string in_path;
  std::string out_path;
  std::string strategy;
  std::uint32_t copies = 1;
  std::string model_path;
  std::string layout_path = std::string(SPELLFORGE_DATA_DIR) + "/layouts/qwerty.json";
  std::string confusion_path = std::string(SPELLFORGE_DATA_DIR) + "/confusion/en.json";
  std::string wrong_words_path = std::string(SPELLFORGE_DATA_DIR) + "/wrong_words/en.json";
  std::string action = "orfo";
  std::string level = "word";
  double aug_rate = 0.1;
  double aug_prob = 0.7;
  int min_aug = 1;
  int max_aug = 3;
  int mult_num = 5;

  CLI::Option* model_opt = nullptr;
  CLI::Option* action_opt = nullptr;
  CLI::Option* level_opt = nullptr;
  CLI::Option* aug_rate_opt = nullptr;
  CLI::Option* aug_prob_opt = nullptr;
  CLI::Option* min_aug_opt = nullptr;
  CLI::Option* max_aug_opt = nullptr;
  CLI::Option* mult_num_opt = nullptr;
  CLI::Option* layout_opt = nullptr;
  CLI::Option* confusion_opt = nullptr;
  CLI::Option* wrong_words_opt = nullptr;
};

pipeline::Corruptor build_corruptor(AugmentOpts& o, const ConfigLayer& layer) {
  if (o.model_opt->count() > 0 || !o.model_path.empty()) {
    return pipeline::Corruptor::from_distribution(model::load_file(o.model_path));
  }

  const ConfigLayer block = layer.block("heuristic");
  block.fill(o.action_opt, "action", o.action);
  block.fill(o.level_opt, "level", o.level);
  block.fill(o.aug_rate_opt, "aug_rate", o.aug_rate);
  block.fill(o.aug_prob_opt, "aug_prob", o.aug_prob);
  block.fill(o.min_aug_opt, "min_aug", o.min_aug);
  block.fill(o.max_aug_opt, "max_aug", o.max_aug);
  block.fill(o.mult_num_opt, "mult_num", o.mult_num);
  block.fill(o.layout_opt, "layout", o.layout_path);
  block.fill(o.confusion_opt, "confusion", o.confusion_path);
  block.fill(o.wrong_words_opt, "wrong_words", o.wrong_words_path);

  heuristic::HeuristicConfig cfg;
  cfg.action = heuristic::action_from_string(o.action);
  cfg.level = heuristic::level_from_string(o.level);
  cfg.aug_rate = o.aug_rate;
  cfg.aug_prob = o.aug_prob;
  cfg.min_aug = o.min_aug;
  cfg.max_aug = o.max_aug;
  cfg.mult_num = o.mult_num;
  heuristic::require_valid(cfg);

  heuristic::KeyboardLayout layout;
  model::ConfusionTable confusion;
  heuristic::WrongWordTable wrong_words;
  if (cfg.level == heuristic::Level::kSentence) {
    wrong_words = heuristic::WrongWordTable::load_file(o.wrong_words_path);
  } else {
    layout = heuristic::KeyboardLayout::load_file(o.layout_path);
    confusion = model::load_confusion_file(o.confusion_path);
  }
  return pipeline::Corruptor::from_heuristic(cfg, std::move(layout), std::move(confusion),
                                             std::move(wrong_words));
}

void run_augment(AugmentOpts& o) {
  Stopwatch timer;
  const ConfigLayer layer = o.common.resolve();
  const io::Format format = o.common.parsed_format();

  if (o.strategy != "add" && o.strategy != "concat") {
    throw ValidationError("--strategy must be add or concat");
  }
  const pipeline::Corruptor corruptor = build_corruptor(o, layer);

  pipeline::AugmentSummary summary;
  std::uint64_t malformed = 0;

  if (o.strategy == "add") {
    io::Input input(o.in_path);
    io::PairReader reader(input.stream(), format);
    io::Output output(o.out_path);
    io::PairWriter writer(output.stream(), format);
    pipeline::augment_add(
        reader.source(), corruptor, o.common.seed,
        [&writer](const model::SentencePair& pair) { writer.write(pair); }, &summary,
        o.common.workers);
    malformed = reader.malformed();
    output.finish();
  } else {
    if (o.in_path == "-") {
      throw ValidationError("augment --strategy concat needs a re-readable file, not stdin");
    }
    // Readers live across the lambda; keep them alive via shared_ptr.
    auto reopen = [&o, format]() -> model::PairSource {
      auto input = std::make_shared<io::Input>(o.in_path);
      auto reader = std::make_shared<io::PairReader>(input->stream(), format);
      return [input, reader]() { return reader->next(); };
    };
    io::Output output(o.out_path);
    io::PairWriter writer(output.stream(), format);
    pipeline::augment_concat(
        reopen, corruptor, o.copies, o.common.seed,
        [&writer](const model::SentencePair& pair) { writer.write(pair); }, &summary,
        o.common.workers);
    output.finish();
  }

  emit_summary(summary.pairs_in + malformed, summary.pairs_out,
               summary.skipped + malformed, timer.seconds(),
               {{"strategy", o.strategy}});
}

// --------------------------------------------------------------- clean ----

struct CleanOpts {
  CommonOpts common;
  std::string in_path;
  std::string out_path;
  std::size_t min_length = 40;
  std::size_t max_length = 4096;
  std::vector<std::string> scripts{"Cyrillic", "Latin"};
  CLI::Option* min_opt = nullptr;
  CLI::Option* max_opt = nullptr;
  CLI::Option* scripts_opt = nullptr;
};

void run_clean(CleanOpts& o) {
  Stopwatch timer;
  const ConfigLayer layer = o.common.resolve();
  const ConfigLayer block = layer.block("clean");
  block.fill(o.min_opt, "min_length", o.min_length);
  block.fill(o.max_opt, "max_length", o.max_length);
  block.fill(o.scripts_opt, "allowed_scripts", o.scripts);

  pipeline::CleanRules rules;
  rules.min_length = o.min_length;
  rules.max_length = o.max_length;
  rules.allowed_scripts = o.scripts;
  const pipeline::RuleChecker checker(rules);  // validate before opening output

  io::Input input(o.in_path);
  io::Output output(o.out_path);
  pipeline::CleanReport report;
  pipeline::clean_corpus(
      io::line_source(input.stream()), rules,
      [&output](const std::string& line) { output.stream() << line << '\n'; }, &report);
  output.finish();

  emit_summary(report.kept + report.rejected(), report.kept, report.rejected(),
               timer.seconds(),
               {{"rejected_script", report.rejected_script},
                {"rejected_short", report.rejected_short},
                {"rejected_long", report.rejected_long}});
}

// ------------------------------------------------------------- balance ----

struct BalanceOpts {
  CommonOpts common;
  std::vector<std::string> in_paths;
  std::string out_path;
  std::uint64_t target = 0;
};

void run_balance(BalanceOpts& o) {
  Stopwatch timer;
  o.common.resolve();
  if (o.target == 0) throw ValidationError("--target must be positive");

  std::vector<std::unique_ptr<io::Input>> inputs;
  std::vector<pipeline::NamedSource> corpora;
  std::uint64_t records_in = 0;
  for (const auto& path : o.in_paths) {
    inputs.push_back(std::make_unique<io::Input>(path));
    auto base = io::line_source(inputs.back()->stream());
    corpora.push_back({path, [base, &records_in]() {
                         auto line = base();
                         if (line) ++records_in;
                         return line;
                       }});
  }

  io::Output output(o.out_path);
  std::uint64_t records_out = 0;
  pipeline::balance(std::move(corpora), o.target, o.common.seed,
                    [&](const std::string& line) {
                      output.stream() << line << '\n';
                      ++records_out;
                    });
  output.finish();

  emit_summary(records_in, records_out, 0, timer.seconds(),
               {{"corpora", o.in_paths.size()}, {"target_per_corpus", o.target}});
}

// ------------------------------------------------------- build-pretrain ----

struct BuildPretrainOpts {
  CommonOpts common;
  std::string in_path;
  std::string model_path;
  std::string out_path;
  std::uint32_t density_factor = 10;
  CLI::Option* density_opt = nullptr;
};

void run_build_pretrain(BuildPretrainOpts& o) {
  Stopwatch timer;
  const ConfigLayer layer = o.common.resolve();
  layer.fill(o.density_opt, "density_factor", o.density_factor);
  const io::Format format = o.common.parsed_format();

  const model::ErrorDistribution dist = model::load_file(o.model_path);
  io::Input input(o.in_path);
  io::Output output(o.out_path);
  io::PairWriter writer(output.stream(), format);

  sbsc::CorpusSummary summary;
  pipeline::build_pretrain_corpus(
      io::line_source(input.stream()), dist, o.density_factor, o.common.seed,
      [&writer](const model::SentencePair& pair) { writer.write(pair); }, &summary,
      o.common.workers);
  output.finish();

  emit_summary(summary.sentences_in, summary.pairs_out, summary.skipped, timer.seconds(),
               {{"density_factor", o.density_factor},
                {"count_clamped", summary.count_clamped}});
}

// ------------------------------------------------------------ evaluate ----

struct EvaluateOpts {
  CommonOpts common;
  std::string triples_path;
  std::string source_path;
  std::string hypothesis_path;
  std::string reference_path;
  std::string punctuation = "keep";
  std::string report_path;
};

void run_evaluate(EvaluateOpts& o) {
  Stopwatch timer;
  o.common.resolve();
  const eval::PunctuationMode mode = [&] {
    if (o.punctuation == "keep") return eval::PunctuationMode::kKeep;
    if (o.punctuation == "strip") return eval::PunctuationMode::kStrip;
    throw ValidationError("--punctuation must be keep or strip");
  }();

  const bool aligned = !o.source_path.empty();
  if (aligned == !o.triples_path.empty()) {
    throw ValidationError(
        "evaluate needs either --triples or all of --source/--hypothesis/--reference");
  }
  if (aligned && (o.hypothesis_path.empty() || o.reference_path.empty())) {
    throw ValidationError("--source requires --hypothesis and --reference");
  }

  eval::EvalReport report;
  std::uint64_t malformed = 0;
  if (aligned) {
    io::Input src(o.source_path);
    io::Input hyp(o.hypothesis_path);
    io::Input ref(o.reference_path);
    io::AlignedTripleReader reader(src.stream(), hyp.stream(), ref.stream());
    report = eval::evaluate(reader.source(), mode);
  } else {
    io::Input input(o.triples_path);
    io::TripleReader reader(input.stream());
    report = eval::evaluate(reader.source(), mode);
    malformed = reader.malformed();
  }

  const auto line = [](const char* name, double value) {
    std::printf("%-16s %.4f\n", name, value);
  };
  std::printf("triples          %zu\n", report.per_sentence.size());
  std::printf("tp %llu  fp %llu  fn %llu\n",
              static_cast<unsigned long long>(report.tp),
              static_cast<unsigned long long>(report.fp),
              static_cast<unsigned long long>(report.fn));
  line("precision", report.precision);
  line("recall", report.recall);
  line("f1", report.f1);
  line("accuracy", report.accuracy);
  line("correction_rate", report.correction_rate);

  if (!o.report_path.empty()) {
    json j;
    j["precision"] = report.precision;
    j["recall"] = report.recall;
    j["f1"] = report.f1;
    j["accuracy"] = report.accuracy;
    j["correction_rate"] = report.correction_rate;
    j["tp"] = report.tp;
    j["fp"] = report.fp;
    j["fn"] = report.fn;
    json per = json::array();
    for (const auto& s : report.per_sentence) {
      per.push_back({{"tp", s.tp}, {"fp", s.fp}, {"fn", s.fn}});
    }
    j["per_sentence"] = per;
    std::ofstream out(o.report_path);
    if (!out) throw IoError("cannot open report file: " + o.report_path);
    out << j.dump(2) << '\n';
    if (!out) throw IoError("failed writing report file: " + o.report_path);
  }

  emit_summary(report.per_sentence.size() + malformed, report.per_sentence.size(),
               malformed, timer.seconds(), {{"punctuation", o.punctuation}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spellforge: mine spelling-error statistics, corrupt clean text, build "
               "parallel corpora, and score spell checkers"};
  app.require_subcommand(1);

  ScanOpts scan_opts;
  auto* scan = app.add_subcommand("scan", "mine an error model from (corrupted, correct) pairs");
  scan_opts.common.attach(scan);
  scan->add_option("--pairs", scan_opts.pairs_path, "pair corpus (tsv or records), - for stdin")
      ->required();
  scan->add_option("--out", scan_opts.out_path, "output model file")->required();
  scan->callback([&] { run_scan(scan_opts); });

  CorruptOpts corrupt_opts;
  auto* corrupt = app.add_subcommand("corrupt", "apply a mined error model to clean sentences");
  corrupt_opts.common.attach(corrupt);
  corrupt->add_option("--model", corrupt_opts.model_path, "error model file")->required();
  corrupt->add_option("--in", corrupt_opts.in_path, "clean sentences, one per line")->required();
  corrupt->add_option("--out", corrupt_opts.out_path, "output pair corpus")->required();
  corrupt->callback([&] { run_corrupt(corrupt_opts); });

  AugmentOpts augment_opts;
  auto* augment = app.add_subcommand("augment", "densify (add) or expand (concat) a pair corpus");
  augment_opts.common.attach(augment);
  augment->add_option("--in", augment_opts.in_path, "pair corpus")->required();
  augment->add_option("--out", augment_opts.out_path, "output pair corpus")->required();
  augment->add_option("--strategy", augment_opts.strategy, "add|concat")->required();
  augment->add_option("--copies", augment_opts.copies, "corrupted copies per pair (concat)");
  augment_opts.model_opt =
      augment->add_option("--model", augment_opts.model_path,
                          "error model file; corrupt with sbsc instead of heuristics");
  augment_opts.action_opt =
      augment->add_option("--action", augment_opts.action, "orfo|insert|keyboard|replace");
  augment_opts.level_opt = augment->add_option("--level", augment_opts.level, "word|sentence");
  augment_opts.aug_rate_opt = augment->add_option("--aug-rate", augment_opts.aug_rate);
  augment_opts.aug_prob_opt = augment->add_option("--aug-prob", augment_opts.aug_prob);
  augment_opts.min_aug_opt = augment->add_option("--min-aug", augment_opts.min_aug);
  augment_opts.max_aug_opt = augment->add_option("--max-aug", augment_opts.max_aug);
  augment_opts.mult_num_opt = augment->add_option("--mult-num", augment_opts.mult_num);
  augment_opts.layout_opt =
      augment->add_option("--layout", augment_opts.layout_path, "keyboard layout file");
  augment_opts.confusion_opt = augment->add_option(
      "--confusion", augment_opts.confusion_path, "confusion table file");
  augment_opts.wrong_words_opt = augment->add_option(
      "--wrong-words", augment_opts.wrong_words_path, "wrong-word table file");
  augment->callback([&] { run_augment(augment_opts); });

  CleanOpts clean_opts;
  auto* clean = app.add_subcommand("clean", "filter sentences by script and length");
  clean_opts.common.attach(clean, /*with_format=*/false);
  clean->add_option("--in", clean_opts.in_path, "sentences, one per line")->required();
  clean->add_option("--out", clean_opts.out_path, "kept sentences")->required();
  clean_opts.min_opt = clean->add_option("--min-length", clean_opts.min_length);
  clean_opts.max_opt = clean->add_option("--max-length", clean_opts.max_length);
  clean_opts.scripts_opt = clean->add_option("--scripts", clean_opts.scripts,
                                             "allowed Unicode scripts")
                               ->delimiter(',');
  clean->callback([&] { run_clean(clean_opts); });

  BalanceOpts balance_opts;
  auto* balance = app.add_subcommand("balance", "sample each corpus down to a common size");
  balance_opts.common.attach(balance, /*with_format=*/false);
  balance->add_option("--in", balance_opts.in_paths, "input corpora (repeatable)")
      ->required()
      ->expected(-1);
  balance->add_option("--out", balance_opts.out_path, "merged output")->required();
  balance->add_option("--target", balance_opts.target, "records per corpus")->required();
  balance->callback([&] { run_balance(balance_opts); });

  BuildPretrainOpts pretrain_opts;
  auto* pretrain = app.add_subcommand(
      "build-pretrain", "corrupt a clean corpus with a density-scaled error model");
  pretrain_opts.common.attach(pretrain);
  pretrain->add_option("--in", pretrain_opts.in_path, "clean sentences")->required();
  pretrain->add_option("--model", pretrain_opts.model_path, "error model file")->required();
  pretrain->add_option("--out", pretrain_opts.out_path, "output pair corpus")->required();
  pretrain_opts.density_opt =
      pretrain->add_option("--density-factor", pretrain_opts.density_factor,
                           "errors-per-sentence multiplier");
  pretrain->callback([&] { run_build_pretrain(pretrain_opts); });

  EvaluateOpts evaluate_opts;
  auto* evaluate = app.add_subcommand("evaluate", "score hypotheses against references");
  evaluate_opts.common.attach(evaluate, /*with_format=*/false);
  evaluate->add_option("--triples", evaluate_opts.triples_path,
                       "three-column TSV: source, hypothesis, reference");
  evaluate->add_option("--source", evaluate_opts.source_path, "aligned source file");
  evaluate->add_option("--hypothesis", evaluate_opts.hypothesis_path,
                       "aligned hypothesis file");
  evaluate->add_option("--reference", evaluate_opts.reference_path, "aligned reference file");
  evaluate->add_option("--punctuation", evaluate_opts.punctuation, "keep|strip");
  evaluate->add_option("--report", evaluate_opts.report_path, "write full metrics as JSON");
  evaluate->callback([&] { run_evaluate(evaluate_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
