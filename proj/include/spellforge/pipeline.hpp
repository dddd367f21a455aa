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

#ifndef SPELLFORGE_PIPELINE_HPP_
#define SPELLFORGE_PIPELINE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spellforge/error_model.hpp"
#include "spellforge/heuristic.hpp"
#include "spellforge/sbsc.hpp"
#include "spellforge/streams.hpp"

namespace spellforge::pipeline {

// Corpus preparation: clean, balance, corrupt into parallel pairs, and
// densify or expand fine-tuning datasets.

struct CleanRules {
  std::vector<std::string> allowed_scripts{"Cyrillic", "Latin"};
  std::size_t min_length = 40;    // characters, inclusive lower bound
  std::size_t max_length = 4096;  // characters, inclusive upper bound
};

enum class RejectReason : std::uint8_t { kScript, kTooShort, kTooLong };

struct CleanReport {
  std::uint64_t kept = 0;
  std::uint64_t rejected_script = 0;
  std::uint64_t rejected_short = 0;
  std::uint64_t rejected_long = 0;

  std::uint64_t rejected() const {
    return rejected_script + rejected_short + rejected_long;
  }
};

// CleanRules resolved against ICU script codes. Letters must belong to an
// allowed script; digits are ASCII only; Unicode punctuation and white space
// always pass. Ill-formed UTF-8 counts as a script rejection.
class RuleChecker {
 public:
  explicit RuleChecker(const CleanRules& rules);  // throws ValidationError

  bool keep(std::string_view line, RejectReason* reason = nullptr) const;

 private:
  std::vector<int> allowed_codes_;
  std::size_t min_length_;
  std::size_t max_length_;
};

void clean_corpus(const LineSource& next, const CleanRules& rules, const LineSink& sink,
                  CleanReport* report = nullptr);

struct NamedSource {
  std::string name;
  LineSource source;
};

// Draws exactly target_per_corpus lines uniformly without replacement from
// each corpus (single-pass reservoir over the stream, original order
// restored) and emits them in corpus order. Throws ValidationError naming
// the corpus whose supply falls short.
void balance(std::vector<NamedSource> corpora, std::uint64_t target_per_corpus,
             std::uint64_t seed, const LineSink& sink);

// One corruption backend behind a single call: a mined distribution driving
// sbsc, or a heuristic config with its data tables.
class Corruptor {
 public:
  static Corruptor from_distribution(model::ErrorDistribution dist);
  static Corruptor from_heuristic(heuristic::HeuristicConfig cfg,
                                  heuristic::KeyboardLayout layout,
                                  model::ConfusionTable confusion,
                                  heuristic::WrongWordTable wrong_words);

  std::string corrupt(std::string_view sentence, std::uint64_t seed) const;

  // Max distinct variants per input; 0 means unbounded (sbsc).
  std::uint32_t max_variants() const;

 private:
  Corruptor() = default;

  struct HeuristicBundle {
    heuristic::HeuristicConfig cfg;
    heuristic::KeyboardLayout layout;
    model::ConfusionTable confusion;
    heuristic::WrongWordTable wrong_words;
  };

  std::shared_ptr<const model::ErrorDistribution> dist_;
  std::shared_ptr<const HeuristicBundle> heuristic_;
};

// corrupt_corpus over scale_density(dist, density_factor).
void build_pretrain_corpus(const LineSource& clean, const model::ErrorDistribution& dist,
                           std::uint32_t density_factor, std::uint64_t seed,
                           const sbsc::PairSink& sink,
                           sbsc::CorpusSummary* summary = nullptr, unsigned workers = 1);

struct AugmentSummary {
  std::uint64_t pairs_in = 0;
  std::uint64_t pairs_out = 0;
  std::uint64_t skipped = 0;
};

// Add strategy: re-corrupts the corrupted side of each pair in place,
// densifying noise without changing cardinality. Unusable records are
// skipped and counted.
void augment_add(const model::PairSource& next, const Corruptor& corruptor,
                 std::uint64_t seed, const sbsc::PairSink& sink,
                 AugmentSummary* summary = nullptr, unsigned workers = 1);

// Concat strategy: forwards all original pairs, then appends `copies` freshly
// corrupted copies of each correct side. The source factory must produce a
// fresh pass over the same records each call, which keeps memory bounded.
void augment_concat(const std::function<model::PairSource()>& reopen,
                    const Corruptor& corruptor, std::uint32_t copies, std::uint64_t seed,
                    const sbsc::PairSink& sink, AugmentSummary* summary = nullptr,
                    unsigned workers = 1);

}  // namespace spellforge::pipeline

#endif  // SPELLFORGE_PIPELINE_HPP_
