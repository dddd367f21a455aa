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

#include "spellforge/pipeline.hpp"

#include <algorithm>
#include <utility>

#include "spellforge/errors.hpp"
#include "spellforge/parallel.hpp"
#include "spellforge/rng.hpp"
#include "spellforge/unicode.hpp"

namespace spellforge::pipeline {

RuleChecker::RuleChecker(const CleanRules& rules)
    : min_length_(rules.min_length), max_length_(rules.max_length) {
  if (rules.min_length < 1) {
    throw ValidationError("clean rules: min_length must be at least 1");
  }
  if (rules.min_length > rules.max_length) {
    throw ValidationError("clean rules: min_length exceeds max_length");
  }
  if (rules.allowed_scripts.empty()) {
    throw ValidationError("clean rules: allowed_scripts must not be empty");
  }
  for (const auto& name : rules.allowed_scripts) {
    allowed_codes_.push_back(script_code(name));
  }
}

bool RuleChecker::keep(std::string_view line, RejectReason* reason) const {
  std::u32string decoded;
  try {
    decoded = decode_utf8(line);
  } catch (const ParseError&) {
    if (reason != nullptr) *reason = RejectReason::kScript;
    return false;
  }

  for (char32_t c : decoded) {
    if (is_space(c) || is_punctuation(c) || is_ascii_digit(c)) continue;
    const int script = script_of(c);
    if (std::find(allowed_codes_.begin(), allowed_codes_.end(), script) ==
        allowed_codes_.end()) {
      if (reason != nullptr) *reason = RejectReason::kScript;
      return false;
    }
  }
  if (decoded.size() < min_length_) {
    if (reason != nullptr) *reason = RejectReason::kTooShort;
    return false;
  }
  if (decoded.size() > max_length_) {
    if (reason != nullptr) *reason = RejectReason::kTooLong;
    return false;
  }
  return true;
}

void clean_corpus(const LineSource& next, const CleanRules& rules, const LineSink& sink,
                  CleanReport* report) {
  const RuleChecker checker(rules);
  CleanReport local;
  while (auto line = next()) {
    RejectReason reason;
    if (checker.keep(*line, &reason)) {
      ++local.kept;
      sink(*line);
      continue;
    }
    switch (reason) {
      case RejectReason::kScript: ++local.rejected_script; break;
      case RejectReason::kTooShort: ++local.rejected_short; break;
      case RejectReason::kTooLong: ++local.rejected_long; break;
    }
  }
  if (report != nullptr) *report = local;
}

void balance(std::vector<NamedSource> corpora, std::uint64_t target_per_corpus,
             std::uint64_t seed, const LineSink& sink) {
  for (std::size_t corpus_index = 0; corpus_index < corpora.size(); ++corpus_index) {
    auto& corpus = corpora[corpus_index];
    Rng rng(mix_seed(seed, corpus_index));

    // Reservoir of (original index, line); memory bounded by the target.
    std::vector<std::pair<std::uint64_t, std::string>> reservoir;
    reservoir.reserve(static_cast<std::size_t>(target_per_corpus));
    std::uint64_t count = 0;
    while (auto line = corpus.source()) {
      if (count < target_per_corpus) {
        reservoir.emplace_back(count, std::move(*line));
      } else {
        const std::uint64_t j = rng.below(count + 1);
        if (j < target_per_corpus) {
          reservoir[static_cast<std::size_t>(j)] = {count, std::move(*line)};
        }
      }
      ++count;
    }
    if (count < target_per_corpus) {
      throw ValidationError("balance: corpus \"" + corpus.name + "\" holds " +
                            std::to_string(count) + " records, target is " +
                            std::to_string(target_per_corpus));
    }
    std::sort(reservoir.begin(), reservoir.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [index, line] : reservoir) sink(line);
  }
}

Corruptor Corruptor::from_distribution(model::ErrorDistribution dist) {
  Corruptor c;
  c.dist_ = std::make_shared<const model::ErrorDistribution>(std::move(dist));
  return c;
}

Corruptor Corruptor::from_heuristic(heuristic::HeuristicConfig cfg,
                                    heuristic::KeyboardLayout layout,
                                    model::ConfusionTable confusion,
                                    heuristic::WrongWordTable wrong_words) {
  heuristic::require_valid(cfg);
  Corruptor c;
  c.heuristic_ = std::make_shared<const HeuristicBundle>(HeuristicBundle{
      cfg, std::move(layout), std::move(confusion), std::move(wrong_words)});
  return c;
}

std::string Corruptor::corrupt(std::string_view sentence, std::uint64_t seed) const {
  if (dist_) return sbsc::corrupt(sentence, *dist_, seed).corrupted;
  if (heuristic_->cfg.level == heuristic::Level::kWord) {
    return heuristic::augment_word_level(sentence, heuristic_->cfg, heuristic_->layout,
                                         heuristic_->confusion, seed);
  }
  return heuristic::augment_sentence_level(sentence, heuristic_->cfg,
                                           heuristic_->wrong_words, seed);
}

std::uint32_t Corruptor::max_variants() const {
  if (heuristic_) return static_cast<std::uint32_t>(heuristic_->cfg.mult_num);
  return 0;
}

void build_pretrain_corpus(const LineSource& clean, const model::ErrorDistribution& dist,
                           std::uint32_t density_factor, std::uint64_t seed,
                           const sbsc::PairSink& sink, sbsc::CorpusSummary* summary,
                           unsigned workers) {
  const model::ErrorDistribution scaled = model::scale_density(dist, density_factor);
  sbsc::corrupt_corpus(clean, scaled, seed, sink, summary, workers);
}

namespace {

struct AugmentItem {
  bool ok = false;
  model::SentencePair pair;
};

// Shared by add and concat: map pairs through the corruptor, corrupting the
// chosen side, in deterministic per-ordinal seeding.
void map_pairs(const model::PairSource& next, const Corruptor& corruptor,
               std::uint64_t pass_seed, bool corrupt_correct_side,
               const sbsc::PairSink& sink, AugmentSummary& summary, unsigned workers) {
  parallel_ordered_map<model::SentencePair, AugmentItem>(
      next, workers, 1024,
      [&corruptor, pass_seed, corrupt_correct_side](std::uint64_t ordinal,
                                                    const model::SentencePair& pair) {
        AugmentItem item;
        try {
          const std::uint64_t seed = mix_seed(pass_seed, ordinal);
          if (corrupt_correct_side) {
            item.pair = {corruptor.corrupt(pair.correct, seed), pair.correct};
          } else {
            item.pair = {corruptor.corrupt(pair.corrupted, seed), pair.correct};
          }
          item.ok = true;
        } catch (const ValidationError&) {
        } catch (const ParseError&) {
        }
        return item;
      },
      [&](std::uint64_t, AugmentItem&& item) {
        ++summary.pairs_in;
        if (!item.ok) {
          ++summary.skipped;
          return;
        }
        ++summary.pairs_out;
        sink(item.pair);
      });
}

}  // namespace

void augment_add(const model::PairSource& next, const Corruptor& corruptor,
                 std::uint64_t seed, const sbsc::PairSink& sink, AugmentSummary* summary,
                 unsigned workers) {
  AugmentSummary local;
  map_pairs(next, corruptor, seed, /*corrupt_correct_side=*/false, sink, local, workers);
  if (summary != nullptr) *summary = local;
}

void augment_concat(const std::function<model::PairSource()>& reopen,
                    const Corruptor& corruptor, std::uint32_t copies, std::uint64_t seed,
                    const sbsc::PairSink& sink, AugmentSummary* summary, unsigned workers) {
  if (copies < 1) throw ValidationError("augment_concat: copies must be at least 1");
  const std::uint32_t cap = corruptor.max_variants();
  if (cap != 0 && copies > cap) {
    throw ValidationError("augment_concat: copies " + std::to_string(copies) +
                          " exceeds the corruptor's mult_num " + std::to_string(cap));
  }

  AugmentSummary local;

  // Pass 0 forwards the originals untouched.
  {
    auto next = reopen();
    while (auto pair = next()) {
      ++local.pairs_in;
      ++local.pairs_out;
      sink(*pair);
    }
  }
  for (std::uint32_t copy = 1; copy <= copies; ++copy) {
    AugmentSummary pass;
    map_pairs(reopen(), corruptor, mix_seed(seed, copy), /*corrupt_correct_side=*/true,
              sink, pass, workers);
    local.pairs_out += pass.pairs_out;
    local.skipped += pass.skipped;
  }
  if (summary != nullptr) *summary = local;
}

}  // namespace spellforge::pipeline
