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

#ifndef SPELLFORGE_SBSC_HPP_
#define SPELLFORGE_SBSC_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "spellforge/edit_alignment.hpp"
#include "spellforge/error_model.hpp"
#include "spellforge/streams.hpp"

namespace spellforge::sbsc {

// Statistic-based spelling corruption: draws an error count, error kinds,
// positions, and characters from a mined ErrorDistribution and replays them
// onto a clean sentence.

struct CorruptionPlan {
  std::uint64_t seed = 0;
  // Non-match ops in ascending src_pos against the original sentence; no two
  // ops share a position except insertion chains.
  std::vector<align::EditOp> ops;
  bool count_clamped = false;   // drawn error count hit the ceil(len/2) cap
  std::uint32_t dropped = 0;    // errors abandoned after bounded retries
};

struct CorruptResult {
  std::string corrupted;
  CorruptionPlan plan;
};

// Deterministic in (sentence, dist, seed). Throws ValidationError on an
// empty sentence or a distribution without error-count mass.
CorruptResult corrupt(std::string_view sentence, const model::ErrorDistribution& dist,
                      std::uint64_t seed);

struct CorpusSummary {
  std::uint64_t sentences_in = 0;
  std::uint64_t pairs_out = 0;
  std::uint64_t skipped = 0;
  std::uint64_t count_clamped = 0;
  std::uint64_t dropped_ops = 0;
};

using PairSink = std::function<void(const model::SentencePair&)>;

// Streaming corruption of a sentence-per-line corpus. Sentence i is
// corrupted with seed mix_seed(base_seed, i), so output is identical for any
// worker count. Unusable lines (empty, ill-formed UTF-8, over the alignment
// cap) are skipped and counted.
void corrupt_corpus(const LineSource& next, const model::ErrorDistribution& dist,
                    std::uint64_t base_seed, const PairSink& sink,
                    CorpusSummary* summary = nullptr, unsigned workers = 1);

}  // namespace spellforge::sbsc

#endif  // SPELLFORGE_SBSC_HPP_
