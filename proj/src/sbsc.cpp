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

#include "spellforge/sbsc.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "spellforge/errors.hpp"
#include "spellforge/parallel.hpp"
#include "spellforge/rng.hpp"
#include "spellforge/unicode.hpp"

namespace spellforge::sbsc {

namespace {

constexpr int kPositionRetries = 8;

using align::EditKind;
using align::EditOp;

struct WeightedChars {
  std::vector<char32_t> values;
  std::vector<double> weights;

  bool empty() const { return values.empty(); }
  char32_t sample(Rng& rng) const { return values[rng.weighted(weights)]; }
};

WeightedChars from_table(const std::map<char32_t, double>& table) {
  WeightedChars out;
  out.values.reserve(table.size());
  out.weights.reserve(table.size());
  for (const auto& [c, p] : table) {
    if (p <= 0.0) continue;
    out.values.push_back(c);
    out.weights.push_back(p);
  }
  return out;
}

std::vector<char32_t> distinct_chars(std::u32string_view text) {
  std::set<char32_t> s(text.begin(), text.end());
  return {s.begin(), s.end()};
}

// Sampling context for one sentence.
class Planner {
 public:
  Planner(std::u32string_view sentence, const model::ErrorDistribution& dist, Rng& rng)
      : sentence_(sentence),
        dist_(dist),
        rng_(rng),
        alphabet_(dist.observed_alphabet()),
        insert_pool_(from_table(dist.insert_chars)),
        sentence_alphabet_(distinct_chars(sentence)) {
    double total = 0.0;
    for (double p : dist_.positional_profile) total += p;
    profile_usable_ = total > 0.0;
    for (const auto& [kind, p] : dist_.type_mix) {
      if (p <= 0.0) continue;
      kinds_.push_back(kind);
      kind_weights_.push_back(p);
    }
  }

  bool can_sample_kind() const { return !kinds_.empty(); }

  EditKind sample_kind() { return kinds_[rng_.weighted(kind_weights_)]; }

  // Attempts to place one error of the given kind. Transpositions that fail
  // their retries degrade to a substitution attempt.
  std::optional<EditOp> place(EditKind kind) {
    auto op = try_place(kind);
    if (!op && kind == EditKind::kTransposition) op = try_place(EditKind::kSubstitution);
    return op;
  }

 private:
  std::optional<EditOp> try_place(EditKind kind) {
    for (int attempt = 0; attempt < kPositionRetries; ++attempt) {
      const std::size_t slots = kind == EditKind::kInsertion ? sentence_.size() + 1
                                                             : sentence_.size();
      if (slots == 0) return std::nullopt;
      const std::size_t pos = sample_position(slots);

      switch (kind) {
        case EditKind::kInsertion: {
          if (consumed_.count(pos) != 0) continue;
          const char32_t c = sample_insert_char();
          inserted_at_.insert(pos);
          return align::make_insertion(pos, c);
        }
        case EditKind::kDeletion: {
          if (position_taken(pos)) continue;
          consumed_.insert(pos);
          return align::make_deletion(pos, sentence_[pos]);
        }
        case EditKind::kSubstitution: {
          if (position_taken(pos)) continue;
          const auto replacement = sample_substitution(sentence_[pos]);
          if (!replacement) return std::nullopt;
          consumed_.insert(pos);
          return align::make_substitution(pos, sentence_[pos], *replacement);
        }
        case EditKind::kTransposition: {
          if (pos + 1 >= sentence_.size()) continue;  // tail slot, resample
          if (sentence_[pos] == sentence_[pos + 1]) continue;
          if (position_taken(pos) || position_taken(pos + 1)) continue;
          consumed_.insert(pos);
          consumed_.insert(pos + 1);
          return align::make_transposition(pos, sentence_[pos], sentence_[pos + 1]);
        }
        case EditKind::kMatch:
          return std::nullopt;
      }
    }
    return std::nullopt;
  }

  bool position_taken(std::size_t pos) const {
    return consumed_.count(pos) != 0 || inserted_at_.count(pos) != 0;
  }

  std::size_t sample_position(std::size_t slots) {
    if (!profile_usable_) return rng_.index(slots);
    const std::size_t bin = rng_.weighted(dist_.positional_profile);
    const double rel =
        (static_cast<double>(bin) + rng_.unit()) / model::ErrorDistribution::kPositionBins;
    const auto pos = static_cast<std::size_t>(rel * static_cast<double>(slots));
    return std::min(pos, slots - 1);
  }

  char32_t sample_insert_char() {
    if (!insert_pool_.empty()) return insert_pool_.sample(rng_);
    // Sparse model: degrade to the sentence's own alphabet.
    return sentence_alphabet_[rng_.index(sentence_alphabet_.size())];
  }

  std::optional<char32_t> sample_substitution(char32_t intended) {
    auto row = model::smoothed_confusion_row(dist_.confusion, intended, alphabet_);
    if (row.empty()) {
      // Model knows no characters: fall back to the sentence's alphabet.
      std::vector<char32_t> pool;
      for (char32_t c : sentence_alphabet_) {
        if (c != intended) pool.push_back(c);
      }
      if (pool.empty()) return std::nullopt;
      return pool[rng_.index(pool.size())];
    }
    std::vector<double> weights;
    weights.reserve(row.size());
    for (const auto& [c, w] : row) weights.push_back(w);
    return row[rng_.weighted(weights)].first;
  }

  std::u32string_view sentence_;
  const model::ErrorDistribution& dist_;
  Rng& rng_;
  std::vector<char32_t> alphabet_;
  WeightedChars insert_pool_;
  std::vector<char32_t> sentence_alphabet_;
  std::vector<EditKind> kinds_;
  std::vector<double> kind_weights_;
  bool profile_usable_ = false;
  std::set<std::size_t> consumed_;
  std::set<std::size_t> inserted_at_;
};

std::uint32_t sample_error_count(const model::ErrorDistribution& dist, Rng& rng) {
  std::vector<std::uint32_t> counts;
  std::vector<double> weights;
  counts.reserve(dist.errors_per_sentence.size());
  weights.reserve(dist.errors_per_sentence.size());
  for (const auto& [n, p] : dist.errors_per_sentence) {
    if (p <= 0.0) continue;
    counts.push_back(n);
    weights.push_back(p);
  }
  if (counts.empty()) {
    throw ValidationError("corrupt: distribution has no errors_per_sentence mass");
  }
  return counts[rng.weighted(weights)];
}

}  // namespace

CorruptResult corrupt(std::string_view sentence, const model::ErrorDistribution& dist,
                      std::uint64_t seed) {
  if (sentence.empty()) throw ValidationError("corrupt: sentence is empty");
  const std::u32string source = decode_utf8(sentence);
  if (source.size() > align::kMaxAlignLength) {
    throw ValidationError("corrupt: sentence exceeds " +
                          std::to_string(align::kMaxAlignLength) + " characters");
  }

  Rng rng(seed);
  CorruptionPlan plan;
  plan.seed = seed;

  std::uint32_t target = sample_error_count(dist, rng);
  // Cap density so sentences stay recognizable.
  const auto cap = static_cast<std::uint32_t>((source.size() + 1) / 2);
  if (target > cap) {
    target = cap;
    plan.count_clamped = true;
  }

  if (target > 0) {
    if (dist.type_mix.empty()) {
      throw ValidationError("corrupt: distribution draws errors but type_mix is empty");
    }
    Planner planner(source, dist, rng);
    if (!planner.can_sample_kind()) {
      throw ValidationError("corrupt: type_mix has no positive mass");
    }
    for (std::uint32_t e = 0; e < target; ++e) {
      auto op = planner.place(planner.sample_kind());
      if (op) {
        plan.ops.push_back(std::move(*op));
      } else {
        ++plan.dropped;
      }
    }
    // Insertion chains keep their sampling order; everything else has a
    // unique position, so the plan is deterministic.
    std::stable_sort(plan.ops.begin(), plan.ops.end(),
                     [](const EditOp& a, const EditOp& b) { return a.src_pos < b.src_pos; });
  }

  CorruptResult result;
  result.corrupted = encode_utf8(align::apply_ops(source, plan.ops));
  result.plan = std::move(plan);
  return result;
}

void corrupt_corpus(const LineSource& next, const model::ErrorDistribution& dist,
                    std::uint64_t base_seed, const PairSink& sink, CorpusSummary* summary,
                    unsigned workers) {
  struct Item {
    bool ok = false;
    model::SentencePair pair;
    bool clamped = false;
    std::uint32_t dropped = 0;
  };

  CorpusSummary local;
  parallel_ordered_map<std::string, Item>(
      next, workers, 1024,
      [&dist, base_seed](std::uint64_t ordinal, const std::string& line) {
        Item item;
        try {
          auto result = corrupt(line, dist, mix_seed(base_seed, ordinal));
          item.ok = true;
          item.pair = {std::move(result.corrupted), line};
          item.clamped = result.plan.count_clamped;
          item.dropped = result.plan.dropped;
        } catch (const ValidationError&) {
          item.ok = false;
        } catch (const ParseError&) {
          item.ok = false;
        }
        return item;
      },
      [&](std::uint64_t, Item&& item) {
        ++local.sentences_in;
        if (!item.ok) {
          ++local.skipped;
          return;
        }
        ++local.pairs_out;
        if (item.clamped) ++local.count_clamped;
        local.dropped_ops += item.dropped;
        sink(item.pair);
      });

  if (summary != nullptr) *summary = local;
}

}  // namespace spellforge::sbsc
