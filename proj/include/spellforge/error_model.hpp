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

#ifndef SPELLFORGE_ERROR_MODEL_HPP_
#define SPELLFORGE_ERROR_MODEL_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spellforge/edit_alignment.hpp"

namespace spellforge::model {

// One (corrupted, correct) training pair. Errors are mined as the edits that
// turn the correct text into the corrupted one.
struct SentencePair {
  std::string corrupted;
  std::string correct;

  bool operator==(const SentencePair&) const = default;
};

using PairSource = std::function<std::optional<SentencePair>()>;

using ConfusionTable = std::map<char32_t, std::map<char32_t, double>>;

// Laplace smoothing constant applied to confusion rows at sampling time.
// Stored rows stay unsmoothed so the model file reflects the data.
inline constexpr double kConfusionSmoothingAlpha = 0.1;

// The mined statistical error model. All tables hold probabilities; each
// non-empty table sums to 1 within 1e-9.
struct ErrorDistribution {
  static constexpr int kSchemaVersion = 1;
  static constexpr std::size_t kPositionBins = 10;

  // P(sentence contains exactly n character errors).
  std::map<std::uint32_t, double> errors_per_sentence;
  // P(error kind) over the four non-match kinds; empty when no errors seen.
  std::map<align::EditKind, double> type_mix;
  // P(error lands in relative-position bin); all-zero when no errors seen.
  // Relative position = src_pos / correct-sentence character length.
  std::array<double, kPositionBins> positional_profile{};
  // P(typed char | intended char), identity excluded, rows unsmoothed.
  ConfusionTable confusion;
  // Character frequencies of inserted and deleted characters.
  std::map<char32_t, double> insert_chars;
  std::map<char32_t, double> delete_chars;
  int schema_version = kSchemaVersion;

  double mean_errors_per_sentence() const;
  // Every character appearing in confusion/insert/delete tables, sorted.
  std::vector<char32_t> observed_alphabet() const;

  bool operator==(const ErrorDistribution&) const = default;
};

struct ScanSummary {
  std::uint64_t pairs_scanned = 0;
  std::uint64_t pairs_skipped = 0;
};

// Streaming aggregation of alignment statistics. merge() is associative and
// commutative, so pair streams may be sharded across workers.
class ScanAccumulator {
 public:
  // Aligns one pair and folds its edits in. Returns false (and counts a
  // skip) for pairs that cannot be used: empty after trimming, ill-formed
  // UTF-8, or longer than the alignment cap.
  bool add_pair(const SentencePair& pair);

  void merge(const ScanAccumulator& other);

  std::uint64_t pairs_scanned() const { return pairs_scanned_; }
  std::uint64_t pairs_skipped() const { return pairs_skipped_; }

  // Normalizes counts into probabilities. Throws ValidationError when no
  // pair contributed.
  ErrorDistribution finalize() const;

 private:
  std::uint64_t pairs_scanned_ = 0;
  std::uint64_t pairs_skipped_ = 0;
  std::map<std::uint32_t, std::uint64_t> errors_per_sentence_;
  std::map<align::EditKind, std::uint64_t> type_counts_;
  std::array<std::uint64_t, ErrorDistribution::kPositionBins> bin_counts_{};
  std::map<char32_t, std::map<char32_t, std::uint64_t>> confusion_counts_;
  std::map<char32_t, std::uint64_t> insert_counts_;
  std::map<char32_t, std::uint64_t> delete_counts_;
};

// Drains the pair stream into a distribution. Throws ValidationError when
// the stream is empty or no pair is readable.
ErrorDistribution scan_corpus(const PairSource& next, ScanSummary* summary = nullptr);

// Remaps every histogram support value n to n*factor; probabilities and all
// other tables are untouched. factor counts as a positive integer.
ErrorDistribution scale_density(const ErrorDistribution& dist, std::uint32_t factor);

void save(const ErrorDistribution& dist, std::ostream& out);
void save(const ErrorDistribution& dist, const std::string& path);
ErrorDistribution load(std::istream& in);
ErrorDistribution load_file(const std::string& path);

// Sampling weights for substituting `intended` by each other character of
// `alphabet`: stored row probability plus kConfusionSmoothingAlpha. Empty
// when the alphabet holds no other character.
std::vector<std::pair<char32_t, double>> smoothed_confusion_row(
    const ConfusionTable& confusion, char32_t intended,
    const std::vector<char32_t>& alphabet);

// Standalone confusion data file {"char": {"char": weight, ...}, ...};
// weights are positive and rows normalize to probabilities on load.
ConfusionTable parse_confusion(const std::string& text);
ConfusionTable load_confusion_file(const std::string& path);

// Relative-position bin for an error at src_pos in a sentence of `length`
// characters (length > 0).
std::size_t position_bin(std::size_t src_pos, std::size_t length);

}  // namespace spellforge::model

#endif  // SPELLFORGE_ERROR_MODEL_HPP_
