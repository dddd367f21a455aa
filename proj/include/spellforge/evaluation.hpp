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

#ifndef SPELLFORGE_EVALUATION_HPP_
#define SPELLFORGE_EVALUATION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spellforge::eval {

// Correction-level scoring of spell-checker output: a correction is a
// maximal changed token span of the source, and a hypothesis correction
// counts as true positive only when the reference contains the identical
// span and replacement.

enum class PunctuationMode : std::uint8_t { kKeep, kStrip };

struct EvalTriple {
  std::string source;      // possibly erroneous input
  std::string hypothesis;  // system output
  std::string reference;   // expert correction
};

using TripleSource = std::function<std::optional<EvalTriple>()>;

struct Correction {
  std::size_t begin = 0;  // token span [begin, end) in the source
  std::size_t end = 0;
  std::vector<std::string> replacement;

  auto operator<=>(const Correction&) const = default;
};

struct SentenceCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  bool operator==(const SentenceCounts&) const = default;
};

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;         // reference tokens matched by the hypothesis
  double correction_rate = 0.0;  // misspelled source tokens restored to the reference
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::vector<SentenceCounts> per_sentence;
};

// Whitespace tokenizer; in strip mode each token loses leading and trailing
// punctuation (inner hyphens/apostrophes survive) and all-punctuation tokens
// disappear.
std::vector<std::string> tokenize(std::string_view text, PunctuationMode mode);

// The strip-mode transform applied to whole text; tokens rejoin with single
// spaces.
std::string strip_punctuation(std::string_view text);

// Token-level edit alignment of source vs other; each maximal changed region
// becomes one Correction. Identical sequences yield none.
std::vector<Correction> extract_corrections(const std::vector<std::string>& source_tokens,
                                            const std::vector<std::string>& other_tokens);

// Micro-averaged over the whole stream: counts aggregate before P/R/F1.
// Conventions where a quotient is empty: P := 1 when TP+FP == 0, R := 1 when
// TP+FN == 0, F1 := 0 when P+R == 0, correction_rate := 1 when the reference
// marks no source token as misspelled. Throws ValidationError on an empty
// stream.
EvalReport evaluate(const TripleSource& next, PunctuationMode mode);

}  // namespace spellforge::eval

#endif  // SPELLFORGE_EVALUATION_HPP_
