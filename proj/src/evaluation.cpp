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

#include "spellforge/evaluation.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "spellforge/errors.hpp"
#include "spellforge/unicode.hpp"

namespace spellforge::eval {

namespace {

std::string strip_token(const std::u32string& token) {
  std::size_t begin = 0;
  std::size_t end = token.size();
  while (begin < end && is_punctuation(token[begin])) ++begin;
  while (end > begin && is_punctuation(token[end - 1])) --end;
  return encode_utf8(std::u32string_view(token).substr(begin, end - begin));
}

enum class StepKind : std::uint8_t { kMatch, kSubstitute, kDelete, kInsert };

struct Step {
  StepKind kind;
  std::size_t src_index = 0;    // valid for match/substitute/delete
  std::size_t other_index = 0;  // valid for match/substitute/insert
};

// Token-level Levenshtein alignment (no transpositions at word level). Tie
// order match > substitute > delete > insert keeps changed regions compact
// and the trace deterministic.
std::vector<Step> align_tokens(const std::vector<std::string>& src,
                               const std::vector<std::string>& other) {
  const std::size_t n = src.size();
  const std::size_t m = other.size();
  std::vector<std::vector<std::int32_t>> dp(n + 1, std::vector<std::int32_t>(m + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) dp[i][0] = static_cast<std::int32_t>(i);
  for (std::size_t j = 0; j <= m; ++j) dp[0][j] = static_cast<std::int32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::int32_t sub = dp[i - 1][j - 1] + (src[i - 1] == other[j - 1] ? 0 : 1);
      dp[i][j] = std::min({sub, dp[i - 1][j] + 1, dp[i][j - 1] + 1});
    }
  }

  std::vector<Step> steps;
  steps.reserve(n + m);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && src[i - 1] == other[j - 1] && dp[i][j] == dp[i - 1][j - 1]) {
      steps.push_back({StepKind::kMatch, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && j > 0 && dp[i][j] == dp[i - 1][j - 1] + 1) {
      steps.push_back({StepKind::kSubstitute, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && dp[i][j] == dp[i - 1][j] + 1) {
      steps.push_back({StepKind::kDelete, i - 1, 0});
      --i;
    } else {
      steps.push_back({StepKind::kInsert, i, j - 1});
      --j;
    }
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::size_t span_tokens(const Correction& c) { return c.end - c.begin; }

struct TripleCounts {
  SentenceCounts counts;
  std::uint64_t reference_tokens = 0;
  std::uint64_t matched_reference_tokens = 0;
  std::uint64_t misspelled_tokens = 0;
  std::uint64_t fixed_tokens = 0;
};

TripleCounts score_triple(const EvalTriple& triple, PunctuationMode mode) {
  const auto source = tokenize(triple.source, mode);
  const auto hypothesis = tokenize(triple.hypothesis, mode);
  const auto reference = tokenize(triple.reference, mode);

  const auto hyp_corrections = extract_corrections(source, hypothesis);
  const auto ref_corrections = extract_corrections(source, reference);

  const std::set<Correction> hyp_set(hyp_corrections.begin(), hyp_corrections.end());
  const std::set<Correction> ref_set(ref_corrections.begin(), ref_corrections.end());

  TripleCounts out;
  for (const auto& c : hyp_set) {
    if (ref_set.count(c) != 0) {
      ++out.counts.tp;
    } else {
      ++out.counts.fp;
    }
  }
  for (const auto& c : ref_set) {
    if (hyp_set.count(c) == 0) ++out.counts.fn;
    out.misspelled_tokens += span_tokens(c);
    if (hyp_set.count(c) != 0) out.fixed_tokens += span_tokens(c);
  }

  out.reference_tokens = reference.size();
  for (const Step& step : align_tokens(reference, hypothesis)) {
    if (step.kind == StepKind::kMatch) ++out.matched_reference_tokens;
  }
  return out;
}

double ratio_or(double numerator, double denominator, double when_empty) {
  return denominator > 0.0 ? numerator / denominator : when_empty;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, PunctuationMode mode) {
  std::vector<std::string> tokens;
  const std::u32string decoded = decode_utf8(text);
  std::size_t i = 0;
  while (i < decoded.size()) {
    while (i < decoded.size() && is_space(decoded[i])) ++i;
    if (i >= decoded.size()) break;
    std::size_t j = i;
    while (j < decoded.size() && !is_space(decoded[j])) ++j;
    std::u32string token = decoded.substr(i, j - i);
    if (mode == PunctuationMode::kStrip) {
      std::string stripped = strip_token(token);
      if (!stripped.empty()) tokens.push_back(std::move(stripped));
    } else {
      tokens.push_back(encode_utf8(token));
    }
    i = j;
  }
  return tokens;
}

std::string strip_punctuation(std::string_view text) {
  const auto tokens = tokenize(text, PunctuationMode::kStrip);
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::vector<Correction> extract_corrections(const std::vector<std::string>& source_tokens,
                                            const std::vector<std::string>& other_tokens) {
  const auto steps = align_tokens(source_tokens, other_tokens);

  std::vector<Correction> corrections;
  std::size_t k = 0;
  std::size_t src_cursor = 0;
  while (k < steps.size()) {
    if (steps[k].kind == StepKind::kMatch) {
      src_cursor = steps[k].src_index + 1;
      ++k;
      continue;
    }
    // Maximal run of non-match steps becomes one correction.
    Correction c;
    c.begin = src_cursor;
    c.end = src_cursor;
    while (k < steps.size() && steps[k].kind != StepKind::kMatch) {
      const Step& step = steps[k];
      switch (step.kind) {
        case StepKind::kSubstitute:
          c.end = step.src_index + 1;
          c.replacement.push_back(other_tokens[step.other_index]);
          break;
        case StepKind::kDelete:
          c.end = step.src_index + 1;
          break;
        case StepKind::kInsert:
          c.replacement.push_back(other_tokens[step.other_index]);
          break;
        case StepKind::kMatch:
          break;
      }
      ++k;
    }
    src_cursor = c.end;
    corrections.push_back(std::move(c));
  }
  return corrections;
}

EvalReport evaluate(const TripleSource& next, PunctuationMode mode) {
  EvalReport report;
  std::uint64_t triples = 0;
  std::uint64_t reference_tokens = 0;
  std::uint64_t matched_reference_tokens = 0;
  std::uint64_t misspelled_tokens = 0;
  std::uint64_t fixed_tokens = 0;

  while (auto triple = next()) {
    ++triples;
    const TripleCounts tc = score_triple(*triple, mode);
    report.per_sentence.push_back(tc.counts);
    report.tp += tc.counts.tp;
    report.fp += tc.counts.fp;
    report.fn += tc.counts.fn;
    reference_tokens += tc.reference_tokens;
    matched_reference_tokens += tc.matched_reference_tokens;
    misspelled_tokens += tc.misspelled_tokens;
    fixed_tokens += tc.fixed_tokens;
  }
  if (triples == 0) throw ValidationError("evaluate: empty triple stream");

  report.precision = ratio_or(static_cast<double>(report.tp),
                              static_cast<double>(report.tp + report.fp), 1.0);
  report.recall = ratio_or(static_cast<double>(report.tp),
                           static_cast<double>(report.tp + report.fn), 1.0);
  report.f1 = (report.precision + report.recall) > 0.0
                  ? 2.0 * report.precision * report.recall /
                        (report.precision + report.recall)
                  : 0.0;
  report.accuracy = ratio_or(static_cast<double>(matched_reference_tokens),
                             static_cast<double>(reference_tokens), 1.0);
  report.correction_rate = ratio_or(static_cast<double>(fixed_tokens),
                                    static_cast<double>(misspelled_tokens), 1.0);
  return report;
}

}  // namespace spellforge::eval
