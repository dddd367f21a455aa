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

#include <doctest.h>

#include <string>
#include <vector>

#include "spellforge/edit_alignment.hpp"
#include "spellforge/errors.hpp"
#include "spellforge/rng.hpp"
#include "spellforge/sbsc.hpp"
#include "spellforge/unicode.hpp"

using namespace spellforge;
using namespace spellforge::sbsc;
using align::EditKind;
using model::ErrorDistribution;

namespace {

ErrorDistribution substitution_model() {
  ErrorDistribution d;
  d.errors_per_sentence = {{1, 1.0}};
  d.type_mix = {{EditKind::kSubstitution, 1.0}};
  d.positional_profile.fill(0.1);
  d.confusion = {{U'a', {{U'o', 1.0}}},
                 {U'e', {{U'i', 1.0}}},
                 {U'o', {{U'a', 1.0}}}};
  return d;
}

ErrorDistribution mixed_model() {
  ErrorDistribution d;
  d.errors_per_sentence = {{0, 0.2}, {1, 0.5}, {2, 0.3}};
  d.type_mix = {{EditKind::kSubstitution, 0.5},
                {EditKind::kDeletion, 0.2},
                {EditKind::kInsertion, 0.2},
                {EditKind::kTransposition, 0.1}};
  d.positional_profile.fill(0.1);
  d.confusion = {{U'a', {{U'o', 0.6}, {U'e', 0.4}}}, {U't', {{U'd', 1.0}}}};
  d.insert_chars = {{U'x', 0.5}, {U'q', 0.5}};
  d.delete_chars = {{U'e', 1.0}};
  return d;
}

std::string random_sentence(Rng& rng, std::size_t min_len, std::size_t max_len) {
  const std::size_t len = min_len + rng.index(max_len - min_len + 1);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) {
    if (i > 0 && i % 6 == 5) {
      s.push_back(' ');
    } else {
      s.push_back(static_cast<char>('a' + rng.index(26)));
    }
  }
  return s;
}

}  // namespace

TEST_SUITE("sbsc") {

TEST_CASE("zero-error distribution returns the sentence unchanged") {
  ErrorDistribution d;
  d.errors_per_sentence = {{0, 1.0}};
  const auto result = corrupt("nothing happens here", d, 999);
  CHECK(result.corrupted == "nothing happens here");
  CHECK(result.plan.ops.empty());
  CHECK_FALSE(result.plan.count_clamped);
}

TEST_CASE("identical inputs and seed give identical outputs") {
  const ErrorDistribution d = mixed_model();
  const std::string sentence = "statistics based corruption must be reproducible";
  const auto a = corrupt(sentence, d, 42);
  const auto b = corrupt(sentence, d, 42);
  CHECK(a.corrupted == b.corrupted);
  CHECK(a.plan.ops == b.plan.ops);

  const auto c = corrupt(sentence, d, 43);
  // Not a hard guarantee, but with one error on a long sentence a different
  // seed virtually always lands elsewhere.
  CHECK((c.corrupted != a.corrupted || c.plan.ops != a.plan.ops));
}

TEST_CASE("plans replay onto the source exactly") {
  const ErrorDistribution d = mixed_model();
  Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::string sentence = random_sentence(rng, 20, 60);
    const auto result = corrupt(sentence, d, rng.next_u64());
    const std::u32string source = decode_utf8(sentence);
    CHECK(encode_utf8(align::apply_ops(source, result.plan.ops)) == result.corrupted);
    // Plan respects position uniqueness except insertion chains.
    for (std::size_t i = 1; i < result.plan.ops.size(); ++i) {
      const auto& prev = result.plan.ops[i - 1];
      const auto& cur = result.plan.ops[i];
      CHECK(prev.src_pos <= cur.src_pos);
      if (prev.src_pos == cur.src_pos) {
        CHECK(prev.kind == EditKind::kInsertion);
        CHECK(cur.kind == EditKind::kInsertion);
      }
    }
  }
}

TEST_CASE("preconditions are structural errors") {
  const ErrorDistribution d = substitution_model();
  CHECK_THROWS_AS(corrupt("", d, 1), ValidationError);

  ErrorDistribution empty;
  CHECK_THROWS_AS(corrupt("sentence", empty, 1), ValidationError);
}

TEST_CASE("error count clamps at half the sentence length") {
  ErrorDistribution d = substitution_model();
  d.errors_per_sentence = {{50, 1.0}};
  const std::string sentence = "abcdefghij";  // 10 chars -> cap 5
  const auto result = corrupt(sentence, d, 3);
  CHECK(result.plan.count_clamped);
  CHECK(result.plan.ops.size() + result.plan.dropped == 5);
}

TEST_CASE("impossible transpositions degrade to substitutions") {
  ErrorDistribution d;
  d.errors_per_sentence = {{1, 1.0}};
  d.type_mix = {{EditKind::kTransposition, 1.0}};
  d.positional_profile.fill(0.1);
  d.confusion = {{U'a', {{U'b', 1.0}}}};

  // Single character: no adjacent pair exists.
  const auto single = corrupt("a", d, 5);
  REQUIRE(single.plan.ops.size() == 1);
  CHECK(single.plan.ops[0].kind == EditKind::kSubstitution);
  CHECK(single.corrupted == "b");

  // Equal adjacent characters cannot visibly transpose.
  const auto doubled = corrupt("aa", d, 6);
  REQUIRE(doubled.plan.ops.size() == 1);
  CHECK(doubled.plan.ops[0].kind == EditKind::kSubstitution);
}

TEST_CASE("insertions degrade to the sentence alphabet when the model has none") {
  ErrorDistribution d;
  d.errors_per_sentence = {{1, 1.0}};
  d.type_mix = {{EditKind::kInsertion, 1.0}};
  const std::string sentence = "zzz";
  const auto result = corrupt(sentence, d, 11);
  REQUIRE(result.plan.ops.size() == 1);
  CHECK(result.plan.ops[0].kind == EditKind::kInsertion);
  CHECK(result.corrupted == "zzzz");
}

TEST_CASE("statistical round trip recovers the sampling mean") {
  const ErrorDistribution d = substitution_model();
  Rng sentence_rng(123);

  model::ScanAccumulator rescan;
  const int n = 2000;
  for (int i = 0; i < n; ++i) {
    const std::string sentence = random_sentence(sentence_rng, 30, 60);
    const auto result = corrupt(sentence, d, mix_seed(77, static_cast<std::uint64_t>(i)));
    rescan.add_pair({result.corrupted, sentence});
  }
  const ErrorDistribution observed = rescan.finalize();
  CHECK(observed.mean_errors_per_sentence() == doctest::Approx(1.0).epsilon(0.05));
  CHECK(observed.type_mix.at(EditKind::kSubstitution) > 0.95);
}

TEST_CASE("corrupt_corpus is deterministic and order preserving") {
  const ErrorDistribution d = mixed_model();
  const std::vector<std::string> sentences{
      "first sentence of the little corpus",
      "second sentence with more characters in it",
      "third one rounds out the fixture",
  };

  auto run = [&](unsigned workers) {
    std::vector<model::SentencePair> out;
    CorpusSummary summary;
    corrupt_corpus(vector_source(sentences), d, 99,
                   [&out](const model::SentencePair& p) { out.push_back(p); }, &summary,
                   workers);
    CHECK(summary.sentences_in == sentences.size());
    CHECK(summary.pairs_out == out.size());
    return out;
  };

  const auto serial = run(1);
  const auto rerun = run(1);
  const auto parallel = run(4);
  CHECK(serial == rerun);
  CHECK(serial == parallel);
  REQUIRE(serial.size() == sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    CHECK(serial[i].correct == sentences[i]);
    const auto direct = corrupt(sentences[i], d, mix_seed(99, i));
    CHECK(serial[i].corrupted == direct.corrupted);
  }
}

TEST_CASE("corrupt_corpus skips unusable lines with a count") {
  const ErrorDistribution d = substitution_model();
  const std::vector<std::string> lines{"good sentence here", "", "\xff broken", "another good"};
  CorpusSummary summary;
  std::vector<model::SentencePair> out;
  corrupt_corpus(vector_source(lines), d, 1,
                 [&out](const model::SentencePair& p) { out.push_back(p); }, &summary, 1);
  CHECK(summary.sentences_in == 4);
  CHECK(summary.skipped == 2);
  CHECK(out.size() == 2);
}

TEST_CASE("empty stream yields an empty stream and a zero summary") {
  const ErrorDistribution d = substitution_model();
  CorpusSummary summary;
  std::vector<model::SentencePair> out;
  corrupt_corpus(vector_source({}), d, 1,
                 [&out](const model::SentencePair& p) { out.push_back(p); }, &summary, 1);
  CHECK(out.empty());
  CHECK(summary.sentences_in == 0);
  CHECK(summary.pairs_out == 0);
}

TEST_CASE("parallel corpus run matches the serial oracle on 1000 sentences") {
  const ErrorDistribution d = mixed_model();
  Rng rng(2024);
  std::vector<std::string> sentences;
  sentences.reserve(1000);
  for (int i = 0; i < 1000; ++i) sentences.push_back(random_sentence(rng, 20, 80));

  auto run = [&](unsigned workers) {
    std::string bytes;
    corrupt_corpus(vector_source(sentences), d, 555,
                   [&bytes](const model::SentencePair& p) {
                     bytes += p.corrupted;
                     bytes += '\t';
                     bytes += p.correct;
                     bytes += '\n';
                   },
                   nullptr, workers);
    return bytes;
  };
  CHECK(run(4) == run(1));
}

}  // TEST_SUITE
