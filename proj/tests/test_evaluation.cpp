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

#include "spellforge/errors.hpp"
#include "spellforge/evaluation.hpp"
#include "spellforge/rng.hpp"

using namespace spellforge;
using namespace spellforge::eval;

namespace {

TripleSource triples_source(std::vector<EvalTriple> triples) {
  return [triples = std::move(triples),
          i = std::size_t{0}]() mutable -> std::optional<EvalTriple> {
    if (i >= triples.size()) return std::nullopt;
    return triples[i++];
  };
}

EvalReport eval_one(const EvalTriple& triple, PunctuationMode mode = PunctuationMode::kKeep) {
  return evaluate(triples_source({triple}), mode);
}

std::string random_tokens(Rng& rng, std::size_t count) {
  static const std::vector<std::string> vocab{"aa", "bb", "cc", "dd", "ee", "ff"};
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) out += ' ';
    out += vocab[rng.index(vocab.size())];
  }
  return out;
}

}  // namespace

TEST_SUITE("evaluation") {

TEST_CASE("strip_punctuation examples") {
  CHECK(strip_punctuation("cat,") == "cat");
  CHECK(strip_punctuation("it's") == "it's");
  CHECK(strip_punctuation("–") == "");  // all-punctuation token drops
  CHECK(strip_punctuation("well-known (fact).") == "well-known fact");
  CHECK(strip_punctuation("«quoted» word") == "quoted word");
}

TEST_CASE("tokenizer modes") {
  CHECK(tokenize("a b  c", PunctuationMode::kKeep) ==
        std::vector<std::string>{"a", "b", "c"});
  CHECK(tokenize("a, b! -", PunctuationMode::kKeep) ==
        std::vector<std::string>{"a,", "b!", "-"});
  CHECK(tokenize("a, b! -", PunctuationMode::kStrip) ==
        std::vector<std::string>{"a", "b"});
  CHECK(tokenize("", PunctuationMode::kKeep).empty());
}

TEST_CASE("extract_corrections examples") {
  const auto single = extract_corrections(tokenize("hte cat", PunctuationMode::kKeep),
                                          tokenize("the cat", PunctuationMode::kKeep));
  REQUIRE(single.size() == 1);
  CHECK(single[0].begin == 0);
  CHECK(single[0].end == 1);
  CHECK(single[0].replacement == std::vector<std::string>{"the"});

  const auto tokens = tokenize("same text", PunctuationMode::kKeep);
  CHECK(extract_corrections(tokens, tokens).empty());

  const auto two = extract_corrections(tokenize("a bd c dd", PunctuationMode::kKeep),
                                       tokenize("a bad c did", PunctuationMode::kKeep));
  REQUIRE(two.size() == 2);
  CHECK(two[0].begin == 1);
  CHECK(two[0].end == 2);
  CHECK(two[0].replacement == std::vector<std::string>{"bad"});
  CHECK(two[1].begin == 3);
  CHECK(two[1].end == 4);
  CHECK(two[1].replacement == std::vector<std::string>{"did"});
}

TEST_CASE("corrections merge adjacent changes and handle insertions") {
  const auto merged = extract_corrections(tokenize("x p q y", PunctuationMode::kKeep),
                                          tokenize("x a b c y", PunctuationMode::kKeep));
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].begin == 1);
  CHECK(merged[0].end == 3);
  CHECK(merged[0].replacement == std::vector<std::string>{"a", "b", "c"});

  const auto insertion = extract_corrections(tokenize("x y", PunctuationMode::kKeep),
                                             tokenize("x new y", PunctuationMode::kKeep));
  REQUIRE(insertion.size() == 1);
  CHECK(insertion[0].begin == 1);
  CHECK(insertion[0].end == 1);  // empty source span
  CHECK(insertion[0].replacement == std::vector<std::string>{"new"});
}

TEST_CASE("perfect system scores ones") {
  const EvalReport r = eval_one({"hte cat sat", "the cat sat", "the cat sat"});
  CHECK(r.precision == doctest::Approx(1.0));
  CHECK(r.recall == doctest::Approx(1.0));
  CHECK(r.f1 == doctest::Approx(1.0));
  CHECK(r.accuracy == doctest::Approx(1.0));
  CHECK(r.correction_rate == doctest::Approx(1.0));
  CHECK(r.tp == 1);
  CHECK(r.fp == 0);
  CHECK(r.fn == 0);
}

TEST_CASE("do-nothing system: no-prediction conventions") {
  const EvalReport r = eval_one({"hte cat sat", "hte cat sat", "the cat sat"});
  CHECK(r.tp == 0);
  CHECK(r.fp == 0);
  CHECK(r.fn == 1);
  CHECK(r.precision == doctest::Approx(1.0));  // no predictions, no false alarms
  CHECK(r.recall == doctest::Approx(0.0));
  CHECK(r.f1 == doctest::Approx(0.0));
  CHECK(r.correction_rate == doctest::Approx(0.0));
}

TEST_CASE("hand-enumerated half-credit case") {
  // Reference fixes tokens 1 and 3; hypothesis fixes token 1 and corrupts
  // token 2.
  const EvalReport r = eval_one({"a bd c dd", "a bad x dd", "a bad c did"});
  CHECK(r.tp == 1);
  CHECK(r.fp == 1);
  CHECK(r.fn == 1);
  CHECK(r.precision == doctest::Approx(0.5));
  CHECK(r.recall == doctest::Approx(0.5));
  CHECK(r.f1 == doctest::Approx(0.5));
}

TEST_CASE("swapping hypothesis and reference swaps precision and recall") {
  Rng rng(99);
  for (int round = 0; round < 100; ++round) {
    EvalTriple t;
    t.source = random_tokens(rng, 6);
    t.hypothesis = random_tokens(rng, 6);
    t.reference = random_tokens(rng, 6);
    EvalTriple swapped{t.source, t.reference, t.hypothesis};

    const EvalReport a = eval_one(t);
    const EvalReport b = eval_one(swapped);
    CHECK(a.precision == doctest::Approx(b.recall));
    CHECK(a.recall == doctest::Approx(b.precision));
    CHECK(a.tp == b.tp);
    CHECK(a.fp == b.fn);
    CHECK(a.fn == b.fp);
  }
}

TEST_CASE("micro counts equal the sum of per-sentence counts") {
  Rng rng(123);
  std::vector<EvalTriple> triples;
  for (int i = 0; i < 50; ++i) {
    triples.push_back({random_tokens(rng, 5 + rng.index(4)), random_tokens(rng, 5),
                       random_tokens(rng, 5 + rng.index(3))});
  }
  const EvalReport r = evaluate(triples_source(triples), PunctuationMode::kKeep);
  REQUIRE(r.per_sentence.size() == triples.size());
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  for (const auto& s : r.per_sentence) {
    tp += s.tp;
    fp += s.fp;
    fn += s.fn;
  }
  CHECK(tp == r.tp);
  CHECK(fp == r.fp);
  CHECK(fn == r.fn);
  CHECK(r.accuracy >= 0.0);
  CHECK(r.accuracy <= 1.0);
}

TEST_CASE("punctuation mode changes what counts as a correction") {
  // Hypothesis differs from the reference only in trailing punctuation.
  const EvalTriple t{"hte cat.", "the cat", "the cat."};
  const EvalReport strict = eval_one(t, PunctuationMode::kKeep);
  CHECK(strict.f1 < 1.0);
  const EvalReport relaxed = eval_one(t, PunctuationMode::kStrip);
  CHECK(relaxed.f1 == doctest::Approx(1.0));
}

TEST_CASE("empty stream is a structural error") {
  CHECK_THROWS_AS(evaluate(triples_source({}), PunctuationMode::kKeep), ValidationError);
}

}  // TEST_SUITE
