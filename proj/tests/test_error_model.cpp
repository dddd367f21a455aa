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

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "spellforge/edit_alignment.hpp"
#include "spellforge/error_model.hpp"
#include "spellforge/errors.hpp"
#include "spellforge/rng.hpp"
#include "spellforge/unicode.hpp"

using namespace spellforge;
using namespace spellforge::model;
using align::EditKind;

namespace {

PairSource pairs_source(std::vector<SentencePair> pairs) {
  return [pairs = std::move(pairs),
          i = std::size_t{0}]() mutable -> std::optional<SentencePair> {
    if (i >= pairs.size()) return std::nullopt;
    return pairs[i++];
  };
}

}  // namespace

TEST_SUITE("error_model") {

TEST_CASE("single error class: 100 substitutions a->o") {
  std::vector<SentencePair> pairs(100, {"obc", "abc"});
  ScanSummary summary;
  const ErrorDistribution d = scan_corpus(pairs_source(pairs), &summary);

  CHECK(summary.pairs_scanned == 100);
  CHECK(summary.pairs_skipped == 0);
  REQUIRE(d.errors_per_sentence.size() == 1);
  CHECK(d.errors_per_sentence.at(1) == doctest::Approx(1.0));
  REQUIRE(d.type_mix.size() == 1);
  CHECK(d.type_mix.at(EditKind::kSubstitution) == doctest::Approx(1.0));
  REQUIRE(d.confusion.count(U'a') == 1);
  CHECK(d.confusion.at(U'a').at(U'o') == doctest::Approx(1.0));
  CHECK(d.insert_chars.empty());
  CHECK(d.delete_chars.empty());
}

TEST_CASE("identical pairs yield the zero-error distribution") {
  std::vector<SentencePair> pairs(20, {"same text", "same text"});
  const ErrorDistribution d = scan_corpus(pairs_source(pairs));
  REQUIRE(d.errors_per_sentence.size() == 1);
  CHECK(d.errors_per_sentence.at(0) == doctest::Approx(1.0));
  CHECK(d.type_mix.empty());
  for (double p : d.positional_profile) CHECK(p == 0.0);
}

TEST_CASE("planted op counts are recovered exactly") {
  // Wide sentences and well-separated edits keep alignments unambiguous.
  const std::u32string base = U"the quick brown fox jumped over the lazy sleeping dog";
  std::vector<SentencePair> pairs;
  std::map<std::uint32_t, int> planted_histogram;
  std::map<EditKind, int> planted_kinds;

  for (int i = 0; i < 80; ++i) {
    std::vector<align::EditOp> ops;
    const int n_errors = i % 4;
    if (n_errors >= 1) ops.push_back(align::make_substitution(4, base[4], U'z'));
    if (n_errors >= 2) ops.push_back(align::make_deletion(20, base[20]));
    if (n_errors >= 3) ops.push_back(align::make_insertion(37, U'x'));
    for (const auto& op : ops) ++planted_kinds[op.kind];
    ++planted_histogram[static_cast<std::uint32_t>(n_errors)];
    pairs.push_back({encode_utf8(align::apply_ops(base, ops)), encode_utf8(base)});
  }

  const ErrorDistribution d = scan_corpus(pairs_source(pairs));
  for (const auto& [count, occurrences] : planted_histogram) {
    CHECK(d.errors_per_sentence.at(count) ==
          doctest::Approx(occurrences / 80.0).epsilon(1e-12));
  }
  int planted_total = 0;
  for (const auto& [kind, n] : planted_kinds) planted_total += n;
  for (const auto& [kind, n] : planted_kinds) {
    CHECK(d.type_mix.at(kind) ==
          doctest::Approx(static_cast<double>(n) / planted_total).epsilon(1e-12));
  }
  // The only substitution is base[4] -> z.
  CHECK(d.confusion.at(base[4]).at(U'z') == doctest::Approx(1.0));
  CHECK(d.insert_chars.at(U'x') == doctest::Approx(1.0));
  CHECK(d.delete_chars.at(base[20]) == doctest::Approx(1.0));
}

TEST_CASE("unreadable pairs are skipped and counted") {
  std::vector<SentencePair> pairs{
      {"good line", "good line"},
      {"   ", "whitespace only corrupted side"},
      {"\xff\xfe broken", "bad utf8"},
      {"also fine", "also fine"},
  };
  ScanSummary summary;
  const ErrorDistribution d = scan_corpus(pairs_source(pairs), &summary);
  CHECK(summary.pairs_scanned == 2);
  CHECK(summary.pairs_skipped == 2);
  CHECK(d.errors_per_sentence.at(0) == doctest::Approx(1.0));
}

TEST_CASE("empty or fully unreadable streams are structural errors") {
  CHECK_THROWS_AS(scan_corpus(pairs_source({})), ValidationError);
  std::vector<SentencePair> junk{{"", ""}, {" ", " "}};
  CHECK_THROWS_AS(scan_corpus(pairs_source(junk)), ValidationError);
}

TEST_CASE("scan is permutation invariant") {
  std::vector<SentencePair> pairs{
      {"teh cat", "the cat"},     {"ho", "hi"},
      {"abcd", "abcd"},           {"mispeled", "misspelled"},
      {"transposed ba", "transposed ab"},
  };
  auto shuffled = pairs;
  std::mt19937 shuffle_rng(5);
  std::shuffle(shuffled.begin(), shuffled.end(), shuffle_rng);

  const ErrorDistribution a = scan_corpus(pairs_source(pairs));
  const ErrorDistribution b = scan_corpus(pairs_source(shuffled));
  CHECK(a == b);
}

TEST_CASE("sharded accumulation merges to the single-pass result") {
  std::vector<SentencePair> pairs;
  for (int i = 0; i < 30; ++i) {
    pairs.push_back({i % 3 == 0 ? "hte dog" : "the dgo", "the dog"});
  }

  ScanAccumulator whole;
  for (const auto& p : pairs) whole.add_pair(p);

  ScanAccumulator shard_a;
  ScanAccumulator shard_b;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    (i % 2 == 0 ? shard_a : shard_b).add_pair(pairs[i]);
  }
  shard_b.merge(shard_a);

  CHECK(whole.finalize() == shard_b.finalize());
}

TEST_CASE("scale_density remaps histogram support only") {
  ErrorDistribution d;
  d.errors_per_sentence = {{1, 1.0}};
  d.type_mix = {{EditKind::kSubstitution, 1.0}};

  const ErrorDistribution by_ten = scale_density(d, 10);
  REQUIRE(by_ten.errors_per_sentence.size() == 1);
  CHECK(by_ten.errors_per_sentence.at(10) == doctest::Approx(1.0));
  CHECK(by_ten.type_mix == d.type_mix);

  CHECK(scale_density(d, 1) == d);

  ErrorDistribution half;
  half.errors_per_sentence = {{0, 0.5}, {2, 0.5}};
  const ErrorDistribution tripled = scale_density(half, 3);
  CHECK(tripled.errors_per_sentence.at(0) == doctest::Approx(0.5));
  CHECK(tripled.errors_per_sentence.at(6) == doctest::Approx(0.5));
  CHECK(half.mean_errors_per_sentence() == doctest::Approx(1.0));
  CHECK(tripled.mean_errors_per_sentence() == doctest::Approx(3.0));

  double mass = 0.0;
  for (const auto& [n, p] : tripled.errors_per_sentence) mass += p;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(scale_density(d, 0), ValidationError);
}

TEST_CASE("save/load round trip is exact") {
  std::vector<SentencePair> pairs{
      {"превед мир", "привет мир"}, {"teh quick", "the quick"},
      {"insrted", "inserted"},      {"missin", "missing"},
  };
  const ErrorDistribution d = scan_corpus(pairs_source(pairs));

  std::stringstream buffer;
  save(d, buffer);
  const ErrorDistribution reloaded = load(buffer);
  CHECK(reloaded == d);

  // Serialized form is stable across a round trip as well.
  std::stringstream again;
  save(reloaded, again);
  CHECK(again.str() == buffer.str());
}

TEST_CASE("load rejects malformed and mis-versioned files") {
  std::stringstream truncated("{\"schema_version\": 1, \"errors_per_sentence\": {");
  CHECK_THROWS_AS(load(truncated), ParseError);

  std::stringstream versioned(R"({"schema_version": 99})");
  CHECK_THROWS_WITH_AS(load(versioned), doctest::Contains("schema_version 99"),
                       ValidationError);

  std::stringstream missing_version(R"({"errors_per_sentence": {}})");
  CHECK_THROWS_AS(load(missing_version), ParseError);

  std::stringstream identity(R"({
    "schema_version": 1,
    "errors_per_sentence": {"0": 1.0},
    "type_mix": {},
    "positional_profile": [0,0,0,0,0,0,0,0,0,0],
    "confusion": {"a": {"a": 1.0}},
    "insert_chars": {},
    "delete_chars": {}
  })");
  CHECK_THROWS_AS(load(identity), ParseError);

  std::stringstream bad_sum(R"({
    "schema_version": 1,
    "errors_per_sentence": {"0": 0.4, "1": 0.4},
    "type_mix": {},
    "positional_profile": [0,0,0,0,0,0,0,0,0,0],
    "confusion": {},
    "insert_chars": {},
    "delete_chars": {}
  })");
  CHECK_THROWS_AS(load(bad_sum), ParseError);
}

TEST_CASE("smoothed confusion rows mix stored mass with alpha") {
  ConfusionTable confusion{{U'a', {{U'o', 0.75}, {U'e', 0.25}}}};
  const std::vector<char32_t> alphabet{U'a', U'e', U'o', U'x'};

  const auto row = smoothed_confusion_row(confusion, U'a', alphabet);
  REQUIRE(row.size() == 3);  // identity excluded
  for (const auto& [c, w] : row) {
    CHECK(c != U'a');
    if (c == U'o') CHECK(w == doctest::Approx(0.75 + kConfusionSmoothingAlpha));
    if (c == U'e') CHECK(w == doctest::Approx(0.25 + kConfusionSmoothingAlpha));
    if (c == U'x') CHECK(w == doctest::Approx(kConfusionSmoothingAlpha));
  }

  // Unknown source char: pure smoothing over the alphabet.
  const auto uniform = smoothed_confusion_row(confusion, U'q', alphabet);
  CHECK(uniform.size() == 4);
  for (const auto& [c, w] : uniform) CHECK(w == doctest::Approx(kConfusionSmoothingAlpha));

  CHECK(smoothed_confusion_row(confusion, U'a', {U'a'}).empty());
}

TEST_CASE("confusion data files parse and normalize") {
  const auto table = parse_confusion(R"({"a": {"o": 3, "e": 1}})");
  CHECK(table.at(U'a').at(U'o') == doctest::Approx(0.75));
  CHECK(table.at(U'a').at(U'e') == doctest::Approx(0.25));

  CHECK_THROWS_AS(parse_confusion(R"({"a": {"a": 1}})"), ParseError);
  CHECK_THROWS_AS(parse_confusion(R"({"a": {"o": 0}})"), ParseError);
  CHECK_THROWS_AS(parse_confusion(R"({"ab": {"o": 1}})"), ParseError);
  CHECK_THROWS_AS(parse_confusion("not json"), ParseError);
}

TEST_CASE("position bins cover the unit interval") {
  CHECK(position_bin(0, 40) == 0);
  CHECK(position_bin(39, 40) == 9);
  CHECK(position_bin(40, 40) == 9);  // insertion past the last char clamps
  CHECK(position_bin(20, 40) == 5);
  CHECK(position_bin(3, 10) == 3);
}

}  // TEST_SUITE
