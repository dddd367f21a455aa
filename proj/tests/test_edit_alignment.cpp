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
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spellforge/edit_alignment.hpp"
#include "spellforge/errors.hpp"
#include "spellforge/rng.hpp"

using namespace spellforge;
using namespace spellforge::align;

namespace {

std::u32string random_string(Rng& rng, std::size_t max_len, std::size_t alphabet_size) {
  const std::size_t len = rng.index(max_len + 1);
  std::u32string s;
  s.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    s.push_back(static_cast<char32_t>(U'a' + rng.index(alphabet_size)));
  }
  return s;
}

}  // namespace

TEST_SUITE("edit_alignment") {

TEST_CASE("distance examples") {
  CHECK(osa_distance(U"x", U"x") == 0);
  CHECK(osa_distance(U"", U"abc") == 3);
  // Independently derived via the recursive edit-script oracle.
  CHECK(oracles::osa_distance(U"kitten", U"sitting") == 3);
  CHECK(osa_distance(U"kitten", U"sitting") == 3);
}

TEST_CASE("matrix border and recurrence invariants") {
  const std::u32string s = U"banana";
  const std::u32string t = U"ananas";
  EditMatrix m = build_matrix(s, t);
  REQUIRE(m.rows() == s.size() + 1);
  REQUIRE(m.cols() == t.size() + 1);
  CHECK(m.at(0, 0) == 0);
  for (std::size_t i = 0; i < m.rows(); ++i) CHECK(m.at(i, 0) == static_cast<int>(i));
  for (std::size_t j = 0; j < m.cols(); ++j) CHECK(m.at(0, j) == static_cast<int>(j));
  for (std::size_t i = 1; i < m.rows(); ++i) {
    for (std::size_t j = 1; j < m.cols(); ++j) {
      const auto neighbor_min =
          std::min({m.at(i - 1, j), m.at(i, j - 1), m.at(i - 1, j - 1)});
      CHECK(m.at(i, j) >= 0);
      CHECK(m.at(i, j) <= neighbor_min + 1);
    }
  }
}

TEST_CASE("input length cap") {
  std::u32string big(kMaxAlignLength + 1, U'x');
  CHECK_THROWS_AS(build_matrix(big, U"ok"), ValidationError);
  CHECK_NOTHROW(build_matrix(std::u32string(kMaxAlignLength, U'x'), U""));
}

TEST_CASE("traceback: transposition detected") {
  const std::u32string s = U"abc";
  const std::u32string t = U"acb";
  auto ops = traceback(build_matrix(s, t), s, t);
  REQUIRE(ops.size() == 2);
  CHECK(ops[0] == make_match(0, U'a'));
  CHECK(ops[1] == make_transposition(1, U'b', U'c'));
  CHECK(count_errors(ops) == 1);
}

TEST_CASE("traceback: teh -> the is one transposition at 1") {
  const std::u32string s = U"teh";
  const std::u32string t = U"the";
  auto ops = traceback(build_matrix(s, t), s, t);
  CHECK(count_errors(ops) == 1);
  auto it = std::find_if(ops.begin(), ops.end(),
                         [](const EditOp& op) { return op.kind != EditKind::kMatch; });
  REQUIRE(it != ops.end());
  CHECK(it->kind == EditKind::kTransposition);
  CHECK(it->src_pos == 1);
}

TEST_CASE("traceback: identical strings are all matches") {
  const std::u32string s = U"cat";
  auto ops = traceback(build_matrix(s, s), s, s);
  REQUIRE(ops.size() == 3);
  for (const auto& op : ops) CHECK(op.kind == EditKind::kMatch);
  CHECK(count_errors(ops) == 0);
}

TEST_CASE("traceback positions are non-decreasing") {
  Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    const auto s = random_string(rng, 12, 4);
    const auto t = random_string(rng, 12, 4);
    auto ops = traceback(build_matrix(s, t), s, t);
    for (std::size_t k = 1; k < ops.size(); ++k) {
      CHECK(ops[k].src_pos >= ops[k - 1].src_pos);
    }
  }
}

TEST_CASE("apply_ops examples") {
  CHECK(apply_ops(U"cat", std::vector<EditOp>{make_substitution(0, U'c', U'b')}) == U"bat");
  CHECK(apply_ops(U"cat", std::vector<EditOp>{}) == U"cat");
  CHECK(apply_ops(U"ab", std::vector<EditOp>{make_transposition(0, U'a', U'b')}) == U"ba");
}

TEST_CASE("apply_ops structural errors name the op index") {
  std::vector<EditOp> past_end{make_deletion(9, U'x')};
  CHECK_THROWS_WITH_AS(apply_ops(U"cat", past_end), doctest::Contains("op 0"),
                       ValidationError);

  std::vector<EditOp> overlap{make_deletion(1, U'a'), make_substitution(1, U'a', U'b')};
  CHECK_THROWS_WITH_AS(apply_ops(U"cat", overlap), doctest::Contains("op 1"),
                       ValidationError);

  std::vector<EditOp> wrong_char{make_deletion(0, U'x')};
  CHECK_THROWS_AS(apply_ops(U"cat", wrong_char), ValidationError);
}

TEST_CASE("exhaustive oracle equivalence up to length 4 over 3 symbols") {
  const auto strings = oracles::all_strings(4, 3);
  for (const auto& s : strings) {
    for (const auto& t : strings) {
      EditMatrix m = build_matrix(s, t);
      CAPTURE(std::string(s.begin(), s.end()));
      CAPTURE(std::string(t.begin(), t.end()));
      REQUIRE(m.distance() == oracles::osa_distance(s, t));
      auto ops = traceback(m, s, t);
      REQUIRE(static_cast<int>(count_errors(ops)) == m.distance());
      REQUIRE(apply_ops(s, ops) == t);
    }
  }
}

TEST_CASE("randomized oracle equivalence and reconstruction up to length 12") {
  Rng rng(20260809);
  for (int round = 0; round < 2000; ++round) {
    const auto s = random_string(rng, 12, 4);
    const auto t = random_string(rng, 12, 4);
    EditMatrix m = build_matrix(s, t);
    REQUIRE(m.distance() == oracles::osa_distance(s, t));
    auto ops = traceback(m, s, t);
    REQUIRE(static_cast<int>(count_errors(ops)) == m.distance());
    REQUIRE(apply_ops(s, ops) == t);
  }
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality on samples") {
  Rng rng(77);
  for (int round = 0; round < 300; ++round) {
    const auto a = random_string(rng, 10, 4);
    const auto b = random_string(rng, 10, 4);
    const auto c = random_string(rng, 10, 4);
    const auto dab = osa_distance(a, b);
    CHECK(dab == osa_distance(b, a));
    CHECK(dab <= osa_distance(a, c) + osa_distance(c, b));
  }
}

}  // TEST_SUITE
