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

#ifndef SPELLFORGE_EDIT_ALIGNMENT_HPP_
#define SPELLFORGE_EDIT_ALIGNMENT_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spellforge::align {

// Character-level alignment under optimal string alignment (restricted
// Damerau-Levenshtein): unit-cost insertion, deletion, substitution, and
// adjacent transposition, each substring edited at most once.

enum class EditKind : std::uint8_t {
  kMatch,
  kInsertion,
  kDeletion,
  kSubstitution,
  kTransposition,
};

const char* to_string(EditKind kind);

// One typed character edit, positioned in the source sequence.
//   match:         consumes 1 source char, emits the same char
//   insertion:     consumes nothing, emits 1 char before src_pos
//   deletion:      consumes 1 source char, emits nothing
//   substitution:  consumes 1 source char, emits 1 different char
//   transposition: consumes 2 adjacent source chars, emits them swapped
struct EditOp {
  EditKind kind = EditKind::kMatch;
  std::size_t src_pos = 0;
  std::u32string src_chars;
  std::u32string tgt_chars;

  bool operator==(const EditOp&) const = default;
};

EditOp make_match(std::size_t pos, char32_t c);
EditOp make_insertion(std::size_t pos, char32_t c);
EditOp make_deletion(std::size_t pos, char32_t c);
EditOp make_substitution(std::size_t pos, char32_t from, char32_t to);
EditOp make_transposition(std::size_t pos, char32_t first, char32_t second);

// Inputs longer than this are rejected; the full matrix is retained for
// traceback and grows quadratically.
inline constexpr std::size_t kMaxAlignLength = 4096;

class EditMatrix {
 public:
  EditMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int32_t& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  std::int32_t at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

  // Bottom-right cell: the optimal string alignment distance.
  std::int32_t distance() const { return cells_.back(); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int32_t> cells_;
};

// DP matrix over prefixes of source and target. Throws ValidationError when
// either input exceeds kMaxAlignLength.
EditMatrix build_matrix(std::u32string_view source, std::u32string_view target);

// Walks the matrix back from the bottom-right corner and returns the edit
// script in source order, matches included. Cost ties between predecessors
// resolve as match > substitution > transposition > deletion > insertion,
// which keeps the trace on the main diagonal and makes it deterministic.
std::vector<EditOp> traceback(const EditMatrix& matrix, std::u32string_view source,
                              std::u32string_view target);

// Replays ops (ascending src_pos; gaps are copied verbatim) against source.
// Throws ValidationError naming the offending op index when a position is out
// of range, overlaps a previous op, or src_chars do not match the source.
std::u32string apply_ops(std::u32string_view source, std::span<const EditOp> ops);

std::size_t count_errors(std::span<const EditOp> ops);  // non-match ops

std::int32_t osa_distance(std::u32string_view source, std::u32string_view target);

}  // namespace spellforge::align

#endif  // SPELLFORGE_EDIT_ALIGNMENT_HPP_
