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

#include "spellforge/edit_alignment.hpp"

#include <algorithm>
#include <string>

#include "spellforge/errors.hpp"

namespace spellforge::align {

const char* to_string(EditKind kind) {
  switch (kind) {
    case EditKind::kMatch: return "match";
    case EditKind::kInsertion: return "insertion";
    case EditKind::kDeletion: return "deletion";
    case EditKind::kSubstitution: return "substitution";
    case EditKind::kTransposition: return "transposition";
  }
  return "unknown";
}

EditOp make_match(std::size_t pos, char32_t c) {
  return {EditKind::kMatch, pos, std::u32string(1, c), std::u32string(1, c)};
}
EditOp make_insertion(std::size_t pos, char32_t c) {
  return {EditKind::kInsertion, pos, std::u32string(), std::u32string(1, c)};
}
EditOp make_deletion(std::size_t pos, char32_t c) {
  return {EditKind::kDeletion, pos, std::u32string(1, c), std::u32string()};
}
EditOp make_substitution(std::size_t pos, char32_t from, char32_t to) {
  return {EditKind::kSubstitution, pos, std::u32string(1, from), std::u32string(1, to)};
}
EditOp make_transposition(std::size_t pos, char32_t first, char32_t second) {
  std::u32string src{first, second};
  std::u32string tgt{second, first};
  return {EditKind::kTransposition, pos, std::move(src), std::move(tgt)};
}

EditMatrix build_matrix(std::u32string_view source, std::u32string_view target) {
  if (source.size() > kMaxAlignLength || target.size() > kMaxAlignLength) {
    throw ValidationError("alignment input exceeds " + std::to_string(kMaxAlignLength) +
                          " characters");
  }
  const std::size_t rows = source.size() + 1;
  const std::size_t cols = target.size() + 1;
  EditMatrix m(rows, cols);

  for (std::size_t j = 0; j < cols; ++j) m.at(0, j) = static_cast<std::int32_t>(j);
  for (std::size_t i = 1; i < rows; ++i) m.at(i, 0) = static_cast<std::int32_t>(i);

  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      const bool same = source[i - 1] == target[j - 1];
      std::int32_t best = m.at(i - 1, j - 1) + (same ? 0 : 1);
      best = std::min(best, m.at(i - 1, j) + 1);
      best = std::min(best, m.at(i, j - 1) + 1);
      if (i > 1 && j > 1 && source[i - 1] == target[j - 2] && source[i - 2] == target[j - 1]) {
        best = std::min(best, m.at(i - 2, j - 2) + 1);
      }
      m.at(i, j) = best;
    }
  }
  return m;
}

std::vector<EditOp> traceback(const EditMatrix& m, std::u32string_view source,
                              std::u32string_view target) {
  if (m.rows() != source.size() + 1 || m.cols() != target.size() + 1) {
    throw ValidationError("traceback: matrix shape does not fit the given strings");
  }
  std::vector<EditOp> ops;
  ops.reserve(std::max(source.size(), target.size()));
  std::size_t i = source.size();
  std::size_t j = target.size();

  while (i > 0 || j > 0) {
    const std::int32_t here = m.at(i, j);
    if (i > 0 && j > 0 && source[i - 1] == target[j - 1] && here == m.at(i - 1, j - 1)) {
      ops.push_back(make_match(i - 1, source[i - 1]));
      --i;
      --j;
    } else if (i > 0 && j > 0 && source[i - 1] != target[j - 1] &&
               here == m.at(i - 1, j - 1) + 1) {
      ops.push_back(make_substitution(i - 1, source[i - 1], target[j - 1]));
      --i;
      --j;
    } else if (i > 1 && j > 1 && source[i - 1] == target[j - 2] &&
               source[i - 2] == target[j - 1] && here == m.at(i - 2, j - 2) + 1) {
      ops.push_back(make_transposition(i - 2, source[i - 2], source[i - 1]));
      i -= 2;
      j -= 2;
    } else if (i > 0 && here == m.at(i - 1, j) + 1) {
      ops.push_back(make_deletion(i - 1, source[i - 1]));
      --i;
    } else if (j > 0 && here == m.at(i, j - 1) + 1) {
      ops.push_back(make_insertion(i, target[j - 1]));
      --j;
    } else {
      throw ValidationError("traceback: no predecessor explains the cell; matrix was not "
                            "built from these strings");
    }
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

namespace {

[[noreturn]] void bad_op(std::size_t index, const std::string& why) {
  throw ValidationError("apply_ops: op " + std::to_string(index) + ": " + why);
}

}  // namespace

std::u32string apply_ops(std::u32string_view source, std::span<const EditOp> ops) {
  std::u32string out;
  out.reserve(source.size() + ops.size());
  std::size_t cursor = 0;  // next unconsumed source index

  for (std::size_t k = 0; k < ops.size(); ++k) {
    const EditOp& op = ops[k];
    if (op.src_pos < cursor) bad_op(k, "position overlaps a previous op");
    if (op.src_pos > source.size()) bad_op(k, "position past end of source");
    out.append(source.substr(cursor, op.src_pos - cursor));
    cursor = op.src_pos;

    const std::size_t consumed = op.src_chars.size();
    if (cursor + consumed > source.size()) bad_op(k, "consumes past end of source");
    if (source.substr(cursor, consumed) != op.src_chars) {
      bad_op(k, "src_chars do not match the source text");
    }

    switch (op.kind) {
      case EditKind::kMatch:
        if (consumed != 1 || op.tgt_chars != op.src_chars) bad_op(k, "malformed match");
        break;
      case EditKind::kInsertion:
        if (consumed != 0 || op.tgt_chars.size() != 1) bad_op(k, "malformed insertion");
        break;
      case EditKind::kDeletion:
        if (consumed != 1 || !op.tgt_chars.empty()) bad_op(k, "malformed deletion");
        break;
      case EditKind::kSubstitution:
        if (consumed != 1 || op.tgt_chars.size() != 1 || op.src_chars == op.tgt_chars) {
          bad_op(k, "malformed substitution");
        }
        break;
      case EditKind::kTransposition:
        if (consumed != 2 || op.tgt_chars.size() != 2 || op.tgt_chars[0] != op.src_chars[1] ||
            op.tgt_chars[1] != op.src_chars[0]) {
          bad_op(k, "malformed transposition");
        }
        break;
    }
    out.append(op.tgt_chars);
    cursor += consumed;
  }

  out.append(source.substr(cursor));
  return out;
}

std::size_t count_errors(std::span<const EditOp> ops) {
  std::size_t n = 0;
  for (const EditOp& op : ops) {
    if (op.kind != EditKind::kMatch) ++n;
  }
  return n;
}

std::int32_t osa_distance(std::u32string_view source, std::u32string_view target) {
  return build_matrix(source, target).distance();
}

}  // namespace spellforge::align
