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

#ifndef SPELLFORGE_STREAMS_HPP_
#define SPELLFORGE_STREAMS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spellforge {

// Pull-based streams: a source returns std::nullopt when drained.
using LineSource = std::function<std::optional<std::string>()>;
using LineSink = std::function<void(const std::string&)>;

inline LineSource vector_source(std::vector<std::string> lines) {
  return [lines = std::move(lines), i = std::size_t{0}]() mutable -> std::optional<std::string> {
    if (i >= lines.size()) return std::nullopt;
    return lines[i++];
  };
}

}  // namespace spellforge

#endif  // SPELLFORGE_STREAMS_HPP_
