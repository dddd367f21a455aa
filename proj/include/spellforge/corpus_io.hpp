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

#ifndef SPELLFORGE_CORPUS_IO_HPP_
#define SPELLFORGE_CORPUS_IO_HPP_

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "spellforge/error_model.hpp"
#include "spellforge/evaluation.hpp"
#include "spellforge/streams.hpp"

namespace spellforge::io {

// Corpus formats: two-column TSV (corrupted TAB correct) or line-delimited
// JSON records {"source": <corrupted>, "correction": <correct>}.
enum class Format : std::uint8_t { kTsv, kRecords };

Format format_from_string(const std::string& name);  // throws ValidationError
const char* to_string(Format format);

// "-" selects stdin / stdout.
class Input {
 public:
  explicit Input(const std::string& path);  // throws IoError
  std::istream& stream() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_;
};

class Output {
 public:
  explicit Output(const std::string& path);  // throws IoError
  std::ostream& stream() { return *stream_; }
  void finish();  // flushes; throws IoError on stream failure

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

// Line source over a stream; trailing '\r' is dropped so CRLF input behaves.
LineSource line_source(std::istream& in);

class PairReader {
 public:
  PairReader(std::istream& in, Format format) : in_(in), format_(format) {}

  // Malformed lines (wrong column count, bad JSON) are skipped and counted.
  std::optional<model::SentencePair> next();
  std::uint64_t malformed() const { return malformed_; }

  model::PairSource source() {
    return [this] { return next(); };
  }

 private:
  std::istream& in_;
  Format format_;
  std::uint64_t malformed_ = 0;
};

class PairWriter {
 public:
  PairWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void write(const model::SentencePair& pair);

 private:
  std::ostream& out_;
  Format format_;
};

// Three-column TSV: source TAB hypothesis TAB reference.
class TripleReader {
 public:
  explicit TripleReader(std::istream& in) : in_(in) {}

  std::optional<eval::EvalTriple> next();
  std::uint64_t malformed() const { return malformed_; }

  eval::TripleSource source() {
    return [this] { return next(); };
  }

 private:
  std::istream& in_;
  std::uint64_t malformed_ = 0;
};

// Zips three aligned line files; throws ValidationError when lengths differ.
class AlignedTripleReader {
 public:
  AlignedTripleReader(std::istream& source, std::istream& hypothesis, std::istream& reference)
      : source_(source), hypothesis_(hypothesis), reference_(reference) {}

  std::optional<eval::EvalTriple> next();

  eval::TripleSource source() {
    return [this] { return next(); };
  }

 private:
  std::istream& source_;
  std::istream& hypothesis_;
  std::istream& reference_;
};

}  // namespace spellforge::io

#endif  // SPELLFORGE_CORPUS_IO_HPP_
