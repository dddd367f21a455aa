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

#include "spellforge/corpus_io.hpp"

#include <vector>

#include <json.hpp>

#include "spellforge/errors.hpp"

namespace spellforge::io {

namespace {

using nlohmann::json;

std::optional<std::string> read_line(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

Format format_from_string(const std::string& name) {
  if (name == "tsv") return Format::kTsv;
  if (name == "records") return Format::kRecords;
  throw ValidationError("format: expected tsv|records, got \"" + name + "\"");
}

const char* to_string(Format format) {
  return format == Format::kTsv ? "tsv" : "records";
}

Input::Input(const std::string& path) {
  if (path == "-") {
    stream_ = &std::cin;
    return;
  }
  file_.open(path);
  if (!file_) throw IoError("cannot open input: " + path);
  stream_ = &file_;
}

Output::Output(const std::string& path) {
  if (path == "-") {
    stream_ = &std::cout;
    return;
  }
  file_.open(path);
  if (!file_) throw IoError("cannot open output: " + path);
  stream_ = &file_;
}

void Output::finish() {
  stream_->flush();
  if (!*stream_) throw IoError("write failure on output stream");
}

LineSource line_source(std::istream& in) {
  return [&in] { return read_line(in); };
}

std::optional<model::SentencePair> PairReader::next() {
  while (auto line = read_line(in_)) {
    if (line->empty()) {
      ++malformed_;
      continue;
    }
    if (format_ == Format::kTsv) {
      const auto fields = split_tabs(*line);
      if (fields.size() != 2) {
        ++malformed_;
        continue;
      }
      return model::SentencePair{fields[0], fields[1]};
    }
    try {
      const json record = json::parse(*line);
      return model::SentencePair{record.at("source").get<std::string>(),
                                 record.at("correction").get<std::string>()};
    } catch (const json::exception&) {
      ++malformed_;
    }
  }
  return std::nullopt;
}

void PairWriter::write(const model::SentencePair& pair) {
  if (format_ == Format::kTsv) {
    out_ << pair.corrupted << '\t' << pair.correct << '\n';
    return;
  }
  json record;
  record["source"] = pair.corrupted;
  record["correction"] = pair.correct;
  out_ << record.dump() << '\n';
}

std::optional<eval::EvalTriple> TripleReader::next() {
  while (auto line = read_line(in_)) {
    const auto fields = split_tabs(*line);
    if (fields.size() != 3) {
      ++malformed_;
      continue;
    }
    return eval::EvalTriple{fields[0], fields[1], fields[2]};
  }
  return std::nullopt;
}

std::optional<eval::EvalTriple> AlignedTripleReader::next() {
  auto src = read_line(source_);
  auto hyp = read_line(hypothesis_);
  auto ref = read_line(reference_);
  const int present = int(src.has_value()) + int(hyp.has_value()) + int(ref.has_value());
  if (present == 0) return std::nullopt;
  if (present != 3) {
    throw ValidationError("aligned evaluation files differ in length");
  }
  return eval::EvalTriple{std::move(*src), std::move(*hyp), std::move(*ref)};
}

}  // namespace spellforge::io
