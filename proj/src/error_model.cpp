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

#include "spellforge/error_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <ostream>
#include <set>
#include <string_view>

#include <json.hpp>

#include "spellforge/errors.hpp"
#include "spellforge/unicode.hpp"

namespace spellforge::model {

namespace {

using nlohmann::json;

constexpr double kSumTolerance = 1e-9;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename Key>
std::map<Key, double> normalize(const std::map<Key, std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (const auto& [key, n] : counts) total += n;
  std::map<Key, double> out;
  if (total == 0) return out;
  for (const auto& [key, n] : counts) {
    out.emplace(key, static_cast<double>(n) / static_cast<double>(total));
  }
  return out;
}

align::EditKind kind_from_name(const std::string& name) {
  if (name == "insertion") return align::EditKind::kInsertion;
  if (name == "deletion") return align::EditKind::kDeletion;
  if (name == "substitution") return align::EditKind::kSubstitution;
  if (name == "transposition") return align::EditKind::kTransposition;
  throw ParseError("unknown error kind in type_mix: " + name);
}

char32_t single_char(const std::string& key, const char* where) {
  const std::u32string decoded = decode_utf8(key);
  if (decoded.size() != 1) {
    throw ParseError(std::string(where) + ": key must be exactly one character, got \"" +
                     key + "\"");
  }
  return decoded[0];
}

json char_map_to_json(const std::map<char32_t, double>& table) {
  json obj = json::object();
  for (const auto& [c, p] : table) obj[encode_utf8(c)] = p;
  return obj;
}

std::map<char32_t, double> char_map_from_json(const json& obj, const char* where) {
  if (!obj.is_object()) throw ParseError(std::string(where) + ": expected an object");
  std::map<char32_t, double> out;
  for (const auto& [key, value] : obj.items()) {
    out.emplace(single_char(key, where), value.get<double>());
  }
  return out;
}

void check_table_sum(const std::map<char32_t, double>& table, const char* where) {
  if (table.empty()) return;
  double sum = 0.0;
  for (const auto& [c, p] : table) {
    if (p < 0.0) throw ParseError(std::string(where) + ": negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ParseError(std::string(where) + ": probabilities sum to " + std::to_string(sum));
  }
}

void check_invariants(const ErrorDistribution& d) {
  double hist_sum = 0.0;
  for (const auto& [n, p] : d.errors_per_sentence) {
    if (p < 0.0) throw ParseError("errors_per_sentence: negative probability");
    hist_sum += p;
  }
  if (!d.errors_per_sentence.empty() && std::abs(hist_sum - 1.0) > kSumTolerance) {
    throw ParseError("errors_per_sentence: probabilities sum to " + std::to_string(hist_sum));
  }

  double mix_sum = 0.0;
  for (const auto& [kind, p] : d.type_mix) {
    if (kind == align::EditKind::kMatch) throw ParseError("type_mix: match is not an error kind");
    if (p < 0.0) throw ParseError("type_mix: negative probability");
    mix_sum += p;
  }
  if (!d.type_mix.empty() && std::abs(mix_sum - 1.0) > kSumTolerance) {
    throw ParseError("type_mix: probabilities sum to " + std::to_string(mix_sum));
  }

  double bin_sum = 0.0;
  bool bins_empty = true;
  for (double p : d.positional_profile) {
    if (p < 0.0) throw ParseError("positional_profile: negative probability");
    if (p > 0.0) bins_empty = false;
    bin_sum += p;
  }
  if (!bins_empty && std::abs(bin_sum - 1.0) > kSumTolerance) {
    throw ParseError("positional_profile: probabilities sum to " + std::to_string(bin_sum));
  }

  for (const auto& [src, row] : d.confusion) {
    if (row.count(src) != 0) {
      throw ParseError("confusion: row \"" + encode_utf8(src) + "\" maps a character to itself");
    }
    check_table_sum(row, "confusion row");
  }
  check_table_sum(d.insert_chars, "insert_chars");
  check_table_sum(d.delete_chars, "delete_chars");
}

}  // namespace

double ErrorDistribution::mean_errors_per_sentence() const {
  double mean = 0.0;
  for (const auto& [n, p] : errors_per_sentence) mean += static_cast<double>(n) * p;
  return mean;
}

std::vector<char32_t> ErrorDistribution::observed_alphabet() const {
  std::set<char32_t> chars;
  for (const auto& [src, row] : confusion) {
    chars.insert(src);
    for (const auto& [tgt, p] : row) chars.insert(tgt);
  }
  for (const auto& [c, p] : insert_chars) chars.insert(c);
  for (const auto& [c, p] : delete_chars) chars.insert(c);
  return {chars.begin(), chars.end()};
}

std::size_t position_bin(std::size_t src_pos, std::size_t length) {
  const double rel = static_cast<double>(src_pos) / static_cast<double>(length);
  const auto bin = static_cast<std::size_t>(rel * ErrorDistribution::kPositionBins);
  return std::min(bin, ErrorDistribution::kPositionBins - 1);
}

bool ScanAccumulator::add_pair(const SentencePair& pair) {
  const std::string_view corrupted = trim(pair.corrupted);
  const std::string_view correct = trim(pair.correct);
  if (corrupted.empty() || correct.empty()) {
    ++pairs_skipped_;
    return false;
  }

  std::u32string source, target;
  try {
    source = decode_utf8(correct);
    target = decode_utf8(corrupted);
  } catch (const ParseError&) {
    ++pairs_skipped_;
    return false;
  }
  if (source.size() > align::kMaxAlignLength || target.size() > align::kMaxAlignLength) {
    ++pairs_skipped_;
    return false;
  }

  const auto ops = align::traceback(align::build_matrix(source, target), source, target);
  std::uint32_t errors = 0;
  for (const auto& op : ops) {
    if (op.kind == align::EditKind::kMatch) continue;
    ++errors;
    ++type_counts_[op.kind];
    ++bin_counts_[position_bin(op.src_pos, source.size())];
    switch (op.kind) {
      case align::EditKind::kSubstitution:
        ++confusion_counts_[op.src_chars[0]][op.tgt_chars[0]];
        break;
      case align::EditKind::kInsertion:
        ++insert_counts_[op.tgt_chars[0]];
        break;
      case align::EditKind::kDeletion:
        ++delete_counts_[op.src_chars[0]];
        break;
      default:
        break;
    }
  }
  ++errors_per_sentence_[errors];
  ++pairs_scanned_;
  return true;
}

void ScanAccumulator::merge(const ScanAccumulator& other) {
  pairs_scanned_ += other.pairs_scanned_;
  pairs_skipped_ += other.pairs_skipped_;
  for (const auto& [k, n] : other.errors_per_sentence_) errors_per_sentence_[k] += n;
  for (const auto& [k, n] : other.type_counts_) type_counts_[k] += n;
  for (std::size_t b = 0; b < bin_counts_.size(); ++b) bin_counts_[b] += other.bin_counts_[b];
  for (const auto& [src, row] : other.confusion_counts_) {
    for (const auto& [tgt, n] : row) confusion_counts_[src][tgt] += n;
  }
  for (const auto& [c, n] : other.insert_counts_) insert_counts_[c] += n;
  for (const auto& [c, n] : other.delete_counts_) delete_counts_[c] += n;
}

ErrorDistribution ScanAccumulator::finalize() const {
  if (pairs_scanned_ == 0) {
    throw ValidationError("scan: no readable sentence pair in the input");
  }
  ErrorDistribution d;
  d.errors_per_sentence = normalize(errors_per_sentence_);
  d.type_mix = normalize(type_counts_);
  d.insert_chars = normalize(insert_counts_);
  d.delete_chars = normalize(delete_counts_);

  std::uint64_t bin_total = 0;
  for (std::uint64_t n : bin_counts_) bin_total += n;
  if (bin_total > 0) {
    for (std::size_t b = 0; b < bin_counts_.size(); ++b) {
      d.positional_profile[b] =
          static_cast<double>(bin_counts_[b]) / static_cast<double>(bin_total);
    }
  }

  for (const auto& [src, row] : confusion_counts_) {
    std::uint64_t row_total = 0;
    for (const auto& [tgt, n] : row) row_total += n;
    for (const auto& [tgt, n] : row) {
      d.confusion[src][tgt] = static_cast<double>(n) / static_cast<double>(row_total);
    }
  }
  return d;
}

ErrorDistribution scan_corpus(const PairSource& next, ScanSummary* summary) {
  ScanAccumulator acc;
  while (auto pair = next()) acc.add_pair(*pair);
  if (summary != nullptr) {
    summary->pairs_scanned = acc.pairs_scanned();
    summary->pairs_skipped = acc.pairs_skipped();
  }
  if (acc.pairs_scanned() == 0 && acc.pairs_skipped() == 0) {
    throw ValidationError("scan: empty pair stream");
  }
  return acc.finalize();
}

ErrorDistribution scale_density(const ErrorDistribution& dist, std::uint32_t factor) {
  if (factor < 1) throw ValidationError("scale_density: factor must be >= 1");
  ErrorDistribution out = dist;
  out.errors_per_sentence.clear();
  for (const auto& [n, p] : dist.errors_per_sentence) {
    const std::uint64_t scaled = static_cast<std::uint64_t>(n) * factor;
    if (scaled > std::numeric_limits<std::uint32_t>::max()) {
      throw ValidationError("scale_density: scaled error count overflows");
    }
    out.errors_per_sentence[static_cast<std::uint32_t>(scaled)] += p;
  }
  return out;
}

void save(const ErrorDistribution& dist, std::ostream& out) {
  json j;
  j["schema_version"] = dist.schema_version;

  json hist = json::object();
  for (const auto& [n, p] : dist.errors_per_sentence) hist[std::to_string(n)] = p;
  j["errors_per_sentence"] = hist;

  json mix = json::object();
  for (const auto& [kind, p] : dist.type_mix) mix[align::to_string(kind)] = p;
  j["type_mix"] = mix;

  j["positional_profile"] = dist.positional_profile;

  json confusion = json::object();
  for (const auto& [src, row] : dist.confusion) {
    confusion[encode_utf8(src)] = char_map_to_json(row);
  }
  j["confusion"] = confusion;
  j["insert_chars"] = char_map_to_json(dist.insert_chars);
  j["delete_chars"] = char_map_to_json(dist.delete_chars);

  out << j.dump(2) << '\n';
  if (!out) throw IoError("failed writing distribution");
}

void save(const ErrorDistribution& dist, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  save(dist, out);
}

ErrorDistribution load(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("distribution file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("distribution file: expected a JSON object");

  if (!j.contains("schema_version") || !j["schema_version"].is_number_integer()) {
    throw ParseError("distribution file: missing integer schema_version");
  }
  const int version = j["schema_version"].get<int>();
  if (version != ErrorDistribution::kSchemaVersion) {
    throw ValidationError("distribution schema_version " + std::to_string(version) +
                          " is not supported (expected " +
                          std::to_string(ErrorDistribution::kSchemaVersion) + ")");
  }

  ErrorDistribution d;
  d.schema_version = version;
  try {
    for (const auto& [key, value] : j.at("errors_per_sentence").items()) {
      std::size_t used = 0;
      const unsigned long n = std::stoul(key, &used);
      if (used != key.size()) throw ParseError("errors_per_sentence: bad key \"" + key + "\"");
      d.errors_per_sentence[static_cast<std::uint32_t>(n)] = value.get<double>();
    }
    for (const auto& [key, value] : j.at("type_mix").items()) {
      d.type_mix[kind_from_name(key)] = value.get<double>();
    }
    const auto& bins = j.at("positional_profile");
    if (!bins.is_array() || bins.size() != ErrorDistribution::kPositionBins) {
      throw ParseError("positional_profile: expected an array of 10 numbers");
    }
    for (std::size_t b = 0; b < ErrorDistribution::kPositionBins; ++b) {
      d.positional_profile[b] = bins[b].get<double>();
    }
    for (const auto& [key, row] : j.at("confusion").items()) {
      d.confusion[single_char(key, "confusion")] = char_map_from_json(row, "confusion row");
    }
    d.insert_chars = char_map_from_json(j.at("insert_chars"), "insert_chars");
    d.delete_chars = char_map_from_json(j.at("delete_chars"), "delete_chars");
  } catch (const json::exception& e) {
    throw ParseError(std::string("distribution file: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("distribution file: ") + e.what());
  }

  check_invariants(d);
  return d;
}

ErrorDistribution load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  return load(in);
}

ConfusionTable parse_confusion(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("confusion table: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("confusion table: expected a JSON object");

  ConfusionTable table;
  try {
    for (const auto& [key, row] : j.items()) {
      const char32_t src = single_char(key, "confusion table");
      double total = 0.0;
      std::map<char32_t, double> weights;
      for (const auto& [target, weight] : row.items()) {
        const char32_t tgt = single_char(target, "confusion table row");
        if (tgt == src) {
          throw ParseError("confusion table: row \"" + key + "\" maps a character to itself");
        }
        const double w = weight.get<double>();
        if (!(w > 0.0)) {
          throw ParseError("confusion table: weight for \"" + key + "\" -> \"" + target +
                           "\" must be positive");
        }
        weights.emplace(tgt, w);
        total += w;
      }
      if (weights.empty()) {
        throw ParseError("confusion table: row \"" + key + "\" is empty");
      }
      for (auto& [tgt, w] : weights) w /= total;
      table.emplace(src, std::move(weights));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("confusion table: ") + e.what());
  }
  return table;
}

ConfusionTable load_confusion_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_confusion(text);
}

std::vector<std::pair<char32_t, double>> smoothed_confusion_row(
    const ConfusionTable& confusion, char32_t intended,
    const std::vector<char32_t>& alphabet) {
  const std::map<char32_t, double>* row = nullptr;
  if (auto it = confusion.find(intended); it != confusion.end()) row = &it->second;

  std::vector<std::pair<char32_t, double>> weights;
  weights.reserve(alphabet.size());
  for (char32_t c : alphabet) {
    if (c == intended) continue;
    double p = 0.0;
    if (row != nullptr) {
      if (auto it = row->find(c); it != row->end()) p = it->second;
    }
    weights.emplace_back(c, p + kConfusionSmoothingAlpha);
  }
  return weights;
}

}  // namespace spellforge::model
