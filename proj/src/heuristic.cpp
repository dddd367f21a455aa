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

#include "spellforge/heuristic.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spellforge/errors.hpp"
#include "spellforge/rng.hpp"
#include "spellforge/unicode.hpp"

namespace spellforge::heuristic {

namespace {

using nlohmann::json;

struct Segment {
  bool is_word = false;
  std::u32string text;
};

std::vector<Segment> segment(std::u32string_view text) {
  std::vector<Segment> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const bool word = !is_space(text[i]);
    std::size_t j = i;
    while (j < text.size() && (!is_space(text[j])) == word) ++j;
    out.push_back({word, std::u32string(text.substr(i, j - i))});
    i = j;
  }
  return out;
}

std::u32string join(const std::vector<Segment>& segments) {
  std::u32string out;
  for (const auto& s : segments) out += s.text;
  return out;
}

// First k of a deterministic partial Fisher-Yates shuffle.
std::vector<std::size_t> sample_without_replacement(Rng& rng, std::vector<std::size_t> pool,
                                                    std::size_t k) {
  k = std::min(k, pool.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.index(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

char32_t uniform_excluding(Rng& rng, const std::vector<char32_t>& alphabet, char32_t excluded,
                           bool* ok) {
  std::vector<char32_t> pool;
  pool.reserve(alphabet.size());
  for (char32_t c : alphabet) {
    if (c != excluded) pool.push_back(c);
  }
  if (pool.empty()) {
    *ok = false;
    return excluded;
  }
  *ok = true;
  return pool[rng.index(pool.size())];
}

std::vector<char32_t> distinct_chars(std::u32string_view text) {
  std::set<char32_t> s(text.begin(), text.end());
  return {s.begin(), s.end()};
}

std::vector<char32_t> confusion_alphabet(const model::ConfusionTable& confusion) {
  std::set<char32_t> chars;
  for (const auto& [src, row] : confusion) {
    chars.insert(src);
    for (const auto& [tgt, p] : row) chars.insert(tgt);
  }
  return {chars.begin(), chars.end()};
}

// Character supply for one word under a fixed config.
class CharSampler {
 public:
  CharSampler(const KeyboardLayout& layout, const model::ConfusionTable& confusion)
      : layout_(layout),
        confusion_(confusion),
        confusion_chars_(confusion_alphabet(confusion)),
        layout_chars_(layout.keys()) {}

  // insert action: confusion alphabet, then layout keys, then the word.
  char32_t insertion_char(Rng& rng, const std::u32string& word) const {
    if (!confusion_chars_.empty()) return confusion_chars_[rng.index(confusion_chars_.size())];
    if (!layout_chars_.empty()) return layout_chars_[rng.index(layout_chars_.size())];
    const auto own = distinct_chars(word);
    return own[rng.index(own.size())];
  }

  bool substitution_char(Rng& rng, Action action, char32_t original,
                         const std::u32string& word, char32_t* out) const {
    if (action == Action::kKeyboard) {
      if (const auto* n = layout_.neighbors(original); n != nullptr && !n->empty()) {
        std::vector<char32_t> pool(n->begin(), n->end());
        *out = pool[rng.index(pool.size())];
        return true;
      }
      // No neighbors: fall through to the confusion table.
    }
    const auto row = model::smoothed_confusion_row(confusion_, original, confusion_chars_);
    if (!row.empty()) {
      std::vector<double> weights;
      weights.reserve(row.size());
      for (const auto& [c, w] : row) weights.push_back(w);
      *out = row[rng.weighted(weights)].first;
      return true;
    }
    // Last resort: uniform over layout keys plus the word's own characters.
    std::set<char32_t> pool(layout_chars_.begin(), layout_chars_.end());
    for (char32_t c : word) pool.insert(c);
    bool ok = false;
    const char32_t c =
        uniform_excluding(rng, {pool.begin(), pool.end()}, original, &ok);
    if (ok) *out = c;
    return ok;
  }

 private:
  const KeyboardLayout& layout_;
  const model::ConfusionTable& confusion_;
  std::vector<char32_t> confusion_chars_;
  std::vector<char32_t> layout_chars_;
};

void corrupt_word(std::u32string& word, const HeuristicConfig& cfg,
                  const CharSampler& sampler, Rng& rng) {
  const auto edits = static_cast<std::size_t>(rng.between(cfg.min_aug, cfg.max_aug));

  if (cfg.action == Action::kInsert) {
    for (std::size_t e = 0; e < edits; ++e) {
      const std::size_t slot = rng.index(word.size() + 1);
      word.insert(word.begin() + static_cast<std::ptrdiff_t>(slot),
                  sampler.insertion_char(rng, word));
    }
    return;
  }

  // orfo / keyboard substitute at distinct non-punctuation positions.
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!is_punctuation(word[i])) eligible.push_back(i);
  }
  if (eligible.empty()) return;
  const auto positions = sample_without_replacement(rng, eligible, edits);
  for (std::size_t pos : positions) {
    char32_t replacement;
    if (sampler.substitution_char(rng, cfg.action, word[pos], word, &replacement)) {
      word[pos] = replacement;
    }
  }
}

}  // namespace

const char* to_string(Action action) {
  switch (action) {
    case Action::kOrfo: return "orfo";
    case Action::kInsert: return "insert";
    case Action::kKeyboard: return "keyboard";
    case Action::kReplace: return "replace";
  }
  return "unknown";
}

const char* to_string(Level level) {
  return level == Level::kWord ? "word" : "sentence";
}

Action action_from_string(const std::string& name) {
  if (name == "orfo") return Action::kOrfo;
  if (name == "insert") return Action::kInsert;
  if (name == "keyboard") return Action::kKeyboard;
  if (name == "replace") return Action::kReplace;
  throw ValidationError("action: expected one of orfo|insert|keyboard|replace, got \"" +
                        name + "\"");
}

Level level_from_string(const std::string& name) {
  if (name == "word") return Level::kWord;
  if (name == "sentence") return Level::kSentence;
  throw ValidationError("level: expected word|sentence, got \"" + name + "\"");
}

HeuristicConfig default_word_config() {
  return {0.1, 1, 3, 5, Action::kOrfo, 0.7, Level::kWord};
}

HeuristicConfig default_sentence_config() {
  return {0.6, 1, 5, 5, Action::kReplace, 0.7, Level::kSentence};
}

std::vector<ConfigViolation> validate_config(const HeuristicConfig& cfg) {
  std::vector<ConfigViolation> violations;
  if (cfg.aug_rate < 0.0 || cfg.aug_rate > 1.0) {
    violations.push_back({"aug_rate", "must be within [0, 1]"});
  }
  if (cfg.aug_prob < 0.0 || cfg.aug_prob > 1.0) {
    violations.push_back({"aug_prob", "must be within [0, 1]"});
  }
  if (cfg.min_aug < 1) violations.push_back({"min_aug", "must be a positive integer"});
  if (cfg.max_aug < cfg.min_aug) {
    violations.push_back({"min_aug,max_aug", "min_aug must not exceed max_aug"});
  }
  if (cfg.mult_num < 1) violations.push_back({"mult_num", "must be a positive integer"});
  return violations;
}

void require_valid(const HeuristicConfig& cfg) {
  const auto violations = validate_config(cfg);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid heuristic config:";
  for (const auto& v : violations) msg << " [" << v.field << "] " << v.message << ";";
  throw ValidationError(msg.str());
}

const std::set<char32_t>* KeyboardLayout::neighbors(char32_t c) const {
  const auto it = adjacency.find(c);
  return it == adjacency.end() ? nullptr : &it->second;
}

std::vector<char32_t> KeyboardLayout::keys() const {
  std::vector<char32_t> out;
  out.reserve(adjacency.size());
  for (const auto& [c, n] : adjacency) out.push_back(c);
  return out;
}

KeyboardLayout KeyboardLayout::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("keyboard layout: ") + e.what());
  }
  KeyboardLayout layout;
  try {
    layout.name = j.at("name").get<std::string>();
    for (const auto& [key, value] : j.at("adjacency").items()) {
      const std::u32string k = decode_utf8(key);
      if (k.size() != 1) throw ParseError("keyboard layout: key \"" + key + "\" is not one character");
      auto& entry = layout.adjacency[k[0]];
      for (const auto& neighbor : value) {
        const std::u32string n = decode_utf8(neighbor.get<std::string>());
        if (n.size() != 1) {
          throw ParseError("keyboard layout: neighbor of \"" + key + "\" is not one character");
        }
        entry.insert(n[0]);
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("keyboard layout: ") + e.what());
  }
  for (const auto& [c, neighbors] : layout.adjacency) {
    if (neighbors.count(c) != 0) {
      throw ParseError("keyboard layout: \"" + encode_utf8(c) + "\" neighbors itself");
    }
    for (char32_t n : neighbors) {
      const auto back = layout.adjacency.find(n);
      if (back == layout.adjacency.end() || back->second.count(c) == 0) {
        throw ParseError("keyboard layout: adjacency not symmetric between \"" +
                         encode_utf8(c) + "\" and \"" + encode_utf8(n) + "\"");
      }
    }
  }
  return layout;
}

KeyboardLayout KeyboardLayout::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

WrongWordTable WrongWordTable::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("wrong-word table: ") + e.what());
  }
  WrongWordTable table;
  try {
    for (const auto& [word, entry] : j.items()) {
      std::vector<std::pair<std::string, double>> variants;
      for (const auto& [variant, weight] : entry.items()) {
        const double w = weight.get<double>();
        if (!(w > 0.0)) {
          throw ParseError("wrong-word table: weight for \"" + variant + "\" must be positive");
        }
        if (variant == word) {
          throw ParseError("wrong-word table: variant of \"" + word + "\" equals the key");
        }
        variants.emplace_back(variant, w);
      }
      if (variants.empty()) {
        throw ParseError("wrong-word table: \"" + word + "\" has no variants");
      }
      table.variants.emplace(word, std::move(variants));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("wrong-word table: ") + e.what());
  }
  return table;
}

WrongWordTable WrongWordTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string augment_word_level(std::string_view sentence, const HeuristicConfig& cfg,
                               const KeyboardLayout& layout,
                               const model::ConfusionTable& confusion, std::uint64_t seed) {
  require_valid(cfg);
  if (cfg.level != Level::kWord) {
    throw ValidationError("augment_word_level: config level is not word");
  }
  if (cfg.action == Action::kReplace) {
    throw ValidationError("augment_word_level: replace is a sentence-level action");
  }

  auto segments = segment(decode_utf8(sentence));
  Rng rng(seed);
  const CharSampler sampler(layout, confusion);

  for (auto& seg : segments) {
    if (!seg.is_word) continue;
    // Select, then gate. Both draws happen for every word so the stream
    // stays aligned across configs.
    const bool selected = rng.chance(cfg.aug_rate);
    const bool passed = rng.chance(cfg.aug_prob);
    if (!selected || !passed) continue;
    corrupt_word(seg.text, cfg, sampler, rng);
  }
  return encode_utf8(join(segments));
}

std::string augment_sentence_level(std::string_view sentence, const HeuristicConfig& cfg,
                                   const WrongWordTable& wrong_words, std::uint64_t seed) {
  require_valid(cfg);
  if (cfg.level != Level::kSentence) {
    throw ValidationError("augment_sentence_level: config level is not sentence");
  }
  if (cfg.action != Action::kReplace) {
    throw ValidationError("augment_sentence_level: action must be replace");
  }

  auto segments = segment(decode_utf8(sentence));
  Rng rng(seed);

  const auto target = static_cast<std::size_t>(rng.between(cfg.min_aug, cfg.max_aug));

  // Candidates are exact table keys; select-then-gate like the word level.
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (!segments[i].is_word) continue;
    if (wrong_words.variants.find(encode_utf8(segments[i].text)) ==
        wrong_words.variants.end()) {
      continue;
    }
    const bool selected = rng.chance(cfg.aug_rate);
    const bool passed = rng.chance(cfg.aug_prob);
    if (selected && passed) kept.push_back(i);
  }

  for (std::size_t i : sample_without_replacement(rng, kept, target)) {
    const auto& variants = wrong_words.variants.at(encode_utf8(segments[i].text));
    std::vector<double> weights;
    weights.reserve(variants.size());
    for (const auto& [variant, w] : variants) weights.push_back(w);
    segments[i].text = decode_utf8(variants[rng.weighted(weights)].first);
  }
  return encode_utf8(join(segments));
}

}  // namespace spellforge::heuristic
