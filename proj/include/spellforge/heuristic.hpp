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

#ifndef SPELLFORGE_HEURISTIC_HPP_
#define SPELLFORGE_HEURISTIC_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spellforge/error_model.hpp"

namespace spellforge::heuristic {

// Rule-driven typo injection without a mined distribution: keyboard
// miss-clicks, probability-weighted character confusion ("orfo"), random
// character insertion, and frequent-wrong-word replacement.

enum class Action : std::uint8_t { kOrfo, kInsert, kKeyboard, kReplace };
enum class Level : std::uint8_t { kWord, kSentence };

const char* to_string(Action action);
const char* to_string(Level level);
Action action_from_string(const std::string& name);  // throws ValidationError
Level level_from_string(const std::string& name);

struct HeuristicConfig {
  double aug_rate = 0.1;  // share of units eligible for modification
  int min_aug = 1;
  int max_aug = 3;
  int mult_num = 5;       // max distinct variants per input (dataset expansion cap)
  Action action = Action::kOrfo;
  double aug_prob = 0.7;  // probability a selected unit is actually modified
  Level level = Level::kWord;
};

HeuristicConfig default_word_config();
HeuristicConfig default_sentence_config();

struct ConfigViolation {
  std::string field;
  std::string message;
};

// Reports every invariant violation at once; empty means the config is ok.
std::vector<ConfigViolation> validate_config(const HeuristicConfig& cfg);
void require_valid(const HeuristicConfig& cfg);  // throws ValidationError

// Physical key adjacency. Symmetric, never self-adjacent.
struct KeyboardLayout {
  std::string name;
  std::map<char32_t, std::set<char32_t>> adjacency;

  const std::set<char32_t>* neighbors(char32_t c) const;
  std::vector<char32_t> keys() const;

  // Parses {"name": ..., "adjacency": {"q": ["w", ...], ...}} and checks the
  // invariants.
  static KeyboardLayout load_file(const std::string& path);
  static KeyboardLayout parse(const std::string& text);
};

// Correct word -> weighted incorrect variants.
struct WrongWordTable {
  std::map<std::string, std::vector<std::pair<std::string, double>>> variants;

  // Parses {"word": {"variant": weight, ...}, ...}; weights must be
  // positive and variants must differ from their key.
  static WrongWordTable load_file(const std::string& path);
  static WrongWordTable parse(const std::string& text);
};

// Word-level corruption: each whitespace-delimited word is independently
// selected with aug_rate, gated with aug_prob, and then receives between
// min_aug and max_aug character edits of cfg.action. Substitution targets
// skip punctuation characters; insertions may land anywhere in the word.
// Keyboard substitution falls back to the confusion table and then to a
// uniform alphabet when a character has no neighbors. Deterministic in
// (sentence, cfg, seed).
std::string augment_word_level(std::string_view sentence, const HeuristicConfig& cfg,
                               const KeyboardLayout& layout,
                               const model::ConfusionTable& confusion, std::uint64_t seed);

// Sentence-level corruption: replaces known-correct words with weighted
// wrong variants. Candidate tokens are exact keys of the table; candidates
// pass the aug_rate/aug_prob gates and at most a drawn target in
// [min_aug, max_aug] of them are replaced.
std::string augment_sentence_level(std::string_view sentence, const HeuristicConfig& cfg,
                                   const WrongWordTable& wrong_words, std::uint64_t seed);

}  // namespace spellforge::heuristic

#endif  // SPELLFORGE_HEURISTIC_HPP_
