// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairsumm/porter.hpp"

#include <array>
#include <cstddef>
#include <string_view>

namespace fairsumm {
namespace {

// Implements M.F. Porter's 1980 suffix-stripping algorithm. A word is a
// sequence [C](VC)^m[V]; every rule condition below is expressed in terms
// of the measure m of the stem left after removing a candidate suffix.

bool is_vowel_letter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// A consonant is a non-vowel letter, or 'y' when preceded by a vowel.
bool is_consonant(std::string_view w, std::size_t i) {
  char c = w[i];
  if (is_vowel_letter(c)) return false;
  if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
  return true;
}

// The measure m of w[0..len): number of VC sequences.
int measure(std::string_view w, std::size_t len) {
  int m = 0;
  std::size_t i = 0;
  while (i < len && is_consonant(w, i)) ++i;
  while (i < len) {
    while (i < len && !is_consonant(w, i)) ++i;
    if (i == len) break;
    ++m;
    while (i < len && is_consonant(w, i)) ++i;
  }
  return m;
}

bool contains_vowel(std::string_view w, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (!is_consonant(w, i)) return true;
  return false;
}

bool ends_double_consonant(std::string_view w) {
  std::size_t n = w.size();
  if (n < 2 || w[n - 1] != w[n - 2]) return false;
  return is_consonant(w, n - 1);
}

// *o: stem ends cvc where the final c is not w, x or y.
bool ends_cvc(std::string_view w) {
  std::size_t n = w.size();
  if (n < 3) return false;
  if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) ||
      !is_consonant(w, n - 1))
    return false;
  char c = w[n - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Longest matching suffix wins; only that rule's condition is tested.
// Returns true if some suffix matched (whether or not it was applied).
template <std::size_t N>
bool apply_rules(std::string& w, const std::array<Rule, N>& rules,
                 int min_measure) {
  const Rule* best = nullptr;
  for (const Rule& r : rules) {
    if (ends_with(w, r.suffix) &&
        (best == nullptr || r.suffix.size() > best->suffix.size()))
      best = &r;
  }
  if (best == nullptr) return false;
  std::size_t stem_len = w.size() - best->suffix.size();
  if (measure(w, stem_len) > min_measure) {
    w.resize(stem_len);
    w.append(best->replacement);
  }
  return true;
}

void step1a(std::string& w) {
  if (ends_with(w, "sses")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ies")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ss")) {
    // keep
  } else if (ends_with(w, "s")) {
    w.resize(w.size() - 1);
  }
}

void step1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
    return;
  }
  bool stripped = false;
  if (ends_with(w, "ed") && contains_vowel(w, w.size() - 2)) {
    w.resize(w.size() - 2);
    stripped = true;
  } else if (ends_with(w, "ing") && contains_vowel(w, w.size() - 3)) {
    w.resize(w.size() - 3);
    stripped = true;
  }
  if (!stripped) return;
  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w.push_back('e');
  } else if (ends_double_consonant(w)) {
    char c = w.back();
    if (c != 'l' && c != 's' && c != 'z') w.pop_back();
  } else if (measure(w, w.size()) == 1 && ends_cvc(w)) {
    w.push_back('e');
  }
}

void step1c(std::string& w) {
  if (ends_with(w, "y") && contains_vowel(w, w.size() - 1)) w.back() = 'i';
}

void step2(std::string& w) {
  static constexpr std::array<Rule, 20> rules{{
      {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
      {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
      {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
      {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
      {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
      {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
      {"iviti", "ive"},   {"biliti", "ble"},
  }};
  apply_rules(w, rules, 0);
}

void step3(std::string& w) {
  static constexpr std::array<Rule, 7> rules{{
      {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
      {"ical", "ic"},  {"ful", ""},   {"ness", ""},
  }};
  apply_rules(w, rules, 0);
}

void step4(std::string& w) {
  static constexpr std::array<Rule, 19> rules{{
      {"al", ""},  {"ance", ""}, {"ence", ""},  {"er", ""},   {"ic", ""},
      {"able", ""}, {"ible", ""}, {"ant", ""},   {"ement", ""},
      {"ment", ""}, {"ent", ""},  {"ion", ""},   {"ou", ""},   {"ism", ""},
      {"ate", ""},  {"iti", ""},  {"ous", ""},   {"ive", ""},  {"ize", ""},
  }};
  const Rule* best = nullptr;
  for (const Rule& r : rules) {
    if (ends_with(w, r.suffix) &&
        (best == nullptr || r.suffix.size() > best->suffix.size()))
      best = &r;
  }
  if (best == nullptr) return;
  std::size_t stem_len = w.size() - best->suffix.size();
  if (best->suffix == "ion") {
    if (stem_len == 0 || (w[stem_len - 1] != 's' && w[stem_len - 1] != 't'))
      return;
  }
  if (measure(w, stem_len) > 1) w.resize(stem_len);
}

void step5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  std::size_t stem_len = w.size() - 1;
  int m = measure(w, stem_len);
  if (m > 1) {
    w.resize(stem_len);
  } else if (m == 1) {
    std::string_view stem(w.data(), stem_len);
    if (!ends_cvc(stem)) w.resize(stem_len);
  }
}

void step5b(std::string& w) {
  if (ends_double_consonant(w) && w.back() == 'l' &&
      measure(w, w.size()) > 1)
    w.pop_back();
}

}  // namespace

std::string porter_stem_once(const std::string& word) {
  if (word.size() <= 2) return word;
  std::string w = word;
  step1a(w);
  step1b(w);
  step1c(w);
  step2(w);
  step3(w);
  step4(w);
  step5a(w);
  step5b(w);
  return w;
}

std::string porter_stem(const std::string& word) {
  std::string w = word;
  // Converges: every changing pass shortens the word except y->i, which
  // cannot recur. The cap is unreachable in practice.
  for (int pass = 0; pass < 8; ++pass) {
    std::string next = porter_stem_once(w);
    if (next == w) break;
    w = std::move(next);
  }
  return w;
}

}  // namespace fairsumm
