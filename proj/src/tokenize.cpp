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

#include "fairsumm/tokenize.hpp"

#include <cctype>
#include <fstream>

#include "fairsumm/common.hpp"
#include "fairsumm/porter.hpp"

namespace fairsumm {
namespace {

// Snowball English list, minus the apostrophe contractions (the tokenizer
// splits those into their component terms, which the list already covers).
constexpr const char* kDefaultStopwords[] = {
    "i",       "me",      "my",       "myself",  "we",       "our",
    "ours",    "ourselves", "you",    "your",    "yours",    "yourself",
    "yourselves", "he",   "him",      "his",     "himself",  "she",
    "her",     "hers",    "herself",  "it",      "its",      "itself",
    "they",    "them",    "their",    "theirs",  "themselves", "what",
    "which",   "who",     "whom",     "this",    "that",     "these",
    "those",   "am",      "is",       "are",     "was",      "were",
    "be",      "been",    "being",    "have",    "has",      "had",
    "having",  "do",      "does",     "did",     "doing",    "would",
    "should",  "could",   "ought",    "a",       "an",       "the",
    "and",     "but",     "if",       "or",      "because",  "as",
    "until",   "while",   "of",       "at",      "by",       "for",
    "with",    "about",   "against",  "between", "into",     "through",
    "during",  "before",  "after",    "above",   "below",    "to",
    "from",    "up",      "down",     "in",      "out",      "on",
    "off",     "over",    "under",    "again",   "further",  "then",
    "once",    "here",    "there",    "when",    "where",    "why",
    "how",     "all",     "any",      "both",    "each",     "few",
    "more",    "most",    "other",    "some",    "such",     "no",
    "nor",     "not",     "only",     "own",     "same",     "so",
    "than",    "too",     "very",     "s",       "t",        "can",
    "will",    "just",    "don",      "now",
};

}  // namespace

const StopwordSet& default_stopwords() {
  static const StopwordSet set(std::begin(kDefaultStopwords),
                               std::end(kDefaultStopwords));
  return set;
}

StopwordSet load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open stopword file: " + path);
  StopwordSet set;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    set.insert(line);
  }
  return set;
}

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> words;
  std::string current;
  for (unsigned char c : text) {
    bool word_char = std::isalnum(c) || c >= 0x80;
    if (word_char) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::vector<std::string> preprocess(const std::string& raw_text,
                                    const StopwordSet& stopwords) {
  std::vector<std::string> tokens;
  for (std::string& word : split_words(raw_text)) {
    if (stopwords.contains(word)) continue;
    std::string stem = porter_stem(word);
    if (stem.empty() || stopwords.contains(stem)) continue;
    tokens.push_back(std::move(stem));
  }
  return tokens;
}

}  // namespace fairsumm
