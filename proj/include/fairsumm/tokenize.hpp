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

#ifndef FAIRSUMM_TOKENIZE_HPP_
#define FAIRSUMM_TOKENIZE_HPP_

#include <string>
#include <unordered_set>
#include <vector>

namespace fairsumm {

using StopwordSet = std::unordered_set<std::string>;

/// The pinned English stopword list shipped with the toolkit.
const StopwordSet& default_stopwords();

/// Loads a stopword file: one term per line, UTF-8, '#' comments allowed.
StopwordSet load_stopwords(const std::string& path);

/// Splits UTF-8 text into lowercase word tokens. ASCII alphanumerics are
/// word characters (folded to lowercase); multi-byte UTF-8 sequences are
/// kept verbatim as word characters; everything else separates tokens.
std::vector<std::string> split_words(const std::string& text);

/// Full preprocessing pipeline: lowercase/split, drop stopwords, Porter-stem
/// to a fixed point, drop stems that collide with a stopword. Deterministic;
/// may return an empty list.
std::vector<std::string> preprocess(const std::string& raw_text,
                                    const StopwordSet& stopwords);

}  // namespace fairsumm

#endif  // FAIRSUMM_TOKENIZE_HPP_
