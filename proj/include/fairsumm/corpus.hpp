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

#ifndef FAIRSUMM_CORPUS_HPP_
#define FAIRSUMM_CORPUS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairsumm/common.hpp"
#include "fairsumm/tokenize.hpp"

namespace fairsumm {

/// Units loaded with --allow-unlabeled and no usable group land here; the
/// group is excluded from fairness quota construction (quota pinned to 0).
inline constexpr const char* kUnknownGroup = "__unknown__";

/// One preprocessed tweet/sentence carrying its group label.
struct TextUnit {
  std::string id;
  std::string raw_text;
  std::vector<std::string> tokens;  // lowercase, stopword-free, stemmed
  std::string group;
  std::optional<double> external_score;  // used only by the fair re-ranker
};

/// Immutable indexed collection of TextUnits plus the group census.
/// Instances are safe to share read-only across threads.
class Corpus {
 public:
  Corpus() = default;
  /// Validates invariants: unique ids, nonempty, census consistency.
  explicit Corpus(std::vector<TextUnit> units);

  const std::vector<TextUnit>& units() const { return units_; }
  const TextUnit& unit(Index i) const { return units_[static_cast<std::size_t>(i)]; }
  Index size() const { return static_cast<Index>(units_.size()); }

  /// Distinct group labels in first-appearance order.
  const std::vector<std::string>& groups() const { return groups_; }
  /// group label -> number of units.
  const std::map<std::string, int>& census() const { return census_; }
  /// Census restricted to labeled groups (drops kUnknownGroup).
  std::map<std::string, int> labeled_census() const;

  Index group_index(const std::string& group) const;
  /// unit index -> index into groups().
  const std::vector<Index>& group_of() const { return group_of_; }

  std::optional<Index> find_unit(const std::string& id) const;

 private:
  std::vector<TextUnit> units_;
  std::vector<std::string> groups_;
  std::vector<Index> group_of_;
  std::map<std::string, int> census_;
  std::map<std::string, Index> id_index_;
};

struct LoadOptions {
  const StopwordSet* stopwords = nullptr;  // default_stopwords() if null
  bool allow_unlabeled = false;
};

/// Loads a JSONL corpus: one {"id","text","group"[,"score"]} object per
/// line. Exact duplicate texts (case/whitespace-insensitive) are dropped,
/// keeping the first occurrence.
Corpus load_corpus(const std::string& path, const LoadOptions& options = {});

/// Same parser over an already-read buffer; used by load_corpus.
Corpus parse_corpus(const std::string& jsonl, const LoadOptions& options = {});

/// Serializes a corpus back to JSONL (inverse of load_corpus up to
/// whitespace normalization of the dedup key).
std::string serialize_corpus(const Corpus& corpus);

/// Dedup key: lowercased text with whitespace runs collapsed to one space.
std::string normalize_for_dedup(const std::string& raw_text);

}  // namespace fairsumm

#endif  // FAIRSUMM_CORPUS_HPP_
