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

#ifndef FAIRSUMM_FAIRNESS_HPP_
#define FAIRSUMM_FAIRNESS_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "fairsumm/common.hpp"
#include "fairsumm/corpus.hpp"

namespace fairsumm {

enum class FairnessNotion { kEqual, kProportional, kCustom };

FairnessNotion parse_notion(const std::string& name);
std::string notion_name(FairnessNotion notion);

/// Per-group summary quotas c_i for a desired fairness notion.
///
/// equal: floor(k/t) each, remainder to the largest-census groups
/// (lexicographic tie-break). proportional: largest-remainder (Hamilton)
/// apportionment of k*census/N. The reserved unlabeled group never takes
/// part in the apportionment and is pinned to quota 0.
/// Throws InfeasibilityError (naming the group) if any quota exceeds the
/// group's census.
std::map<std::string, int> make_quotas(FairnessNotion notion, int k,
                                       const std::map<std::string, int>& census);

/// Checks sum == k, feasibility against census, and known group names.
void validate_quotas(const std::map<std::string, int>& quotas, int k,
                     const std::map<std::string, int>& census);

/// Fairness notion + quotas, the summary-side contract of a run.
struct FairnessSpec {
  FairnessNotion notion = FairnessNotion::kEqual;
  int k = 0;
  std::map<std::string, int> quotas;

  static FairnessSpec make(FairnessNotion notion, int k,
                           const std::map<std::string, int>& census);
  static FairnessSpec custom(const std::map<std::string, int>& quotas,
                             const std::map<std::string, int>& census);
};

/// Partition matroid |S ∩ Z_g| <= quota[g] over unit indices.
class PartitionMatroid {
 public:
  PartitionMatroid(std::vector<Index> group_of, std::vector<int> quotas);

  static PartitionMatroid from_spec(const Corpus& corpus,
                                    const FairnessSpec& spec);
  /// Plain cardinality constraint |S| <= k (one class holds everything).
  static PartitionMatroid cardinality(Index n, int k);

  bool independent(std::span<const Index> set) const;
  /// True iff set + {z} stays independent, assuming set already is.
  bool can_extend(std::span<const Index> set, Index z) const;

  Index num_groups() const { return static_cast<Index>(quotas_.size()); }
  Index group_of(Index unit) const {
    return group_of_[static_cast<std::size_t>(unit)];
  }
  const std::vector<int>& quotas() const { return quotas_; }
  Index ground_size() const { return static_cast<Index>(group_of_.size()); }

 private:
  std::vector<Index> group_of_;
  std::vector<int> quotas_;
};

/// Outcome of auditing one group's summary count.
struct GroupAudit {
  bool under_equal = false;         // count below the equal-representation bar
  bool under_proportional = false;  // count below the proportional bar
  bool adverse_impact = false;      // selection rate < 80% of the best rate
  bool zero_census = false;         // group absent from the corpus; rates skipped
  bool ok() const {
    return !under_equal && !under_proportional && !adverse_impact;
  }
};

/// Flags each group of a finished summary against the three fairness
/// notions. Rate comparisons are exact integer arithmetic, no rounding.
std::map<std::string, GroupAudit> adverse_impact_audit(
    const std::map<std::string, int>& summary_counts,
    const std::map<std::string, int>& census);

/// "group=count,group=count" round-trip for the --quota/--census flags.
std::map<std::string, int> parse_group_counts(const std::string& text);
std::string format_group_counts(const std::map<std::string, int>& counts);

}  // namespace fairsumm

#endif  // FAIRSUMM_FAIRNESS_HPP_
