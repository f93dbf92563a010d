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

#ifndef FAIRSUMM_FAIR_RERANK_HPP_
#define FAIRSUMM_FAIR_RERANK_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairsumm/common.hpp"
#include "fairsumm/corpus.hpp"
#include "fairsumm/rouge.hpp"

namespace fairsumm {

/// P(X <= successes) for X ~ Binomial(trials, p). Exact multiplicative
/// recurrence for small trial counts, log-space accumulation beyond that.
double binomial_cdf(int successes, int trials, double p);

/// tau[i] = minimum number of protected units any length-i ranking prefix
/// must carry so that the binomial test at significance alpha_c passes.
struct FairnessTable {
  int k = 0;
  double p = 0;
  double alpha_c = 0;
  std::vector<int> tau;  // tau[rank-1], ranks 1..k

  int required(int rank) const {
    return tau[static_cast<std::size_t>(rank - 1)];
  }
};

FairnessTable build_fairness_table(int k, double p, double alpha_c);

struct FairRankConfig {
  int k = 0;
  double min_protected_share = 0.5;  // p
  double alpha_c = 0.5;              // adjusted significance
  std::string protected_group;       // empty -> smaller-census group

  void validate() const;
};

/// Post-processing approach: re-rank externally scored units so every
/// ranking prefix carries at least tau[rank] protected units, then take the
/// top k. Scores come from the units' external_score field unless an
/// explicit id->score map is given. Two-group corpora only.
///
/// Ties are broken protected-first, then by lexicographically smaller id.
/// Throws InfeasibilityError naming the first unsatisfiable rank when the
/// protected pool is too small for the table.
std::vector<Index> refasumm(const Corpus& corpus, const FairRankConfig& config,
                            const std::map<std::string, double>* scores = nullptr);

/// Plain top-k of the same score ordering (the unconstrained baseline).
/// Shares the re-ranker's tie discipline, so it needs the same two-group
/// context.
std::vector<Index> score_top_k(const Corpus& corpus, int k,
                               const std::map<std::string, double>* scores = nullptr,
                               const std::string& protected_group = "");

/// Reads a two-column "id<TAB>score" file.
std::map<std::string, double> load_scores(const std::string& path);

struct QualityDeltaReport {
  RougePair base;  // ROUGE of the unconstrained top-k
  RougePair fair;  // ROUGE of the re-ranked summary
};

/// Side-by-side ROUGE of the base and fair rankings against references.
QualityDeltaReport quality_delta_report(
    const Corpus& corpus, const std::vector<Index>& base_topk,
    const std::vector<Index>& fair_topk,
    const std::vector<std::vector<std::string>>& reference_token_lists);

}  // namespace fairsumm

#endif  // FAIRSUMM_FAIR_RERANK_HPP_
