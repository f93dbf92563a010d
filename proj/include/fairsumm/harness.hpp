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

#ifndef FAIRSUMM_HARNESS_HPP_
#define FAIRSUMM_HARNESS_HPP_

#include <optional>

#include "fairsumm/classwise.hpp"
#include "fairsumm/rouge.hpp"
#include "fairsumm/solver.hpp"

namespace fairsumm {

struct NoiseExperimentConfig {
  std::vector<double> error_rates;  // each in [0, 1)
  int trials = 1;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

struct NoiseRateResult {
  double rate = 0;
  std::map<std::string, double> mean_true_counts;  // audited on true labels
  std::optional<RougePair> mean_rouge;             // when references given
  bool zero_flip_warning = false;                  // rate > 0 rounded to 0 flips
};

/// Label-noise robustness experiment: per trial, flip the labels of a
/// seeded-random floor(rate*N) subset (partial Fisher-Yates over SplitMix64,
/// one derived sub-seed per trial), rebuild quotas from the noisy census,
/// solve, then tally the selection by the true labels. Two-group corpora
/// only. The similarity model is label-free and shared across trials.
std::vector<NoiseRateResult> run_noise_experiment(
    const Corpus& corpus, const SimilarityModel& model, FairnessNotion notion,
    int k, const ObjectiveConfig& objective, const SolverConfig& solver,
    const NoiseExperimentConfig& config,
    const std::vector<std::vector<std::string>>* references = nullptr);

struct BruteForceResult {
  std::vector<Index> selected;  // ascending indices
  double value = 0;
};

/// Exhaustive argmax of the objective over independent subsets of size <= k.
/// Verification oracle for the solver's approximation guarantee; refuses
/// ground sets larger than 20 units. Ties go to the lexicographically
/// smallest index sequence.
BruteForceResult brute_force_optimum(const SimilarityModel& model,
                                     const ObjectiveConfig& objective,
                                     const PartitionMatroid& oracle, int k);

}  // namespace fairsumm

#endif  // FAIRSUMM_HARNESS_HPP_
