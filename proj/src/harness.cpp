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

#include "fairsumm/harness.hpp"

#include <bit>
#include <cmath>

namespace fairsumm {

void NoiseExperimentConfig::validate() const {
  if (error_rates.empty())
    throw ValidationError("noise experiment needs at least one error rate");
  for (double r : error_rates)
    if (r < 0.0 || r >= 1.0)
      throw ValidationError("error rates must lie in [0, 1)");
  if (trials < 1) throw ValidationError("trials must be >= 1");
}

std::vector<NoiseRateResult> run_noise_experiment(
    const Corpus& corpus, const SimilarityModel& model, FairnessNotion notion,
    int k, const ObjectiveConfig& objective, const SolverConfig& solver,
    const NoiseExperimentConfig& config,
    const std::vector<std::vector<std::string>>* references) {
  config.validate();
  if (corpus.groups().size() != 2)
    throw ValidationError("noise experiment supports exactly two groups, got " +
                          std::to_string(corpus.groups().size()));
  if (corpus.census().contains(kUnknownGroup))
    throw ValidationError("noise experiment requires fully labeled corpora");

  const Index n = corpus.size();
  const std::string& group_a = corpus.groups()[0];
  const std::string& group_b = corpus.groups()[1];

  // One sub-seed per (rate, trial) so trials stay independent and the
  // aggregate is order-insensitive.
  SplitMix64 seeder(config.rng_seed);
  std::vector<std::vector<std::uint64_t>> sub_seeds;
  for (std::size_t ri = 0; ri < config.error_rates.size(); ++ri) {
    sub_seeds.emplace_back();
    for (int t = 0; t < config.trials; ++t) sub_seeds.back().push_back(seeder.next());
  }

  std::vector<NoiseRateResult> results;
  for (std::size_t ri = 0; ri < config.error_rates.size(); ++ri) {
    const double rate = config.error_rates[ri];
    const int flips = static_cast<int>(std::floor(rate * static_cast<double>(n)));

    NoiseRateResult row;
    row.rate = rate;
    row.zero_flip_warning = rate > 0.0 && flips == 0;

    double sum_a = 0, sum_b = 0;
    RougePair rouge_sum;
    for (int trial = 0; trial < config.trials; ++trial) {
      SplitMix64 rng(sub_seeds[ri][static_cast<std::size_t>(trial)]);

      // Partial Fisher-Yates: the first `flips` entries form the flip set.
      std::vector<Index> order(static_cast<std::size_t>(n));
      for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
      for (int j = 0; j < flips; ++j) {
        std::uint64_t pick =
            rng.next_below(static_cast<std::uint64_t>(n - j));
        std::swap(order[static_cast<std::size_t>(j)],
                  order[static_cast<std::size_t>(j) + pick]);
      }

      std::vector<Index> noisy_group = corpus.group_of();
      for (int j = 0; j < flips; ++j) {
        Index u = order[static_cast<std::size_t>(j)];
        noisy_group[static_cast<std::size_t>(u)] =
            1 - noisy_group[static_cast<std::size_t>(u)];
      }
      std::map<std::string, int> noisy_census{{group_a, 0}, {group_b, 0}};
      for (Index g : noisy_group) ++noisy_census[g == 0 ? group_a : group_b];

      auto quotas = make_quotas(notion, k, noisy_census);
      PartitionMatroid oracle(noisy_group,
                              {quotas.at(group_a), quotas.at(group_b)});
      SolveResult solved = fairsumm(model, objective, oracle, solver);

      for (Index z : solved.selected)
        (corpus.group_of()[static_cast<std::size_t>(z)] == 0 ? sum_a : sum_b) += 1;

      if (references != nullptr) {
        std::vector<std::string> tokens;
        for (Index z : solved.selected)
          for (const std::string& tok : corpus.unit(z).tokens)
            tokens.push_back(tok);
        RougePair pair = rouge_multi(tokens, *references);
        rouge_sum.rouge1.precision += pair.rouge1.precision;
        rouge_sum.rouge1.recall += pair.rouge1.recall;
        rouge_sum.rouge1.f1 += pair.rouge1.f1;
        rouge_sum.rouge2.precision += pair.rouge2.precision;
        rouge_sum.rouge2.recall += pair.rouge2.recall;
        rouge_sum.rouge2.f1 += pair.rouge2.f1;
      }
    }

    const double trials = static_cast<double>(config.trials);
    row.mean_true_counts[group_a] = sum_a / trials;
    row.mean_true_counts[group_b] = sum_b / trials;
    if (references != nullptr) {
      for (RougeScore* s : {&rouge_sum.rouge1, &rouge_sum.rouge2}) {
        s->precision /= trials;
        s->recall /= trials;
        s->f1 /= trials;
      }
      row.mean_rouge = rouge_sum;
    }
    results.push_back(std::move(row));
  }
  return results;
}

BruteForceResult brute_force_optimum(const SimilarityModel& model,
                                     const ObjectiveConfig& objective,
                                     const PartitionMatroid& oracle, int k) {
  const Index n = model.size();
  if (n > 20)
    throw ValidationError("brute force oracle refuses n > 20, got " +
                          std::to_string(n));
  if (k < 0) throw ValidationError("k must be nonnegative");
  objective.validate();

  BruteForceResult best;  // empty set, value 0
  std::vector<Index> subset;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    if (std::popcount(mask) > k) continue;
    subset.clear();
    for (Index i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    if (!oracle.independent(subset)) continue;
    double value = objective_value<double>(subset, model, objective);
    if (value > best.value ||
        (value == best.value && !best.selected.empty() &&
         subset < best.selected)) {
      best.value = value;
      best.selected = subset;
    }
  }
  return best;
}

}  // namespace fairsumm
