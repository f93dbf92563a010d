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

#ifndef FAIRSUMM_OBJECTIVE_HPP_
#define FAIRSUMM_OBJECTIVE_HPP_

#include <cmath>
#include <span>
#include <vector>

#include "fairsumm/similarity.hpp"

namespace fairsumm {

/// Weights of the two objective terms. Both monotone submodular, so any
/// nonnegative combination is as well.
template <typename Scalar>
struct ObjectiveConfigT {
  Scalar coverage_weight = 1;   // lambda_1
  Scalar diversity_weight = 1;  // lambda_2

  void validate() const {
    if (coverage_weight < 0 || diversity_weight < 0)
      throw ValidationError("objective weights must be nonnegative");
    if (coverage_weight == 0 && diversity_weight == 0)
      throw ValidationError("objective weights must not both be zero");
  }
};

using ObjectiveConfig = ObjectiveConfigT<double>;

/// Coverage of a summary: total similarity of the selected units to the
/// whole corpus, sum_{i in S} sum_{j in V} sim(i,j) = sum_{i in S} n*r_i.
template <typename Scalar>
Scalar coverage(std::span<const Index> selected,
                const SimilarityModelT<Scalar>& model) {
  const Scalar n = static_cast<Scalar>(model.size());
  Scalar total = 0;
  for (Index i : selected) total += n * model.singleton_reward(i);
  return total;
}

/// Diversity reward: sum over clusters of sqrt of the selected units'
/// singleton rewards. The square root makes a second pick from the same
/// cluster worth less than a first pick from a fresh one.
template <typename Scalar>
Scalar diversity_reward(std::span<const Index> selected,
                        const SimilarityModelT<Scalar>& model) {
  std::vector<Scalar> sums(static_cast<std::size_t>(model.cluster_count), 0);
  for (Index i : selected)
    sums[static_cast<std::size_t>(
        model.partition[static_cast<std::size_t>(i)])] +=
        model.singleton_reward(i);
  Scalar total = 0;
  for (Scalar q : sums) total += std::sqrt(std::max<Scalar>(q, 0));
  return total;
}

template <typename Scalar>
Scalar objective_value(std::span<const Index> selected,
                       const SimilarityModelT<Scalar>& model,
                       const ObjectiveConfigT<Scalar>& config) {
  config.validate();
  Scalar value = 0;
  if (config.coverage_weight != 0)
    value += config.coverage_weight * coverage(selected, model);
  if (config.diversity_weight != 0)
    value += config.diversity_weight * diversity_reward(selected, model);
  return value;
}

/// Growing summary with cached per-cluster reward sums so that marginal
/// gains cost O(1). Single-owner mutable; the model is shared read-only.
template <typename Scalar>
class SummaryStateT {
 public:
  SummaryStateT(const SimilarityModelT<Scalar>& model,
                const ObjectiveConfigT<Scalar>& config)
      : model_(&model),
        config_(config),
        in_set_(static_cast<std::size_t>(model.size()), false),
        cluster_sums_(static_cast<std::size_t>(model.cluster_count), 0) {
    config_.validate();
  }

  bool contains(Index z) const { return in_set_[static_cast<std::size_t>(z)]; }
  Index size() const { return static_cast<Index>(order_.size()); }
  std::span<const Index> selected() const { return order_; }
  Scalar value() const { return value_; }
  const ObjectiveConfigT<Scalar>& config() const { return config_; }
  const SimilarityModelT<Scalar>& model() const { return *model_; }

  /// F(S + z) - F(S) without touching the cached state.
  Scalar gain(Index z) const {
    if (contains(z))
      throw ValidationError("marginal gain requested for an already selected unit");
    const Scalar r = model_->singleton_reward(z);
    Scalar g = config_.coverage_weight * static_cast<Scalar>(model_->size()) * r;
    if (config_.diversity_weight != 0) {
      const Scalar q = cluster_sums_[cluster_of(z)];
      g += config_.diversity_weight *
           (std::sqrt(std::max<Scalar>(q + r, 0)) -
            std::sqrt(std::max<Scalar>(q, 0)));
    }
    return g;
  }

  /// Adds z and returns the realized gain.
  Scalar add(Index z) {
    Scalar g = gain(z);
    in_set_[static_cast<std::size_t>(z)] = true;
    order_.push_back(z);
    cluster_sums_[cluster_of(z)] += model_->singleton_reward(z);
    value_ += g;
    return g;
  }

  Scalar cluster_sum(Index c) const {
    return cluster_sums_[static_cast<std::size_t>(c)];
  }

  /// Recomputes the objective from scratch; if the incremental cache has
  /// drifted past `tolerance`, rebuilds every cache. Returns the drift.
  Scalar resync(Scalar tolerance = Scalar(1e-9)) {
    Scalar fresh = objective_value<Scalar>(order_, *model_, config_);
    Scalar drift = std::abs(fresh - value_);
    if (drift > tolerance) {
      std::fill(cluster_sums_.begin(), cluster_sums_.end(), Scalar(0));
      for (Index i : order_) cluster_sums_[cluster_of(i)] += model_->singleton_reward(i);
    }
    value_ = fresh;
    return drift;
  }

 private:
  std::size_t cluster_of(Index z) const {
    return static_cast<std::size_t>(model_->partition[static_cast<std::size_t>(z)]);
  }

  const SimilarityModelT<Scalar>* model_;
  ObjectiveConfigT<Scalar> config_;
  std::vector<bool> in_set_;
  std::vector<Index> order_;
  std::vector<Scalar> cluster_sums_;
  Scalar value_ = 0;
};

using SummaryState = SummaryStateT<double>;

/// Discrete derivative of the objective at the current state.
template <typename Scalar>
Scalar marginal_gain(const SummaryStateT<Scalar>& state, Index z) {
  return state.gain(z);
}

/// Curvature c_f = max_{j: F(j) > 0} (F(j) - gain(j | V - j)) / F(j).
/// 0 for a modular objective (diversity weight 0), at most 1 for any
/// monotone submodular one; drives the 1/(P + c_f) greedy guarantee.
template <typename Scalar>
Scalar curvature(const SimilarityModelT<Scalar>& model,
                 const ObjectiveConfigT<Scalar>& config) {
  const Index n = model.size();
  if (n < 2) throw ValidationError("curvature needs at least two units");
  config.validate();

  std::vector<Scalar> cluster_total(
      static_cast<std::size_t>(model.cluster_count), 0);
  for (Index i = 0; i < n; ++i)
    cluster_total[static_cast<std::size_t>(
        model.partition[static_cast<std::size_t>(i)])] +=
        model.singleton_reward(i);

  bool any = false;
  Scalar worst = 0;
  for (Index j = 0; j < n; ++j) {
    const Scalar r = model.singleton_reward(j);
    const Scalar singleton =
        config.coverage_weight * static_cast<Scalar>(n) * r +
        config.diversity_weight * std::sqrt(std::max<Scalar>(r, 0));
    if (!(singleton > 0)) continue;
    any = true;
    const Scalar q = cluster_total[static_cast<std::size_t>(
        model.partition[static_cast<std::size_t>(j)])];
    const Scalar last_gain =
        config.coverage_weight * static_cast<Scalar>(n) * r +
        config.diversity_weight *
            (std::sqrt(std::max<Scalar>(q, 0)) -
             std::sqrt(std::max<Scalar>(q - r, 0)));
    worst = std::max(worst, (singleton - last_gain) / singleton);
  }
  if (!any)
    throw ValidationError("curvature undefined: every singleton value is zero");
  return std::clamp<Scalar>(worst, 0, 1);
}

}  // namespace fairsumm

#endif  // FAIRSUMM_OBJECTIVE_HPP_
