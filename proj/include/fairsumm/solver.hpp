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

#ifndef FAIRSUMM_SOLVER_HPP_
#define FAIRSUMM_SOLVER_HPP_

#include <chrono>
#include <concepts>
#include <span>
#include <string>
#include <vector>

#include "fairsumm/fairness.hpp"
#include "fairsumm/objective.hpp"

namespace fairsumm {

/// Anything that can answer "does the selection stay independent if we add
/// z". A conjunction of oracles models an intersection of matroids, so the
/// solver is open to multiple constraints even though only the partition
/// matroid ships.
template <typename O>
concept IndependenceOracle =
    requires(const O& oracle, std::span<const Index> set, Index z) {
      { oracle.can_extend(set, z) } -> std::convertible_to<bool>;
    };

struct SolverConfig {
  double delta = 0.1;             // geometric threshold decay
  Index max_thresholds = 1000000;  // guard on the ladder length

  void validate() const {
    if (delta <= 0) throw ValidationError("solver delta must be positive");
    if (max_thresholds < 1)
      throw ValidationError("threshold guard must be positive");
  }
};

template <typename Scalar>
struct SolveResultT {
  std::vector<Index> selected;       // insertion order
  Scalar value = 0;                  // objective of the final selection
  std::vector<int> group_counts;     // by matroid group id, when available
  std::vector<Scalar> thresholds;    // ladder visited, final 0 included
  std::vector<Scalar> accepted_at;   // threshold in force per selection
  double wall_ms = 0;
  std::string diagnostic;            // nonempty for degenerate inputs
};

using SolveResult = SolveResultT<double>;

/// Threshold greedy maximization of the coverage+diversity objective under
/// an independence oracle. The selection threshold starts at the best
/// singleton value d, decays geometrically by (1+delta) down to delta*d/n,
/// then a final zero-threshold pass fills the summary; within a threshold
/// units are scanned in ascending index order, and every unit is
/// reconsidered at every threshold. Deterministic for fixed inputs.
template <typename Scalar, IndependenceOracle Oracle>
SolveResultT<Scalar> fairsumm(const SimilarityModelT<Scalar>& model,
                              const ObjectiveConfigT<Scalar>& objective,
                              const Oracle& oracle,
                              const SolverConfig& solver = {}) {
  const auto start = std::chrono::steady_clock::now();
  objective.validate();
  solver.validate();

  SolveResultT<Scalar> result;
  const Index n = model.size();
  auto finish = [&](SummaryStateT<Scalar>* state) {
    if (state != nullptr) {
      state->resync();
      result.selected.assign(state->selected().begin(), state->selected().end());
      result.value = state->value();
    }
    if constexpr (requires { oracle.num_groups(); oracle.group_of(Index{}); }) {
      result.group_counts.assign(static_cast<std::size_t>(oracle.num_groups()), 0);
      for (Index z : result.selected)
        ++result.group_counts[static_cast<std::size_t>(oracle.group_of(z))];
    }
    result.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return result;
  };

  if (n == 0) {
    result.diagnostic = "empty ground set";
    return finish(nullptr);
  }

  SummaryStateT<Scalar> state(model, objective);

  // d = best singleton objective value.
  Scalar d = 0;
  for (Index z = 0; z < n; ++z) d = std::max(d, state.gain(z));
  if (!(d > 0)) {
    result.diagnostic = "degenerate objective: every singleton value is zero";
    return finish(&state);
  }

  // Ladder w_t = d/(1+delta)^t down to the first value <= delta*d/n, then 0.
  const Scalar floor_w =
      static_cast<Scalar>(solver.delta) * d / static_cast<Scalar>(n);
  Scalar w = d;
  result.thresholds.push_back(w);
  while (w > floor_w &&
         static_cast<Index>(result.thresholds.size()) < solver.max_thresholds) {
    w /= Scalar(1) + static_cast<Scalar>(solver.delta);
    result.thresholds.push_back(w);
  }
  result.thresholds.push_back(0);

  for (Scalar threshold : result.thresholds) {
    for (Index z = 0; z < n; ++z) {
      if (state.contains(z)) continue;
      if (!oracle.can_extend(state.selected(), z)) continue;
      if (state.gain(z) >= threshold) {
        state.add(z);
        result.accepted_at.push_back(threshold);
      }
    }
  }
  return finish(&state);
}

/// The same optimizer with no fairness constraint: a pure cardinality
/// matroid of capacity k.
template <typename Scalar>
SolveResultT<Scalar> dicosumm(const SimilarityModelT<Scalar>& model,
                              const ObjectiveConfigT<Scalar>& objective, int k,
                              const SolverConfig& solver = {}) {
  if (k < 0) throw ValidationError("summary length must be nonnegative");
  PartitionMatroid all(PartitionMatroid::cardinality(model.size(), k));
  return fairsumm(model, objective, all, solver);
}

}  // namespace fairsumm

#endif  // FAIRSUMM_SOLVER_HPP_
