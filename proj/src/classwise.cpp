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

#include "fairsumm/classwise.hpp"

#include <algorithm>
#include <chrono>

namespace fairsumm {

SolveResult classwise_summ(const Corpus& corpus,
                           const SimilarityModel& full_model,
                           const FairnessSpec& spec,
                           const ObjectiveConfig& objective,
                           const SolverConfig& solver, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  objective.validate();
  solver.validate();

  // Largest census first, lexicographic on ties.
  std::vector<std::string> order;
  for (const auto& [name, quota] : spec.quotas)
    if (quota > 0) order.push_back(name);
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    int ca = corpus.census().contains(a) ? corpus.census().at(a) : 0;
    int cb = corpus.census().contains(b) ? corpus.census().at(b) : 0;
    if (ca != cb) return ca > cb;
    return a < b;
  });

  SolveResult result;
  for (const std::string& group : order) {
    const int quota = spec.quotas.at(group);
    std::vector<Index> members;
    std::vector<TextUnit> sub_units;
    for (Index i = 0; i < corpus.size(); ++i) {
      if (corpus.unit(i).group != group) continue;
      members.push_back(i);
      sub_units.push_back(corpus.unit(i));
    }
    if (members.empty())
      throw InfeasibilityError("group '" + group +
                               "' has a quota but no units");

    Corpus sub_corpus(std::move(sub_units));
    SimilarityOptions sub_options;
    sub_options.seed = seed;  // cluster count auto-scales to the sub-corpus
    SimilarityModel sub_model = build_similarity_model(sub_corpus, sub_options);
    SolveResult sub = dicosumm(sub_model, objective, quota, solver);
    for (Index local : sub.selected)
      result.selected.push_back(members[static_cast<std::size_t>(local)]);
  }

  result.value = objective_value<double>(result.selected, full_model, objective);
  result.group_counts.assign(corpus.groups().size(), 0);
  for (Index z : result.selected)
    ++result.group_counts[static_cast<std::size_t>(
        corpus.group_of()[static_cast<std::size_t>(z)])];
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

}  // namespace fairsumm
