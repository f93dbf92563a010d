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

#ifndef FAIRSUMM_CLASSWISE_HPP_
#define FAIRSUMM_CLASSWISE_HPP_

#include "fairsumm/fairness.hpp"
#include "fairsumm/solver.hpp"

namespace fairsumm {

/// Pre-processing approach: summarize each group separately to its quota
/// with the unconstrained optimizer, then merge. Every sub-corpus gets its
/// own TF-IDF/IDF statistics and clustering (cluster count rescaled to the
/// sub-corpus size). Groups are merged largest census first; the reported
/// objective value is evaluated on the full-corpus model so results are
/// comparable with the in-processing solver.
SolveResult classwise_summ(const Corpus& corpus,
                           const SimilarityModel& full_model,
                           const FairnessSpec& spec,
                           const ObjectiveConfig& objective,
                           const SolverConfig& solver = {},
                           std::uint64_t seed = 42);

}  // namespace fairsumm

#endif  // FAIRSUMM_CLASSWISE_HPP_
