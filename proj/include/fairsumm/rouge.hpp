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

#ifndef FAIRSUMM_ROUGE_HPP_
#define FAIRSUMM_ROUGE_HPP_

#include <span>
#include <string>
#include <vector>

namespace fairsumm {

struct RougeScore {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

/// Clipped n-gram overlap between one candidate and one reference token
/// stream, n in {1, 2}. Empty denominators yield zero scores.
RougeScore rouge_n(std::span<const std::string> candidate,
                   std::span<const std::string> reference, int n);

struct RougePair {
  RougeScore rouge1;
  RougeScore rouge2;
};

RougePair rouge_12(std::span<const std::string> candidate,
                   std::span<const std::string> reference);

/// Multi-reference scoring: P, R and F1 are each computed per reference and
/// arithmetic-meaned.
RougePair rouge_multi(std::span<const std::string> candidate,
                      const std::vector<std::vector<std::string>>& references);

}  // namespace fairsumm

#endif  // FAIRSUMM_ROUGE_HPP_
