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

#include "fairsumm/rouge.hpp"

#include <algorithm>
#include <unordered_map>

#include "fairsumm/common.hpp"

namespace fairsumm {
namespace {

// n-grams keyed by their joined tokens; 0x1f never occurs in word tokens.
std::unordered_map<std::string, int> ngram_counts(
    std::span<const std::string> tokens, int n) {
  std::unordered_map<std::string, int> counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int j = 1; j < n; ++j) {
      key.push_back('\x1f');
      key.append(tokens[i + static_cast<std::size_t>(j)]);
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

RougeScore rouge_n(std::span<const std::string> candidate,
                   std::span<const std::string> reference, int n) {
  if (n != 1 && n != 2)
    throw ValidationError("rouge_n supports n = 1 or 2, got " + std::to_string(n));

  auto cand = ngram_counts(candidate, n);
  auto ref = ngram_counts(reference, n);

  long long matched = 0;
  for (const auto& [gram, count] : ref) {
    auto it = cand.find(gram);
    if (it != cand.end()) matched += std::min(count, it->second);
  }
  long long cand_total = 0;
  for (const auto& [gram, count] : cand) cand_total += count;
  long long ref_total = 0;
  for (const auto& [gram, count] : ref) ref_total += count;

  RougeScore score;
  score.precision = cand_total > 0 ? static_cast<double>(matched) / cand_total : 0.0;
  score.recall = ref_total > 0 ? static_cast<double>(matched) / ref_total : 0.0;
  double pr = score.precision + score.recall;
  score.f1 = pr > 0 ? 2.0 * score.precision * score.recall / pr : 0.0;
  return score;
}

RougePair rouge_12(std::span<const std::string> candidate,
                   std::span<const std::string> reference) {
  return {rouge_n(candidate, reference, 1), rouge_n(candidate, reference, 2)};
}

RougePair rouge_multi(std::span<const std::string> candidate,
                      const std::vector<std::vector<std::string>>& references) {
  if (references.empty())
    throw ValidationError("rouge_multi requires at least one reference");
  RougePair mean;
  for (const auto& reference : references) {
    RougePair one = rouge_12(candidate, reference);
    mean.rouge1.precision += one.rouge1.precision;
    mean.rouge1.recall += one.rouge1.recall;
    mean.rouge1.f1 += one.rouge1.f1;
    mean.rouge2.precision += one.rouge2.precision;
    mean.rouge2.recall += one.rouge2.recall;
    mean.rouge2.f1 += one.rouge2.f1;
  }
  const double count = static_cast<double>(references.size());
  for (RougeScore* s : {&mean.rouge1, &mean.rouge2}) {
    s->precision /= count;
    s->recall /= count;
    s->f1 /= count;
  }
  return mean;
}

}  // namespace fairsumm
