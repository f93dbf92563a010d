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

#include "fairsumm/fairness.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace fairsumm {
namespace {

// Labeled groups only; the reserved unlabeled group never receives quota.
std::vector<std::pair<std::string, int>> labeled_groups(
    const std::map<std::string, int>& census) {
  std::vector<std::pair<std::string, int>> groups;
  for (const auto& [name, count] : census) {
    if (name == kUnknownGroup) continue;
    if (count < 0) throw ValidationError("negative census for group '" + name + "'");
    groups.emplace_back(name, count);
  }
  if (groups.empty()) throw ValidationError("census has no labeled groups");
  return groups;
}

void check_feasible(const std::map<std::string, int>& quotas,
                    const std::map<std::string, int>& census) {
  for (const auto& [name, quota] : quotas) {
    auto it = census.find(name);
    int available = it == census.end() ? 0 : it->second;
    if (quota > available)
      throw InfeasibilityError("quota " + std::to_string(quota) + " for group '" +
                               name + "' exceeds its census of " +
                               std::to_string(available));
  }
}

}  // namespace

FairnessNotion parse_notion(const std::string& name) {
  if (name == "equal") return FairnessNotion::kEqual;
  if (name == "proportional") return FairnessNotion::kProportional;
  if (name == "custom") return FairnessNotion::kCustom;
  throw ValidationError("unknown fairness notion: '" + name + "'");
}

std::string notion_name(FairnessNotion notion) {
  switch (notion) {
    case FairnessNotion::kEqual: return "equal";
    case FairnessNotion::kProportional: return "proportional";
    case FairnessNotion::kCustom: return "custom";
  }
  return "custom";
}

std::map<std::string, int> make_quotas(FairnessNotion notion, int k,
                                       const std::map<std::string, int>& census) {
  if (k <= 0) throw ValidationError("summary length k must be positive");
  auto groups = labeled_groups(census);
  const std::int64_t total =
      std::accumulate(groups.begin(), groups.end(), std::int64_t{0},
                      [](std::int64_t acc, const auto& g) { return acc + g.second; });
  if (k > total)
    throw InfeasibilityError("summary length " + std::to_string(k) +
                             " exceeds corpus size " + std::to_string(total));

  std::map<std::string, int> quotas;
  const int t = static_cast<int>(groups.size());

  switch (notion) {
    case FairnessNotion::kEqual: {
      for (const auto& [name, count] : groups) quotas[name] = k / t;
      // Remainder goes one each to the largest-census groups.
      std::vector<std::pair<std::string, int>> by_census = groups;
      std::stable_sort(by_census.begin(), by_census.end(),
                       [](const auto& a, const auto& b) {
                         if (a.second != b.second) return a.second > b.second;
                         return a.first < b.first;
                       });
      for (int r = 0; r < k % t; ++r) ++quotas[by_census[static_cast<std::size_t>(r)].first];
      break;
    }
    case FairnessNotion::kProportional: {
      // Largest-remainder (Hamilton) apportionment of k * census / N.
      std::int64_t assigned = 0;
      std::vector<std::pair<std::string, std::int64_t>> remainders;
      for (const auto& [name, count] : groups) {
        std::int64_t numer = static_cast<std::int64_t>(k) * count;
        int base = static_cast<int>(numer / total);
        quotas[name] = base;
        assigned += base;
        remainders.emplace_back(name, numer % total);
      }
      std::stable_sort(remainders.begin(), remainders.end(),
                       [&](const auto& a, const auto& b) {
                         if (a.second != b.second) return a.second > b.second;
                         int ca = census.at(a.first), cb = census.at(b.first);
                         if (ca != cb) return ca > cb;
                         return a.first < b.first;
                       });
      for (std::int64_t r = 0; r < k - assigned; ++r)
        ++quotas[remainders[static_cast<std::size_t>(r)].first];
      break;
    }
    case FairnessNotion::kCustom:
      throw ValidationError("custom notion requires explicit quotas");
  }

  if (census.contains(kUnknownGroup)) quotas[kUnknownGroup] = 0;

  int sum = 0;
  for (const auto& [name, q] : quotas) sum += q;
  assert(sum == k);
  (void)sum;

  check_feasible(quotas, census);
  return quotas;
}

void validate_quotas(const std::map<std::string, int>& quotas, int k,
                     const std::map<std::string, int>& census) {
  if (quotas.empty()) throw ValidationError("quota list is empty");
  int sum = 0;
  for (const auto& [name, q] : quotas) {
    if (q < 0) throw ValidationError("negative quota for group '" + name + "'");
    if (!census.contains(name))
      throw ValidationError("quota names unknown group '" + name + "'");
    sum += q;
  }
  if (sum != k)
    throw ValidationError("quotas sum to " + std::to_string(sum) +
                          " but k = " + std::to_string(k));
  check_feasible(quotas, census);
}

FairnessSpec FairnessSpec::make(FairnessNotion notion, int k,
                                const std::map<std::string, int>& census) {
  FairnessSpec spec;
  spec.notion = notion;
  spec.k = k;
  spec.quotas = make_quotas(notion, k, census);
  return spec;
}

FairnessSpec FairnessSpec::custom(const std::map<std::string, int>& quotas,
                                  const std::map<std::string, int>& census) {
  FairnessSpec spec;
  spec.notion = FairnessNotion::kCustom;
  spec.k = 0;
  for (const auto& [name, q] : quotas) spec.k += q;
  validate_quotas(quotas, spec.k, census);
  spec.quotas = quotas;
  return spec;
}

PartitionMatroid::PartitionMatroid(std::vector<Index> group_of,
                                   std::vector<int> quotas)
    : group_of_(std::move(group_of)), quotas_(std::move(quotas)) {
  for (Index g : group_of_)
    if (g < 0 || g >= static_cast<Index>(quotas_.size()))
      throw ValidationError("unit group id out of quota range");
}

PartitionMatroid PartitionMatroid::from_spec(const Corpus& corpus,
                                             const FairnessSpec& spec) {
  std::vector<int> quotas(corpus.groups().size(), 0);
  for (const auto& [name, q] : spec.quotas) {
    // Quotas may name groups absent from the corpus only with quota 0.
    auto it = std::find(corpus.groups().begin(), corpus.groups().end(), name);
    if (it == corpus.groups().end()) {
      if (q != 0)
        throw ValidationError("quota names group '" + name +
                              "' not present in the corpus");
      continue;
    }
    quotas[static_cast<std::size_t>(it - corpus.groups().begin())] = q;
  }
  return PartitionMatroid(corpus.group_of(), std::move(quotas));
}

PartitionMatroid PartitionMatroid::cardinality(Index n, int k) {
  if (k < 0) throw ValidationError("cardinality bound must be nonnegative");
  return PartitionMatroid(std::vector<Index>(static_cast<std::size_t>(n), 0),
                          std::vector<int>{k});
}

bool PartitionMatroid::independent(std::span<const Index> set) const {
  std::vector<int> counts(quotas_.size(), 0);
  for (Index z : set) {
    std::size_t g = static_cast<std::size_t>(group_of(z));
    if (++counts[g] > quotas_[g]) return false;
  }
  return true;
}

bool PartitionMatroid::can_extend(std::span<const Index> set, Index z) const {
  std::size_t g = static_cast<std::size_t>(group_of(z));
  int count = 1;
  for (Index i : set)
    if (static_cast<std::size_t>(group_of(i)) == g) ++count;
  return count <= quotas_[g];
}

std::map<std::string, GroupAudit> adverse_impact_audit(
    const std::map<std::string, int>& summary_counts,
    const std::map<std::string, int>& census) {
  if (census.empty()) throw ValidationError("audit requires a census");

  std::int64_t k = 0;
  std::int64_t total = 0;
  for (const auto& [name, count] : summary_counts) {
    if (count < 0) throw ValidationError("negative summary count for '" + name + "'");
    auto it = census.find(name);
    if (it == census.end())
      throw ValidationError("summary counts unknown group '" + name + "'");
    if (count > it->second)
      throw ValidationError("summary count for '" + name +
                            "' exceeds its census");
    k += count;
  }
  for (const auto& [name, count] : census) total += count;
  const auto t = static_cast<std::int64_t>(census.size());

  auto count_of = [&](const std::string& name) -> std::int64_t {
    auto it = summary_counts.find(name);
    return it == summary_counts.end() ? 0 : it->second;
  };

  // Highest selection rate count/census, compared exactly via cross
  // multiplication to keep the 80% rule free of float boundaries.
  std::string best_group;
  for (const auto& [name, size] : census) {
    if (size <= 0) continue;
    if (best_group.empty() ||
        count_of(name) * census.at(best_group) >
            count_of(best_group) * static_cast<std::int64_t>(size))
      best_group = name;
  }

  std::map<std::string, GroupAudit> report;
  for (const auto& [name, size] : census) {
    GroupAudit audit;
    const std::int64_t count = count_of(name);
    audit.under_equal = count < k / t;
    audit.under_proportional = count < (k * size) / total;
    if (size <= 0) {
      audit.zero_census = true;  // excluded from the rate comparison
    } else if (!best_group.empty()) {
      // rate / best_rate < 0.8  <=>  5*count*best_census < 4*best_count*census
      audit.adverse_impact = 5 * count * census.at(best_group) <
                             4 * count_of(best_group) * size;
    }
    report[name] = audit;
  }
  return report;
}

std::map<std::string, int> parse_group_counts(const std::string& text) {
  std::map<std::string, int> counts;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ValidationError("expected group=count, got '" + item + "'");
    std::string name = item.substr(0, eq);
    int count = 0;
    try {
      std::size_t used = 0;
      count = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ValidationError("bad count in '" + item + "'");
    }
    if (count < 0) throw ValidationError("negative count in '" + item + "'");
    if (!counts.emplace(name, count).second)
      throw ValidationError("group '" + name + "' listed twice");
  }
  if (counts.empty()) throw ValidationError("empty group=count list");
  return counts;
}

std::string format_group_counts(const std::map<std::string, int>& counts) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, count] : counts) {
    if (!first) out << ',';
    out << name << '=' << count;
    first = false;
  }
  return out.str();
}

}  // namespace fairsumm
