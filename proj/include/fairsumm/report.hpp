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

#ifndef FAIRSUMM_REPORT_HPP_
#define FAIRSUMM_REPORT_HPP_

#include <optional>

#include <json.hpp>

#include "fairsumm/fairness.hpp"
#include "fairsumm/rouge.hpp"

namespace fairsumm {

/// Everything one summarization run reports. Serialization is
/// deterministic: identical runs produce byte-identical JSON (keys sorted,
/// no timing fields).
struct SummaryReport {
  std::string algorithm;
  std::vector<std::string> selected_ids;  // selection order
  std::map<std::string, int> group_counts;
  std::map<std::string, GroupAudit> audit;
  double objective = 0;
  std::optional<RougePair> rouge;
  nlohmann::json config_echo;
};

nlohmann::json audit_to_json(const std::map<std::string, GroupAudit>& audit);
nlohmann::json rouge_to_json(const RougePair& rouge);
nlohmann::json report_to_json(const SummaryReport& report);

/// Aligned text rendering of the same report (counts, flags, ROUGE).
std::string report_to_table(const SummaryReport& report);

SummaryReport parse_report(const nlohmann::json& doc);

}  // namespace fairsumm

#endif  // FAIRSUMM_REPORT_HPP_
