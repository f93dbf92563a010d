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

#include "fairsumm/report.hpp"

#include <iomanip>
#include <sstream>

namespace fairsumm {

using nlohmann::json;

json audit_to_json(const std::map<std::string, GroupAudit>& audit) {
  json out = json::object();
  for (const auto& [group, flags] : audit) {
    json entry = json::array();
    if (flags.under_equal) entry.push_back("under_equal");
    if (flags.under_proportional) entry.push_back("under_proportional");
    if (flags.adverse_impact) entry.push_back("adverse_impact");
    if (flags.zero_census) entry.push_back("zero_census");
    if (entry.empty()) entry.push_back("ok");
    out[group] = entry;
  }
  return out;
}

json rouge_to_json(const RougePair& rouge) {
  auto one = [](const RougeScore& s) {
    return json{{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
  };
  return json{{"rouge1", one(rouge.rouge1)}, {"rouge2", one(rouge.rouge2)}};
}

json report_to_json(const SummaryReport& report) {
  json out;
  out["algorithm"] = report.algorithm;
  out["selected_ids"] = report.selected_ids;
  out["group_counts"] = report.group_counts;
  out["fairness_flags"] = audit_to_json(report.audit);
  out["objective"] = report.objective;
  if (report.rouge) out["rouge"] = rouge_to_json(*report.rouge);
  out["config"] = report.config_echo;
  return out;
}

std::string report_to_table(const SummaryReport& report) {
  std::ostringstream out;
  out << "algorithm: " << report.algorithm << "\n";
  out << "summary size: " << report.selected_ids.size() << "\n";
  out << std::fixed << std::setprecision(4);
  out << "objective: " << report.objective << "\n\n";

  std::size_t width = 5;
  for (const auto& [group, count] : report.group_counts)
    width = std::max(width, group.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "group"
      << std::right << std::setw(7) << "count"
      << "  flags\n";
  for (const auto& [group, count] : report.group_counts) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << group
        << std::right << std::setw(7) << count << "  ";
    auto it = report.audit.find(group);
    if (it == report.audit.end() || it->second.ok()) {
      out << "ok";
    } else {
      bool first = true;
      auto flag = [&](bool set, const char* name) {
        if (!set) return;
        if (!first) out << ",";
        out << name;
        first = false;
      };
      flag(it->second.under_equal, "under_equal");
      flag(it->second.under_proportional, "under_proportional");
      flag(it->second.adverse_impact, "adverse_impact");
      flag(it->second.zero_census, "zero_census");
    }
    out << "\n";
  }

  if (report.rouge) {
    out << "\n";
    out << std::left << std::setw(9) << "metric" << std::right << std::setw(11)
        << "precision" << std::setw(9) << "recall" << std::setw(9) << "f1"
        << "\n";
    auto row = [&](const char* name, const RougeScore& s) {
      out << std::left << std::setw(9) << name << std::right << std::setw(11)
          << s.precision << std::setw(9) << s.recall << std::setw(9) << s.f1
          << "\n";
    };
    row("rouge-1", report.rouge->rouge1);
    row("rouge-2", report.rouge->rouge2);
  }
  return out.str();
}

SummaryReport parse_report(const json& doc) {
  SummaryReport report;
  if (!doc.is_object() || !doc.contains("selected_ids"))
    throw ValidationError("not a summary report: missing selected_ids");
  report.algorithm = doc.value("algorithm", "");
  report.selected_ids = doc["selected_ids"].get<std::vector<std::string>>();
  if (doc.contains("group_counts"))
    report.group_counts = doc["group_counts"].get<std::map<std::string, int>>();
  report.objective = doc.value("objective", 0.0);
  if (doc.contains("config")) report.config_echo = doc["config"];
  return report;
}

}  // namespace fairsumm
