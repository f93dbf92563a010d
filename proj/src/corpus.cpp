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

#include "fairsumm/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace fairsumm {

using nlohmann::json;

Corpus::Corpus(std::vector<TextUnit> units) : units_(std::move(units)) {
  if (units_.empty()) throw ValidationError("corpus is empty");
  group_of_.reserve(units_.size());
  std::map<std::string, Index> group_pos;
  for (std::size_t i = 0; i < units_.size(); ++i) {
    const TextUnit& u = units_[i];
    if (u.group.empty()) throw ValidationError("unit '" + u.id + "' has empty group");
    auto [it, inserted] = id_index_.emplace(u.id, static_cast<Index>(i));
    if (!inserted) throw ValidationError("duplicate unit id: '" + u.id + "'");
    auto [git, gnew] = group_pos.emplace(u.group, static_cast<Index>(groups_.size()));
    if (gnew) groups_.push_back(u.group);
    group_of_.push_back(git->second);
    ++census_[u.group];
  }
}

std::map<std::string, int> Corpus::labeled_census() const {
  std::map<std::string, int> c = census_;
  c.erase(kUnknownGroup);
  return c;
}

Index Corpus::group_index(const std::string& group) const {
  for (std::size_t g = 0; g < groups_.size(); ++g)
    if (groups_[g] == group) return static_cast<Index>(g);
  throw ValidationError("unknown group: '" + group + "'");
}

std::optional<Index> Corpus::find_unit(const std::string& id) const {
  auto it = id_index_.find(id);
  if (it == id_index_.end()) return std::nullopt;
  return it->second;
}

std::string normalize_for_dedup(const std::string& raw_text) {
  std::string out;
  out.reserve(raw_text.size());
  bool pending_space = false;
  for (unsigned char c : raw_text) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

Corpus parse_corpus(const std::string& jsonl, const LoadOptions& options) {
  const StopwordSet& stopwords =
      options.stopwords ? *options.stopwords : default_stopwords();

  std::vector<TextUnit> units;
  std::unordered_set<std::string> seen_texts;
  std::unordered_set<std::string> seen_ids;

  std::istringstream in(jsonl);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("malformed JSON record: ") + e.what(), line_no);
    }
    if (!record.is_object())
      throw ParseError("record is not a JSON object", line_no);
    if (!record.contains("id") || !record["id"].is_string())
      throw ParseError("record missing string field 'id'", line_no);
    if (!record.contains("text") || !record["text"].is_string())
      throw ParseError("record missing string field 'text'", line_no);

    TextUnit unit;
    unit.id = record["id"].get<std::string>();
    unit.raw_text = record["text"].get<std::string>();

    if (record.contains("group") && record["group"].is_string() &&
        !record["group"].get<std::string>().empty()) {
      unit.group = record["group"].get<std::string>();
      if (unit.group == kUnknownGroup && !options.allow_unlabeled)
        throw ParseError("reserved group label '" + unit.group + "'", line_no);
    } else if (options.allow_unlabeled) {
      unit.group = kUnknownGroup;
    } else {
      throw ParseError("record missing string field 'group'", line_no);
    }

    if (record.contains("score") && !record["score"].is_null()) {
      if (!record["score"].is_number())
        throw ParseError("field 'score' is not a number", line_no);
      double score = record["score"].get<double>();
      if (score < 0.0)
        throw ParseError("field 'score' is negative", line_no);
      unit.external_score = score;
    }

    if (!seen_ids.insert(unit.id).second)
      throw ParseError("duplicate unit id: '" + unit.id + "'", line_no);
    // "Exact duplicate" texts: first occurrence wins.
    if (!seen_texts.insert(normalize_for_dedup(unit.raw_text)).second) continue;

    unit.tokens = preprocess(unit.raw_text, stopwords);
    units.push_back(std::move(unit));
  }

  if (units.empty())
    throw ValidationError("corpus file contains no records");
  return Corpus(std::move(units));
}

Corpus load_corpus(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open corpus file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str(), options);
}

std::string serialize_corpus(const Corpus& corpus) {
  std::ostringstream out;
  for (const TextUnit& u : corpus.units()) {
    json record;
    record["id"] = u.id;
    record["text"] = u.raw_text;
    record["group"] = u.group;
    if (u.external_score) record["score"] = *u.external_score;
    out << record.dump() << '\n';
  }
  return out.str();
}

}  // namespace fairsumm
