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

#include "fairsumm/fair_rerank.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace fairsumm {
namespace {

// Exact for small trial counts: binomial coefficients stay below 2^53 and
// p = 1/2 style probabilities keep every term representable, so boundary
// comparisons like cdf == alpha behave exactly.
double binomial_cdf_direct(int m, int n, double p) {
  double term = std::pow(1.0 - p, n);  // x = 0
  double cdf = term;
  const double odds = p / (1.0 - p);
  for (int x = 0; x < m; ++x) {
    term *= static_cast<double>(n - x) / static_cast<double>(x + 1) * odds;
    cdf += term;
  }
  return std::min(cdf, 1.0);
}

double binomial_cdf_log(int m, int n, double p) {
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  double cdf = 0.0;
  for (int x = 0; x <= m; ++x) {
    double log_term = std::lgamma(n + 1.0) - std::lgamma(x + 1.0) -
                      std::lgamma(n - x + 1.0) + x * log_p + (n - x) * log_q;
    cdf += std::exp(log_term);
  }
  return std::min(cdf, 1.0);
}

struct Candidate {
  Index unit;
  double score;
};

// Higher score first; indexes are resolved to ids by the caller's pools.
bool score_before(const Candidate& a, const Candidate& b,
                  const Corpus& corpus) {
  if (a.score != b.score) return a.score > b.score;
  return corpus.unit(a.unit).id < corpus.unit(b.unit).id;
}

double score_of(const Corpus& corpus, Index i,
                const std::map<std::string, double>* scores) {
  const TextUnit& unit = corpus.unit(i);
  if (scores != nullptr) {
    auto it = scores->find(unit.id);
    if (it == scores->end())
      throw ValidationError("no score supplied for unit '" + unit.id + "'");
    if (it->second < 0)
      throw ValidationError("negative score for unit '" + unit.id + "'");
    return it->second;
  }
  if (!unit.external_score)
    throw ValidationError("unit '" + unit.id +
                          "' has no external score; supply a score file");
  return *unit.external_score;
}

std::string resolve_protected_group(const Corpus& corpus,
                                    const std::string& requested) {
  auto census = corpus.labeled_census();
  if (census.size() != 2)
    throw ValidationError(
        "fair re-ranking supports exactly two groups, corpus has " +
        std::to_string(census.size()));
  if (!requested.empty()) {
    if (!census.contains(requested))
      throw ValidationError("protected group '" + requested +
                            "' not present in the corpus");
    return requested;
  }
  // Default: the minority class, ties to the lexicographically first name.
  auto it = census.begin();
  auto [name_a, count_a] = *it++;
  auto [name_b, count_b] = *it;
  return count_b < count_a ? name_b : name_a;
}

}  // namespace

double binomial_cdf(int successes, int trials, double p) {
  if (successes < 0 || trials < 0 || successes > trials)
    throw ValidationError("binomial_cdf requires 0 <= m <= n");
  if (p <= 0.0) return 1.0;
  if (p >= 1.0) return successes == trials ? 1.0 : 0.0;
  if (successes == trials) return 1.0;
  return trials <= 64 ? binomial_cdf_direct(successes, trials, p)
                      : binomial_cdf_log(successes, trials, p);
}

FairnessTable build_fairness_table(int k, double p, double alpha_c) {
  if (k < 1) throw ValidationError("fairness table needs k >= 1");
  if (p <= 0.0 || p >= 1.0)
    throw ValidationError("minimum protected proportion must lie in (0, 1)");
  if (alpha_c <= 0.0 || alpha_c >= 1.0)
    throw ValidationError("significance level must lie in (0, 1)");

  FairnessTable table;
  table.k = k;
  table.p = p;
  table.alpha_c = alpha_c;
  table.tau.reserve(static_cast<std::size_t>(k));
  int m = 0;
  for (int i = 1; i <= k; ++i) {
    // tau is nondecreasing, so resume the search from the previous value.
    while (!(binomial_cdf(m, i, p) > alpha_c)) ++m;
    table.tau.push_back(m);
  }
  return table;
}

void FairRankConfig::validate() const {
  if (k < 1) throw ValidationError("ranking length k must be positive");
  if (min_protected_share <= 0.0 || min_protected_share >= 1.0)
    throw ValidationError("minimum protected proportion must lie in (0, 1)");
  if (alpha_c <= 0.0 || alpha_c >= 1.0)
    throw ValidationError("significance level must lie in (0, 1)");
}

std::vector<Index> refasumm(const Corpus& corpus, const FairRankConfig& config,
                            const std::map<std::string, double>* scores) {
  config.validate();
  const std::string protected_group =
      resolve_protected_group(corpus, config.protected_group);
  if (config.k > corpus.size())
    throw InfeasibilityError("ranking length " + std::to_string(config.k) +
                             " exceeds corpus size " +
                             std::to_string(corpus.size()));

  std::vector<Candidate> protected_pool, open_pool;
  for (Index i = 0; i < corpus.size(); ++i) {
    Candidate c{i, score_of(corpus, i, scores)};
    (corpus.unit(i).group == protected_group ? protected_pool : open_pool)
        .push_back(c);
  }
  auto by_score = [&](const Candidate& a, const Candidate& b) {
    return score_before(a, b, corpus);
  };
  std::sort(protected_pool.begin(), protected_pool.end(), by_score);
  std::sort(open_pool.begin(), open_pool.end(), by_score);

  FairnessTable table =
      build_fairness_table(config.k, config.min_protected_share, config.alpha_c);
  for (int rank = 1; rank <= config.k; ++rank)
    if (table.required(rank) > static_cast<int>(protected_pool.size()))
      throw InfeasibilityError(
          "protected pool of " + std::to_string(protected_pool.size()) +
          " cannot satisfy the fairness table at rank " + std::to_string(rank));

  std::vector<Index> ranking;
  ranking.reserve(static_cast<std::size_t>(config.k));
  std::size_t next_protected = 0, next_open = 0;
  int protected_count = 0;
  for (int rank = 1; rank <= config.k; ++rank) {
    bool must_take_protected = protected_count < table.required(rank);
    bool take_protected;
    if (must_take_protected) {
      take_protected = true;
    } else if (next_protected >= protected_pool.size()) {
      take_protected = false;
    } else if (next_open >= open_pool.size()) {
      take_protected = true;
    } else {
      // Best overall; a score tie goes to the protected side.
      take_protected = !(open_pool[next_open].score >
                         protected_pool[next_protected].score);
    }
    if (take_protected) {
      ranking.push_back(protected_pool[next_protected++].unit);
      ++protected_count;
    } else {
      ranking.push_back(open_pool[next_open++].unit);
    }
  }
  return ranking;
}

std::vector<Index> score_top_k(const Corpus& corpus, int k,
                               const std::map<std::string, double>* scores,
                               const std::string& protected_group) {
  if (k < 0 || k > corpus.size())
    throw ValidationError("top-k length out of range");
  // Same tie discipline as the fair merge (score, protected first, id), so
  // the re-ranker degenerates to exactly this ranking as alpha -> 0.
  const std::string prot = resolve_protected_group(corpus, protected_group);
  std::vector<Candidate> pool;
  pool.reserve(static_cast<std::size_t>(corpus.size()));
  for (Index i = 0; i < corpus.size(); ++i)
    pool.push_back({i, score_of(corpus, i, scores)});
  std::sort(pool.begin(), pool.end(), [&](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    bool a_prot = corpus.unit(a.unit).group == prot;
    bool b_prot = corpus.unit(b.unit).group == prot;
    if (a_prot != b_prot) return a_prot;
    return corpus.unit(a.unit).id < corpus.unit(b.unit).id;
  });
  std::vector<Index> ranking;
  for (int r = 0; r < k; ++r) ranking.push_back(pool[static_cast<std::size_t>(r)].unit);
  return ranking;
}

std::map<std::string, double> load_scores(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open score file: " + path);
  std::map<std::string, double> scores;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0)
      throw ParseError("expected id<TAB>score", line_no);
    std::string id = line.substr(0, tab);
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(line.substr(tab + 1), &used);
      if (used != line.size() - tab - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("bad score value", line_no);
    }
    if (value < 0) throw ParseError("negative score", line_no);
    if (!scores.emplace(id, value).second)
      throw ParseError("duplicate id '" + id + "'", line_no);
  }
  if (scores.empty()) throw ValidationError("score file has no entries: " + path);
  return scores;
}

QualityDeltaReport quality_delta_report(
    const Corpus& corpus, const std::vector<Index>& base_topk,
    const std::vector<Index>& fair_topk,
    const std::vector<std::vector<std::string>>& reference_token_lists) {
  auto concat_tokens = [&](const std::vector<Index>& selection) {
    std::vector<std::string> tokens;
    for (Index i : selection)
      for (const std::string& tok : corpus.unit(i).tokens) tokens.push_back(tok);
    return tokens;
  };
  QualityDeltaReport report;
  report.base = rouge_multi(concat_tokens(base_topk), reference_token_lists);
  report.fair = rouge_multi(concat_tokens(fair_topk), reference_token_lists);
  return report;
}

}  // namespace fairsumm
