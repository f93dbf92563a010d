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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairsumm/classwise.hpp"
#include "fairsumm/fair_rerank.hpp"
#include "fairsumm/harness.hpp"
#include "fairsumm/report.hpp"
#include "fairsumm/solver.hpp"

namespace {

using namespace fairsumm;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;

struct CommonFlags {
  std::string input;
  std::string stopword_file;
  bool allow_unlabeled = false;
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* cmd, CommonFlags* flags, bool input_required = true) {
  auto* opt = cmd->add_option("--input,-i", flags->input, "corpus JSONL file");
  if (input_required) opt->required();
  cmd->add_option("--stopwords", flags->stopword_file,
                  "stopword file overriding the built-in list");
  cmd->add_flag("--allow-unlabeled", flags->allow_unlabeled,
                "map records without a group to the reserved unlabeled group");
  cmd->add_option("--format", flags->format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_option("--output,-o", flags->output, "write the report here instead of stdout");
}

Corpus load(const CommonFlags& flags, StopwordSet* storage) {
  LoadOptions options;
  if (!flags.stopword_file.empty()) {
    *storage = load_stopwords(flags.stopword_file);
    options.stopwords = storage;
  }
  options.allow_unlabeled = flags.allow_unlabeled;
  return load_corpus(flags.input, options);
}

void emit(const CommonFlags& flags, const json& doc, const std::string& table) {
  std::string text = flags.format == "table" ? table : doc.dump(2) + "\n";
  if (flags.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(flags.output, std::ios::binary);
    if (!out) throw ValidationError("cannot write output file: " + flags.output);
    out << text;
  }
}

std::vector<double> parse_rates(const std::string& text) {
  std::vector<double> rates;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      rates.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ValidationError("bad rate '" + item + "'");
    }
  }
  if (rates.empty()) throw ValidationError("empty rate list");
  return rates;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  return parts;
}

// Reference summaries: JSONL of {"text": ...} or plain text, one unit per
// line; each file is one reference.
std::vector<std::vector<std::string>> load_references(
    const std::vector<std::string>& paths, const StopwordSet& stopwords) {
  std::vector<std::vector<std::string>> references;
  for (const std::string& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open reference file: " + path);
    std::vector<std::string> tokens;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      std::string text;
      if (line.front() == '{') {
        json record;
        try {
          record = json::parse(line);
        } catch (const json::parse_error& e) {
          throw ParseError(std::string("malformed reference record: ") + e.what(),
                           line_no);
        }
        if (!record.contains("text") || !record["text"].is_string())
          throw ParseError("reference record missing string field 'text'", line_no);
        text = record["text"].get<std::string>();
      } else {
        text = line;
      }
      for (std::string& tok : preprocess(text, stopwords))
        tokens.push_back(std::move(tok));
    }
    if (tokens.empty())
      throw ValidationError("reference file has no usable text: " + path);
    references.push_back(std::move(tokens));
  }
  return references;
}

std::vector<std::string> candidate_tokens(const Corpus& corpus,
                                          const std::vector<Index>& selection) {
  std::vector<std::string> tokens;
  for (Index i : selection)
    for (const std::string& tok : corpus.unit(i).tokens) tokens.push_back(tok);
  return tokens;
}

std::map<std::string, int> tally_groups(const Corpus& corpus,
                                        const std::vector<Index>& selection) {
  std::map<std::string, int> counts;
  for (const std::string& g : corpus.groups()) counts[g] = 0;
  for (Index i : selection) ++counts[corpus.unit(i).group];
  return counts;
}

std::vector<Index> resolve_ids(const Corpus& corpus,
                               const std::vector<std::string>& ids) {
  std::vector<Index> selection;
  for (const std::string& id : ids) {
    auto index = corpus.find_unit(id);
    if (!index) throw ValidationError("summary id '" + id + "' not in corpus");
    selection.push_back(*index);
  }
  return selection;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return doc;
}

struct SummarizeArgs {
  CommonFlags common;
  std::string algo = "fairsumm";
  std::string notion = "equal";
  int k = 0;
  std::string quota;
  double delta = 0.1;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  Index clusters = 0;
  std::uint64_t seed = 42;
  std::string sim_cache;
  std::string scores_file;
  double p = 0.5;
  bool p_given = false;  // unset -> derived from the notion
  double alpha = 0.5;
  std::string protected_group;
  std::string refs;
};

int run_summarize(const SummarizeArgs& args) {
  StopwordSet stopword_storage;
  Corpus corpus = load(args.common, &stopword_storage);
  const StopwordSet& stopwords =
      args.common.stopword_file.empty() ? default_stopwords() : stopword_storage;

  ObjectiveConfig objective{args.lambda1, args.lambda2};
  SolverConfig solver;
  solver.delta = args.delta;
  SimilarityOptions sim_options;
  sim_options.clusters = args.clusters;
  sim_options.seed = args.seed;
  sim_options.sim_cache = args.sim_cache;

  auto census = corpus.labeled_census();
  auto spec_for = [&]() -> FairnessSpec {
    if (args.notion == "custom" || !args.quota.empty()) {
      if (args.quota.empty())
        throw ValidationError("custom notion requires --quota");
      FairnessSpec spec = FairnessSpec::custom(parse_group_counts(args.quota),
                                               corpus.census());
      if (args.k > 0 && args.k != spec.k)
        throw ValidationError("-k disagrees with the quota total");
      return spec;
    }
    if (args.k <= 0) throw ValidationError("-k is required");
    return FairnessSpec::make(parse_notion(args.notion), args.k, census);
  };

  SummaryReport report;
  report.algorithm = args.algo;
  std::vector<Index> selection;
  std::optional<RougePair> baseline_rouge;

  if (args.algo == "refasumm") {
    if (args.k <= 0) throw ValidationError("-k is required");
    FairRankConfig config;
    config.k = args.k;
    config.alpha_c = args.alpha;
    config.protected_group = args.protected_group;
    if (args.p_given) {
      config.min_protected_share = args.p;
    } else if (parse_notion(args.notion) == FairnessNotion::kProportional) {
      // Protected share mirrors the corpus share.
      std::string prot = config.protected_group;
      if (prot.empty()) {
        auto it = census.begin();
        auto [na, ca] = *it++;
        auto [nb, cb] = *it;
        prot = cb < ca ? nb : na;
      }
      int total = 0;
      for (const auto& [name, c] : census) total += c;
      config.min_protected_share =
          static_cast<double>(census.at(prot)) / static_cast<double>(total);
    } else {
      config.min_protected_share = 0.5;
    }

    std::map<std::string, double> scores;
    const std::map<std::string, double>* scores_ptr = nullptr;
    if (!args.scores_file.empty()) {
      scores = load_scores(args.scores_file);
      scores_ptr = &scores;
    }
    selection = refasumm(corpus, config, scores_ptr);
    double total_score = 0;
    for (Index i : selection) {
      const TextUnit& u = corpus.unit(i);
      total_score += scores_ptr ? scores_ptr->at(u.id) : *u.external_score;
    }
    report.objective = total_score;

    if (!args.refs.empty()) {
      auto references = load_references(split_csv(args.refs), stopwords);
      auto base = score_top_k(corpus, args.k, scores_ptr, args.protected_group);
      QualityDeltaReport delta =
          quality_delta_report(corpus, base, selection, references);
      report.rouge = delta.fair;
      baseline_rouge = delta.base;
    }
  } else {
    SimilarityModel model = build_similarity_model(corpus, sim_options);
    SolveResult solved;
    if (args.algo == "fairsumm") {
      FairnessSpec spec = spec_for();
      solved = fairsumm::fairsumm(
          model, objective, PartitionMatroid::from_spec(corpus, spec), solver);
    } else if (args.algo == "dicosumm") {
      if (args.k <= 0) throw ValidationError("-k is required");
      solved = dicosumm(model, objective, args.k, solver);
    } else if (args.algo == "classwise") {
      FairnessSpec spec = spec_for();
      solved = classwise_summ(corpus, model, spec, objective, solver, args.seed);
    } else {
      throw ValidationError("unknown algorithm: '" + args.algo + "'");
    }
    selection = solved.selected;
    report.objective = solved.value;
    if (!args.refs.empty()) {
      auto references = load_references(split_csv(args.refs), stopwords);
      report.rouge = rouge_multi(candidate_tokens(corpus, selection), references);
    }
  }

  for (Index i : selection) report.selected_ids.push_back(corpus.unit(i).id);
  report.group_counts = tally_groups(corpus, selection);
  {
    std::map<std::string, int> labeled_counts;
    for (const auto& [name, count] : report.group_counts)
      if (name != kUnknownGroup) labeled_counts[name] = count;
    report.audit = adverse_impact_audit(labeled_counts, census);
  }

  report.config_echo = json{{"algorithm", args.algo},
                            {"input", args.common.input},
                            {"notion", args.notion},
                            {"k", args.k},
                            {"quota", args.quota},
                            {"delta", args.delta},
                            {"lambda1", args.lambda1},
                            {"lambda2", args.lambda2},
                            {"clusters", args.clusters},
                            {"seed", args.seed},
                            {"scores", args.scores_file},
                            {"p", args.p},
                            {"alpha", args.alpha},
                            {"protected", args.protected_group},
                            {"refs", args.refs},
                            {"stopwords", args.common.stopword_file},
                            {"allow_unlabeled", args.common.allow_unlabeled}};

  json doc = report_to_json(report);
  if (baseline_rouge) doc["baseline_rouge"] = rouge_to_json(*baseline_rouge);
  emit(args.common, doc, report_to_table(report));
  return kExitOk;
}

int run_evaluate(const CommonFlags& common, const std::string& summary_file,
                 const std::string& refs) {
  StopwordSet stopword_storage;
  Corpus corpus = load(common, &stopword_storage);
  const StopwordSet& stopwords =
      common.stopword_file.empty() ? default_stopwords() : stopword_storage;

  SummaryReport report = parse_report(load_json_file(summary_file));
  auto selection = resolve_ids(corpus, report.selected_ids);
  auto references = load_references(split_csv(refs), stopwords);
  RougePair rouge = rouge_multi(candidate_tokens(corpus, selection), references);

  json doc{{"summary", summary_file},
           {"units", selection.size()},
           {"rouge", rouge_to_json(rouge)}};
  std::ostringstream table;
  table << "rouge-1  P=" << rouge.rouge1.precision << " R=" << rouge.rouge1.recall
        << " F1=" << rouge.rouge1.f1 << "\n"
        << "rouge-2  P=" << rouge.rouge2.precision << " R=" << rouge.rouge2.recall
        << " F1=" << rouge.rouge2.f1 << "\n";
  emit(common, doc, table.str());
  return kExitOk;
}

int run_audit(const CommonFlags& common, const std::string& summary_file) {
  StopwordSet stopword_storage;
  Corpus corpus = load(common, &stopword_storage);
  SummaryReport report = parse_report(load_json_file(summary_file));
  auto selection = resolve_ids(corpus, report.selected_ids);

  std::map<std::string, int> counts;
  for (Index i : selection)
    if (corpus.unit(i).group != kUnknownGroup) ++counts[corpus.unit(i).group];
  auto audit = adverse_impact_audit(counts, corpus.labeled_census());

  SummaryReport shaped;
  shaped.algorithm = report.algorithm;
  shaped.selected_ids = report.selected_ids;
  shaped.group_counts = tally_groups(corpus, selection);
  shaped.audit = audit;
  shaped.objective = report.objective;
  json doc{{"group_counts", shaped.group_counts},
           {"fairness_flags", audit_to_json(audit)}};
  emit(common, doc, report_to_table(shaped));
  return kExitOk;
}

int run_quota(const CommonFlags& common, const std::string& notion, int k,
              const std::string& census_text, const std::string& quota_text) {
  std::map<std::string, int> census;
  if (!census_text.empty()) {
    census = parse_group_counts(census_text);
  } else if (!common.input.empty()) {
    StopwordSet stopword_storage;
    census = load(common, &stopword_storage).labeled_census();
  } else {
    throw ValidationError("quota needs --census or --input");
  }

  FairnessSpec spec;
  if (notion == "custom") {
    if (quota_text.empty()) throw ValidationError("custom notion requires --quota");
    spec = FairnessSpec::custom(parse_group_counts(quota_text), census);
    if (k > 0 && k != spec.k)
      throw ValidationError("-k disagrees with the quota total");
  } else {
    if (k <= 0) throw ValidationError("-k is required");
    spec = FairnessSpec::make(parse_notion(notion), k, census);
  }

  json doc{{"notion", notion_name(spec.notion)},
           {"k", spec.k},
           {"quotas", spec.quotas}};
  emit(common, doc, format_group_counts(spec.quotas) + "\n");
  return kExitOk;
}

int run_noise(const CommonFlags& common, const std::string& notion, int k,
              const std::string& rates_text, int trials, std::uint64_t seed,
              const std::string& refs, Index clusters, double delta,
              double lambda1, double lambda2) {
  StopwordSet stopword_storage;
  Corpus corpus = load(common, &stopword_storage);
  const StopwordSet& stopwords =
      common.stopword_file.empty() ? default_stopwords() : stopword_storage;

  SimilarityOptions sim_options;
  sim_options.clusters = clusters;
  SimilarityModel model = build_similarity_model(corpus, sim_options);

  NoiseExperimentConfig config;
  config.error_rates = parse_rates(rates_text);
  config.trials = trials;
  config.rng_seed = seed;

  std::vector<std::vector<std::string>> references;
  const std::vector<std::vector<std::string>>* refs_ptr = nullptr;
  if (!refs.empty()) {
    references = load_references(split_csv(refs), stopwords);
    refs_ptr = &references;
  }

  ObjectiveConfig objective{lambda1, lambda2};
  SolverConfig solver;
  solver.delta = delta;
  auto rows = run_noise_experiment(corpus, model, parse_notion(notion), k,
                                   objective, solver, config, refs_ptr);

  json out = json::array();
  std::ostringstream table;
  table << "rate    ";
  for (const auto& [group, unused] : rows.front().mean_true_counts)
    table << group << "  ";
  table << (refs_ptr != nullptr ? "r1_recall  r2_recall" : "") << "\n";
  for (const auto& row : rows) {
    json entry{{"rate", row.rate},
               {"mean_true_counts", row.mean_true_counts},
               {"zero_flip_warning", row.zero_flip_warning}};
    if (row.mean_rouge) entry["mean_rouge"] = rouge_to_json(*row.mean_rouge);
    out.push_back(entry);
    table << row.rate << "  ";
    for (const auto& [unused, mean] : row.mean_true_counts) table << mean << "  ";
    if (row.mean_rouge)
      table << row.mean_rouge->rouge1.recall << "  "
            << row.mean_rouge->rouge2.recall;
    table << "\n";
  }
  emit(common, out, table.str());
  return kExitOk;
}

int run_oracle(const CommonFlags& common, int k, const std::string& notion,
               const std::string& quota_text, Index clusters,
               std::uint64_t seed, double lambda1, double lambda2) {
  StopwordSet stopword_storage;
  Corpus corpus = load(common, &stopword_storage);
  SimilarityOptions sim_options;
  sim_options.clusters = clusters;
  sim_options.seed = seed;
  SimilarityModel model = build_similarity_model(corpus, sim_options);

  PartitionMatroid oracle = PartitionMatroid::cardinality(corpus.size(), k);
  if (!quota_text.empty()) {
    FairnessSpec spec =
        FairnessSpec::custom(parse_group_counts(quota_text), corpus.census());
    oracle = PartitionMatroid::from_spec(corpus, spec);
  } else if (!notion.empty()) {
    FairnessSpec spec =
        FairnessSpec::make(parse_notion(notion), k, corpus.labeled_census());
    oracle = PartitionMatroid::from_spec(corpus, spec);
  }

  ObjectiveConfig objective{lambda1, lambda2};
  BruteForceResult best = brute_force_optimum(model, objective, oracle, k);
  std::vector<std::string> ids;
  for (Index i : best.selected) ids.push_back(corpus.unit(i).id);
  json doc{{"selected_ids", ids}, {"value", best.value}};
  std::ostringstream table;
  table << "value: " << best.value << "\n";
  emit(common, doc, table.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fairness-aware extractive summarization toolkit"};
  app.require_subcommand(1);

  SummarizeArgs sargs;
  auto* summarize = app.add_subcommand("summarize", "select a fair summary");
  add_common(summarize, &sargs.common);
  summarize->add_option("--algo", sargs.algo, "algorithm")
      ->check(CLI::IsMember({"fairsumm", "dicosumm", "classwise", "refasumm"}));
  summarize->add_option("--notion", sargs.notion, "fairness notion")
      ->check(CLI::IsMember({"equal", "proportional", "custom"}));
  summarize->add_option("-k", sargs.k, "summary length");
  summarize->add_option("--quota", sargs.quota, "custom quotas, group=count[,...]");
  summarize->add_option("--delta", sargs.delta, "threshold decay");
  summarize->add_option("--lambda1", sargs.lambda1, "coverage weight");
  summarize->add_option("--lambda2", sargs.lambda2, "diversity weight");
  summarize->add_option("--clusters", sargs.clusters, "diversity cluster count");
  summarize->add_option("--seed", sargs.seed, "clustering seed");
  summarize->add_option("--sim-cache", sargs.sim_cache, "similarity matrix cache file");
  summarize->add_option("--scores", sargs.scores_file, "id<TAB>score file (refasumm)");
  summarize->add_option("--p", sargs.p, "minimum protected share (refasumm)");
  summarize->add_option("--alpha", sargs.alpha, "adjusted significance (refasumm)");
  summarize->add_option("--protected", sargs.protected_group, "protected group label");
  summarize->add_option("--refs", sargs.refs, "reference files for ROUGE, comma separated");

  CommonFlags eval_common;
  std::string eval_summary, eval_refs;
  auto* evaluate = app.add_subcommand("evaluate", "ROUGE a saved summary report");
  add_common(evaluate, &eval_common);
  evaluate->add_option("--summary", eval_summary, "summary report JSON")->required();
  evaluate->add_option("--refs", eval_refs, "reference files, comma separated")->required();

  CommonFlags audit_common;
  std::string audit_summary;
  auto* audit = app.add_subcommand("audit", "fairness-flag a saved summary report");
  add_common(audit, &audit_common);
  audit->add_option("--summary", audit_summary, "summary report JSON")->required();

  CommonFlags quota_common;
  std::string quota_notion = "equal", quota_census, quota_quota;
  int quota_k = 0;
  auto* quota = app.add_subcommand("quota", "compute per-group quotas");
  add_common(quota, &quota_common, /*input_required=*/false);
  quota->add_option("--notion", quota_notion, "fairness notion")
      ->check(CLI::IsMember({"equal", "proportional", "custom"}));
  quota->add_option("-k", quota_k, "summary length");
  quota->add_option("--census", quota_census, "group=count[,...] corpus census");
  quota->add_option("--quota", quota_quota, "custom quotas to validate");

  CommonFlags noise_common;
  std::string noise_notion = "equal", noise_rates = "0.1,0.2,0.3", noise_refs;
  int noise_k = 0, noise_trials = 100;
  std::uint64_t noise_seed = 0;
  Index noise_clusters = 0;
  double noise_delta = 0.1, noise_l1 = 1.0, noise_l2 = 1.0;
  auto* noise = app.add_subcommand("noise-exp", "label-noise robustness experiment");
  add_common(noise, &noise_common);
  noise->add_option("--notion", noise_notion)
      ->check(CLI::IsMember({"equal", "proportional"}));
  noise->add_option("-k", noise_k, "summary length")->required();
  noise->add_option("--rates", noise_rates, "comma separated error rates");
  noise->add_option("--trials", noise_trials, "trials per rate");
  noise->add_option("--seed", noise_seed, "experiment seed");
  noise->add_option("--refs", noise_refs, "reference files for ROUGE");
  noise->add_option("--clusters", noise_clusters, "diversity cluster count");
  noise->add_option("--delta", noise_delta, "threshold decay");
  noise->add_option("--lambda1", noise_l1, "coverage weight");
  noise->add_option("--lambda2", noise_l2, "diversity weight");

  CommonFlags oracle_common;
  int oracle_k = 0;
  std::string oracle_notion, oracle_quota;
  Index oracle_clusters = 0;
  std::uint64_t oracle_seed = 42;
  double oracle_l1 = 1.0, oracle_l2 = 1.0;
  auto* oracle = app.add_subcommand("oracle", "exhaustive optimum (n <= 20)");
  add_common(oracle, &oracle_common);
  oracle->add_option("-k", oracle_k, "summary length")->required();
  oracle->add_option("--notion", oracle_notion)
      ->check(CLI::IsMember({"equal", "proportional"}));
  oracle->add_option("--quota", oracle_quota, "custom quotas, group=count[,...]");
  oracle->add_option("--clusters", oracle_clusters, "diversity cluster count");
  oracle->add_option("--seed", oracle_seed, "clustering seed");
  oracle->add_option("--lambda1", oracle_l1, "coverage weight");
  oracle->add_option("--lambda2", oracle_l2, "diversity weight");

  try {
    app.parse(argc, argv);
    sargs.p_given = summarize->count("--p") > 0;
    if (summarize->parsed()) return run_summarize(sargs);
    if (evaluate->parsed())
      return run_evaluate(eval_common, eval_summary, eval_refs);
    if (audit->parsed()) return run_audit(audit_common, audit_summary);
    if (quota->parsed())
      return run_quota(quota_common, quota_notion, quota_k, quota_census,
                       quota_quota);
    if (noise->parsed())
      return run_noise(noise_common, noise_notion, noise_k, noise_rates,
                       noise_trials, noise_seed, noise_refs, noise_clusters,
                       noise_delta, noise_l1, noise_l2);
    if (oracle->parsed())
      return run_oracle(oracle_common, oracle_k, oracle_notion, oracle_quota,
                        oracle_clusters, oracle_seed, oracle_l1, oracle_l2);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  } catch (const InfeasibilityError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
