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

#include "fairsumm/similarity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <unordered_map>

#include "fairsumm/kmeans.hpp"

namespace fairsumm {
namespace {

void put_u64_le(std::ostream& out, std::uint64_t v) {
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(bytes, 8);
}

std::uint64_t get_u64_le(std::istream& in) {
  unsigned char bytes[8];
  in.read(reinterpret_cast<char*>(bytes), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return v;
}

}  // namespace

Eigen::SparseMatrix<double, Eigen::RowMajor> build_tfidf(const Corpus& corpus) {
  const Index n = corpus.size();
  if (n == 0) throw ValidationError("cannot build TF-IDF on an empty corpus");

  // Term ids in first-appearance order; df = number of units with the term.
  std::unordered_map<std::string, Index> term_id;
  std::vector<Index> df;
  std::vector<std::vector<std::pair<Index, double>>> counts(
      static_cast<std::size_t>(n));

  for (Index i = 0; i < n; ++i) {
    std::unordered_map<Index, double>
        tf;  // raw term counts within this unit
    for (const std::string& tok : corpus.unit(i).tokens) {
      auto [it, inserted] = term_id.emplace(tok, static_cast<Index>(df.size()));
      if (inserted) df.push_back(0);
      ++tf[it->second];
    }
    auto& row = counts[static_cast<std::size_t>(i)];
    row.assign(tf.begin(), tf.end());
    std::sort(row.begin(), row.end());
    for (const auto& [t, c] : row) ++df[static_cast<std::size_t>(t)];
  }

  const Index vocab = static_cast<Index>(df.size());
  std::vector<double> idf(static_cast<std::size_t>(vocab));
  for (Index t = 0; t < vocab; ++t)
    idf[static_cast<std::size_t>(t)] =
        std::log(static_cast<double>(n) /
                 static_cast<double>(df[static_cast<std::size_t>(t)]));

  Eigen::SparseMatrix<double, Eigen::RowMajor> vectors(n, std::max<Index>(vocab, 1));
  std::vector<Eigen::Triplet<double>> triplets;
  for (Index i = 0; i < n; ++i) {
    double norm2 = 0.0;
    for (const auto& [t, c] : counts[static_cast<std::size_t>(i)]) {
      double w = c * idf[static_cast<std::size_t>(t)];
      norm2 += w * w;
    }
    if (norm2 <= 0.0) continue;
    double inv_norm = 1.0 / std::sqrt(norm2);
    for (const auto& [t, c] : counts[static_cast<std::size_t>(i)]) {
      double w = c * idf[static_cast<std::size_t>(t)] * inv_norm;
      if (w != 0.0) triplets.emplace_back(i, t, w);
    }
  }
  vectors.setFromTriplets(triplets.begin(), triplets.end());
  return vectors;
}

Eigen::MatrixXd similarity_matrix(
    const Eigen::SparseMatrix<double, Eigen::RowMajor>& vectors,
    const std::vector<bool>& has_tokens) {
  const Index n = vectors.rows();
  Eigen::MatrixXd sim = Eigen::MatrixXd::Zero(n, n);

  // Accumulate cosine mass term by term over each posting list: the work
  // is sum_t df(t)^2 instead of n^2 merges, and units sharing no terms
  // never touch each other. Row indices ascend within a column, so only
  // the upper triangle is written; mirroring keeps symmetry bit-exact.
  Eigen::SparseMatrix<double> by_term = vectors;  // term-major copy
  for (Index t = 0; t < by_term.outerSize(); ++t) {
    for (Eigen::SparseMatrix<double>::InnerIterator i(by_term, t); i; ++i) {
      auto j = i;
      for (++j; j; ++j) sim(i.row(), j.row()) += i.value() * j.value();
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      double s = std::clamp(sim(i, j), 0.0, 1.0);
      sim(i, j) = s;
      sim(j, i) = s;
    }
    sim(i, i) = has_tokens[static_cast<std::size_t>(i)] ? 1.0 : 0.0;
  }
  return sim;
}

SimilarityModel build_similarity_model(const Corpus& corpus,
                                       const SimilarityOptions& options) {
  const Index n = corpus.size();
  auto vectors = build_tfidf(corpus);

  std::vector<bool> has_tokens(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i)
    has_tokens[static_cast<std::size_t>(i)] = !corpus.unit(i).tokens.empty();

  SimilarityModel model;
  bool from_cache = false;
  if (!options.sim_cache.empty() &&
      std::filesystem::exists(options.sim_cache)) {
    model.sim = read_sim_cache(options.sim_cache);
    if (model.sim.rows() != n)
      throw ValidationError("sim cache size " + std::to_string(model.sim.rows()) +
                            " does not match corpus size " + std::to_string(n));
    from_cache = true;
  } else {
    model.sim = similarity_matrix(vectors, has_tokens);
  }
  if (!options.sim_cache.empty() && !from_cache)
    write_sim_cache(options.sim_cache, model.sim);

  model.singleton_reward = singleton_rewards(model.sim);

  Index k = options.clusters;
  if (k <= 0) k = std::max<Index>(1, (n + 9) / 10);
  auto [assignment, count] = cluster_kmeans(vectors, k, options.seed);
  model.partition = std::move(assignment);
  model.cluster_count = count;
  return model;
}

void write_sim_cache(const std::string& path, const Eigen::MatrixXd& sim) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write sim cache: " + path);
  const Index n = sim.rows();
  put_u64_le(out, static_cast<std::uint64_t>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      put_u64_le(out, std::bit_cast<std::uint64_t>(sim(i, j)));
  if (!out) throw ValidationError("short write to sim cache: " + path);
}

Eigen::MatrixXd read_sim_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open sim cache: " + path);
  std::uint64_t n64 = get_u64_le(in);
  if (!in) throw ValidationError("sim cache truncated header: " + path);
  // Validate against the file size before allocating n*n doubles.
  std::uintmax_t expected = 8 + n64 * n64 * 8;
  std::error_code ec;
  std::uintmax_t actual = std::filesystem::file_size(path, ec);
  if (ec || n64 > (1u << 20) || actual != expected)
    throw ValidationError("sim cache size does not match its header: " + path);
  const Index n = static_cast<Index>(n64);
  Eigen::MatrixXd sim(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      std::uint64_t bits = get_u64_le(in);
      if (!in) throw ValidationError("sim cache truncated body: " + path);
      sim(i, j) = std::bit_cast<double>(bits);
    }
  return sim;
}

}  // namespace fairsumm
