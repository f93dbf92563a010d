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

#ifndef FAIRSUMM_SIMILARITY_HPP_
#define FAIRSUMM_SIMILARITY_HPP_

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstdint>
#include <string>
#include <vector>

#include "fairsumm/common.hpp"
#include "fairsumm/corpus.hpp"

namespace fairsumm {

/// Pairwise similarities, singleton rewards and diversity partitions.
/// Any symmetric [0,1] similarity supplier can populate one of these; the
/// shipped builder uses TF-IDF cosine. Immutable once built.
template <typename Scalar>
struct SimilarityModelT {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Matrix sim;               // n x n, symmetric, entries in [0,1]
  Vector singleton_reward;  // r_j = column mean of sim
  std::vector<Index> partition;  // unit -> cluster id in [0, cluster_count)
  Index cluster_count = 0;

  Index size() const { return sim.rows(); }
};

using SimilarityModel = SimilarityModelT<double>;

/// r_j = (1/n) * sum_i sim(i,j), the j-th unit's average similarity to the
/// whole corpus (self included).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> singleton_rewards(
    const Eigen::MatrixBase<Derived>& sim) {
  return sim.colwise().mean().transpose();
}

struct SimilarityOptions {
  Index clusters = 0;          // 0 -> max(1, ceil(n / 10))
  std::uint64_t seed = 42;     // drives k-means++ initialization
  std::string sim_cache;       // optional binary cache path
};

/// L2-normalized TF-IDF row vectors: weight = tf * ln(N / df).
/// Terms are numbered in first-appearance order.
Eigen::SparseMatrix<double, Eigen::RowMajor> build_tfidf(const Corpus& corpus);

/// Cosine similarities of the row vectors. Off-diagonal entries are 0 when
/// either vector is zero; the diagonal is 1 for units with at least one
/// token and 0 otherwise (a unit whose every term has df = N still counts
/// as fully self-similar).
Eigen::MatrixXd similarity_matrix(
    const Eigen::SparseMatrix<double, Eigen::RowMajor>& vectors,
    const std::vector<bool>& has_tokens);

/// TF-IDF vectors -> sim matrix (or cache) -> rewards -> k-means partitions.
SimilarityModel build_similarity_model(const Corpus& corpus,
                                       const SimilarityOptions& options = {});

/// Binary sim-matrix cache: 8-byte little-endian n, then n*n row-major
/// little-endian doubles.
void write_sim_cache(const std::string& path, const Eigen::MatrixXd& sim);
Eigen::MatrixXd read_sim_cache(const std::string& path);

}  // namespace fairsumm

#endif  // FAIRSUMM_SIMILARITY_HPP_
