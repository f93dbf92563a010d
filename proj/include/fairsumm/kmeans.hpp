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

#ifndef FAIRSUMM_KMEANS_HPP_
#define FAIRSUMM_KMEANS_HPP_

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstdint>
#include <utility>
#include <vector>

#include "fairsumm/common.hpp"

namespace fairsumm {

/// Lloyd's k-means with k-means++ seeding over sparse row vectors.
/// Deterministic for a fixed seed: SplitMix64 drives every random draw,
/// assignment ties go to the lowest cluster id, and empty clusters are
/// repaired by peeling the farthest point off the largest cluster.
/// Zero-norm rows are excluded from clustering and land in cluster 0.
/// Returns (assignment, number of nonempty clusters), with cluster ids
/// renumbered densely; the count may be < k when points coincide.
///
/// Distances use ||x - c||^2 = ||x||^2 - 2 x.c + ||c||^2 with one batched
/// sparse-dense product per pass, so a pass costs O(nnz * k).
template <typename Scalar>
std::pair<std::vector<Index>, Index> cluster_kmeans(
    const Eigen::SparseMatrix<Scalar, Eigen::RowMajor>& rows, Index k,
    std::uint64_t seed, int max_iterations = 50) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Sparse = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

  const Index n = rows.rows();
  if (k < 1 || k > n)
    throw ValidationError("cluster count must be in [1, n], got " +
                          std::to_string(k) + " for n = " + std::to_string(n));

  std::vector<Index> active;  // rows that actually participate
  for (Index i = 0; i < n; ++i)
    if (rows.row(i).squaredNorm() > Scalar(0)) active.push_back(i);

  std::vector<Index> assignment(static_cast<std::size_t>(n), 0);
  if (active.empty()) return {assignment, 1};

  const Index n_active = static_cast<Index>(active.size());
  const Index k_eff = std::min(k, n_active);

  // Compact the active rows into one sparse block.
  Sparse points(n_active, rows.cols());
  {
    std::vector<Eigen::Triplet<Scalar>> triplets;
    triplets.reserve(static_cast<std::size_t>(rows.nonZeros()));
    for (Index a = 0; a < n_active; ++a) {
      Index src = active[static_cast<std::size_t>(a)];
      for (typename Sparse::InnerIterator it(rows, src); it; ++it)
        triplets.emplace_back(a, it.col(), it.value());
    }
    points.setFromTriplets(triplets.begin(), triplets.end());
  }
  Vector point_norm2(n_active);
  for (Index a = 0; a < n_active; ++a)
    point_norm2(a) = points.row(a).squaredNorm();

  SplitMix64 rng(seed);

  // k-means++: first centroid uniform, the rest D^2-weighted.
  Matrix centroids(k_eff, rows.cols());
  std::vector<bool> is_centroid(static_cast<std::size_t>(n_active), false);
  {
    Index first = static_cast<Index>(
        rng.next_below(static_cast<std::uint64_t>(n_active)));
    centroids.row(0) = points.row(first);
    is_centroid[static_cast<std::size_t>(first)] = true;

    auto dist_to_centroid = [&](Index c) {
      Vector dots = points * centroids.row(c).transpose();
      Scalar cnorm2 = centroids.row(c).squaredNorm();
      return (point_norm2.array() - Scalar(2) * dots.array() + cnorm2)
          .cwiseMax(Scalar(0))
          .matrix()
          .eval();
    };
    Vector dist2 = dist_to_centroid(0);

    for (Index c = 1; c < k_eff; ++c) {
      Scalar total = dist2.sum();
      Index pick = -1;
      if (total > Scalar(0)) {
        Scalar r = static_cast<Scalar>(rng.next_double()) * total;
        Scalar acc = 0;
        for (Index a = 0; a < n_active; ++a) {
          acc += dist2(a);
          if (acc > r) {
            pick = a;
            break;
          }
        }
        if (pick < 0) pick = n_active - 1;
      } else {
        // All points coincide with some centroid; take the first leftover.
        for (Index a = 0; a < n_active; ++a)
          if (!is_centroid[static_cast<std::size_t>(a)]) {
            pick = a;
            break;
          }
        if (pick < 0) pick = 0;
      }
      is_centroid[static_cast<std::size_t>(pick)] = true;
      centroids.row(c) = points.row(pick);
      dist2 = dist2.cwiseMin(dist_to_centroid(c));
    }
  }

  std::vector<Index> labels(static_cast<std::size_t>(n_active), -1);
  for (int iter = 0; iter < max_iterations; ++iter) {
    // One batched product gives every point-centroid inner product.
    Matrix dots = points * centroids.transpose();  // n_active x k_eff
    Vector cnorm2 = centroids.rowwise().squaredNorm();

    bool changed = false;
    for (Index a = 0; a < n_active; ++a) {
      Index best = 0;
      Scalar best_cost = cnorm2(0) - Scalar(2) * dots(a, 0);
      for (Index c = 1; c < k_eff; ++c) {
        Scalar cost = cnorm2(c) - Scalar(2) * dots(a, c);
        if (cost < best_cost) {
          best_cost = cost;
          best = c;
        }
      }
      if (labels[static_cast<std::size_t>(a)] != best) {
        labels[static_cast<std::size_t>(a)] = best;
        changed = true;
      }
    }

    std::vector<Index> count(static_cast<std::size_t>(k_eff), 0);
    for (Index lbl : labels) ++count[static_cast<std::size_t>(lbl)];

    // Repair empty clusters from the largest one.
    for (Index c = 0; c < k_eff; ++c) {
      if (count[static_cast<std::size_t>(c)] > 0) continue;
      Index largest = 0;
      for (Index c2 = 1; c2 < k_eff; ++c2)
        if (count[static_cast<std::size_t>(c2)] >
            count[static_cast<std::size_t>(largest)])
          largest = c2;
      if (count[static_cast<std::size_t>(largest)] < 2) continue;
      Index worst = -1;
      Scalar worst_d = -1;
      for (Index a = 0; a < n_active; ++a) {
        if (labels[static_cast<std::size_t>(a)] != largest) continue;
        Scalar d = point_norm2(a) - Scalar(2) * dots(a, largest) + cnorm2(largest);
        if (d > worst_d) {
          worst_d = d;
          worst = a;
        }
      }
      labels[static_cast<std::size_t>(worst)] = c;
      --count[static_cast<std::size_t>(largest)];
      ++count[static_cast<std::size_t>(c)];
      changed = true;
    }

    // Update step: accumulate sparse rows into the assigned centroid.
    centroids.setZero();
    for (Index a = 0; a < n_active; ++a) {
      Index lbl = labels[static_cast<std::size_t>(a)];
      for (typename Sparse::InnerIterator it(points, a); it; ++it)
        centroids(lbl, it.col()) += it.value();
    }
    for (Index c = 0; c < k_eff; ++c)
      if (count[static_cast<std::size_t>(c)] > 0)
        centroids.row(c) /=
            static_cast<Scalar>(count[static_cast<std::size_t>(c)]);

    if (!changed) break;
  }

  // Renumber nonempty clusters densely, ascending by original id.
  std::vector<bool> nonempty(static_cast<std::size_t>(k_eff), false);
  for (Index lbl : labels) nonempty[static_cast<std::size_t>(lbl)] = true;
  std::vector<Index> remap(static_cast<std::size_t>(k_eff), -1);
  Index next_id = 0;
  for (Index c = 0; c < k_eff; ++c)
    if (nonempty[static_cast<std::size_t>(c)])
      remap[static_cast<std::size_t>(c)] = next_id++;
  for (Index a = 0; a < n_active; ++a)
    assignment[static_cast<std::size_t>(active[static_cast<std::size_t>(a)])] =
        remap[static_cast<std::size_t>(labels[static_cast<std::size_t>(a)])];

  return {assignment, next_id};
}

}  // namespace fairsumm

#endif  // FAIRSUMM_KMEANS_HPP_
