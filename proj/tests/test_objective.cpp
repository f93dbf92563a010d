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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fairsumm/objective.hpp"
#include "test_util.hpp"

using namespace fairsumm;

namespace {

SimilarityModel toy_two_units(double off_diagonal, Index clusters = 1) {
  SimilarityModel model;
  model.sim = Eigen::MatrixXd(2, 2);
  model.sim << 1, off_diagonal, off_diagonal, 1;
  model.singleton_reward = singleton_rewards(model.sim);
  model.cluster_count = clusters;
  model.partition = clusters == 1 ? std::vector<Index>{0, 0}
                                  : std::vector<Index>{0, 1};
  return model;
}

}  // namespace

TEST_CASE("coverage worked examples") {
  SimilarityModel model = toy_two_units(0.0);
  CHECK(coverage<double>(std::vector<Index>{}, model) == 0.0);
  CHECK(coverage<double>(std::vector<Index>{0}, model) ==
        doctest::Approx(1.0));  // sim(1,1) + sim(1,2)

  SimilarityModel ones;
  ones.sim = Eigen::MatrixXd::Ones(3, 3);
  ones.singleton_reward = singleton_rewards(ones.sim);
  ones.cluster_count = 1;
  ones.partition = {0, 0, 0};
  CHECK(coverage<double>(std::vector<Index>{0, 1, 2}, ones) ==
        doctest::Approx(9.0));
}

TEST_CASE("diversity reward worked examples") {
  SimilarityModel one_cluster;
  one_cluster.sim = Eigen::MatrixXd::Identity(2, 2);
  one_cluster.singleton_reward = Eigen::Vector2d(0.25, 0.25);
  one_cluster.cluster_count = 1;
  one_cluster.partition = {0, 0};
  CHECK(diversity_reward<double>(std::vector<Index>{}, one_cluster) == 0.0);
  CHECK(diversity_reward<double>(std::vector<Index>{0, 1}, one_cluster) ==
        doctest::Approx(std::sqrt(0.5)));

  SimilarityModel two_clusters = one_cluster;
  two_clusters.cluster_count = 2;
  two_clusters.partition = {0, 1};
  // Splitting the same mass across clusters beats packing one cluster.
  CHECK(diversity_reward<double>(std::vector<Index>{0, 1}, two_clusters) ==
        doctest::Approx(1.0));
}

TEST_CASE("objective value is the weighted combination") {
  SimilarityModel model = toy_two_units(0.5);
  std::vector<Index> all{0, 1};
  ObjectiveConfig both{1.0, 1.0};
  ObjectiveConfig only_coverage{1.0, 0.0};
  ObjectiveConfig only_diversity{0.0, 1.0};
  CHECK(objective_value<double>(all, model, both) ==
        doctest::Approx(coverage<double>(all, model) +
                        diversity_reward<double>(all, model)));
  CHECK(objective_value<double>(all, model, only_coverage) ==
        doctest::Approx(coverage<double>(all, model)));
  CHECK(objective_value<double>(all, model, only_diversity) ==
        doctest::Approx(diversity_reward<double>(all, model)));
  CHECK(objective_value<double>(std::vector<Index>{}, model, both) == 0.0);
  CHECK_THROWS_AS((void)objective_value<double>(
                      all, model, ObjectiveConfig{0.0, 0.0}),
                  ValidationError);
  CHECK_THROWS_AS((void)objective_value<double>(
                      all, model, ObjectiveConfig{-1.0, 1.0}),
                  ValidationError);
}

TEST_CASE("first marginal gain is n*r + sqrt(r)") {
  SplitMix64 rng(11);
  SimilarityModel model = testutil::random_model(rng, 6);
  ObjectiveConfig config{1.0, 1.0};
  SummaryState state(model, config);
  for (Index z = 0; z < model.size(); ++z) {
    double r = model.singleton_reward(z);
    CHECK(state.gain(z) ==
          doctest::Approx(6.0 * r + std::sqrt(r)).epsilon(1e-12));
    CHECK(marginal_gain(state, z) == state.gain(z));
  }
}

TEST_CASE("second pick from a full cluster gains less than sqrt(r)") {
  SimilarityModel model = toy_two_units(0.8, 1);
  ObjectiveConfig config{1.0, 1.0};
  SummaryState state(model, config);
  state.add(0);
  double r1 = model.singleton_reward(1);
  double diversity_part = state.gain(1) - 2.0 * r1;
  CHECK(diversity_part < std::sqrt(r1));
  CHECK(diversity_part ==
        doctest::Approx(std::sqrt(state.cluster_sum(0) + r1) -
                        std::sqrt(state.cluster_sum(0))));
}

TEST_CASE("gain on an already selected unit is a contract violation") {
  SimilarityModel model = toy_two_units(0.0);
  SummaryState state(model, ObjectiveConfig{});
  state.add(0);
  CHECK_THROWS_AS((void)state.gain(0), ValidationError);
}

TEST_CASE("monotonicity and submodularity on random instances") {
  SplitMix64 rng(2024);
  for (int round = 0; round < 300; ++round) {
    Index n = 2 + static_cast<Index>(rng.next_below(10));
    SimilarityModel model = testutil::random_model(rng, n);
    ObjectiveConfig config{rng.next_double() * 2,
                           rng.next_double() * 2};
    if (config.coverage_weight == 0 && config.diversity_weight == 0)
      config.coverage_weight = 1;

    auto a = testutil::random_subset(rng, n, 0.3);
    auto b = a;
    for (Index i = 0; i < n; ++i)
      if (std::find(b.begin(), b.end(), i) == b.end() &&
          rng.next_double() < 0.3)
        b.push_back(i);

    double fa = objective_value<double>(a, model, config);
    double fb = objective_value<double>(b, model, config);
    CHECK(fa <= fb + 1e-9);

    // Diminishing returns: gain at the smaller set dominates.
    for (Index e = 0; e < n; ++e) {
      if (std::find(b.begin(), b.end(), e) != b.end()) continue;
      auto with = [&](std::vector<Index> s) {
        s.push_back(e);
        return objective_value<double>(s, model, config);
      };
      double gain_a = with(a) - fa;
      double gain_b = with(b) - fb;
      CHECK(gain_a >= gain_b - 1e-9);
    }
  }
}

TEST_CASE("incremental value tracks from-scratch recomputation") {
  SplitMix64 rng(555);
  int insertions = 0;
  while (insertions < 10000) {
    Index n = 5 + static_cast<Index>(rng.next_below(20));
    SimilarityModel model = testutil::random_model(rng, n);
    ObjectiveConfig config{rng.next_double(), rng.next_double()};
    if (config.coverage_weight == 0 && config.diversity_weight == 0)
      config.diversity_weight = 1;
    SummaryState state(model, config);
    for (Index z = 0; z < n; ++z) {
      if (rng.next_double() < 0.25) continue;
      double before = state.value();
      double gain = state.add(z);
      ++insertions;
      double fresh =
          objective_value<double>(state.selected(), model, config);
      CHECK(std::abs(state.value() - fresh) <= 1e-9);
      CHECK(before + gain == doctest::Approx(state.value()));
    }
    SummaryState copy = state;
    CHECK(copy.resync() <= 1e-9);
  }
}

TEST_CASE("curvature of a modular objective is zero") {
  SplitMix64 rng(31);
  SimilarityModel model = testutil::random_model(rng, 8);
  CHECK(curvature(model, ObjectiveConfig{1.0, 0.0}) ==
        doctest::Approx(0.0));
}

TEST_CASE("curvature worked example and bounds") {
  SimilarityModel model;
  model.sim = Eigen::MatrixXd::Zero(2, 2);
  model.singleton_reward = Eigen::Vector2d(0.25, 0.25);
  model.cluster_count = 1;
  model.partition = {0, 0};
  double expected = (0.5 - (std::sqrt(0.5) - 0.5)) / 0.5;
  CHECK(curvature(model, ObjectiveConfig{0.0, 1.0}) ==
        doctest::Approx(expected));

  SplitMix64 rng(77);
  for (int round = 0; round < 50; ++round) {
    SimilarityModel random =
        testutil::random_model(rng, 2 + static_cast<Index>(rng.next_below(9)));
    double c = curvature(random, ObjectiveConfig{rng.next_double(), 1.0});
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
  }
}

TEST_CASE("curvature error paths") {
  SimilarityModel tiny;
  tiny.sim = Eigen::MatrixXd::Identity(1, 1);
  tiny.singleton_reward = Eigen::VectorXd::Ones(1);
  tiny.cluster_count = 1;
  tiny.partition = {0};
  CHECK_THROWS_AS((void)curvature(tiny, ObjectiveConfig{}), ValidationError);

  SimilarityModel zero;
  zero.sim = Eigen::MatrixXd::Zero(3, 3);
  zero.singleton_reward = Eigen::Vector3d::Zero();
  zero.cluster_count = 1;
  zero.partition = {0, 0, 0};
  CHECK_THROWS_AS((void)curvature(zero, ObjectiveConfig{}), ValidationError);
}
