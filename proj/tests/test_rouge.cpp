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

#include "fairsumm/common.hpp"
#include "fairsumm/rouge.hpp"

using namespace fairsumm;

namespace {

using Tokens = std::vector<std::string>;

}  // namespace

TEST_CASE("rouge worked examples") {
  Tokens cand{"a", "b", "c"};
  Tokens ref{"a", "b", "d"};
  RougeScore r1 = rouge_n(cand, ref, 1);
  CHECK(r1.precision == doctest::Approx(2.0 / 3.0));
  CHECK(r1.recall == doctest::Approx(2.0 / 3.0));
  CHECK(r1.f1 == doctest::Approx(2.0 / 3.0));

  RougeScore r2 = rouge_n(cand, ref, 2);
  CHECK(r2.precision == doctest::Approx(0.5));
  CHECK(r2.recall == doctest::Approx(0.5));

  RougeScore identity = rouge_n(cand, cand, 1);
  CHECK(identity.precision == 1.0);
  CHECK(identity.recall == 1.0);
  CHECK(identity.f1 == 1.0);

  RougeScore empty = rouge_n(Tokens{}, ref, 1);
  CHECK(empty.precision == 0.0);
  CHECK(empty.recall == 0.0);
  CHECK(empty.f1 == 0.0);

  CHECK_THROWS_AS(rouge_n(cand, ref, 3), ValidationError);
}

TEST_CASE("matches are clipped to the reference count") {
  Tokens ref{"a", "b"};
  Tokens honest{"a", "b"};
  Tokens stuffed{"a", "a", "a", "b"};
  CHECK(rouge_n(honest, ref, 1).recall == 1.0);
  CHECK(rouge_n(stuffed, ref, 1).recall == 1.0);  // extra a's don't help
  CHECK(rouge_n(stuffed, ref, 1).precision == doctest::Approx(0.5));
}

TEST_CASE("swapping candidate and reference swaps precision and recall") {
  SplitMix64 rng(17);
  const char* vocab[] = {"u", "v", "w", "x", "y"};
  for (int round = 0; round < 100; ++round) {
    Tokens a, b;
    for (std::uint64_t i = 0; i < 2 + rng.next_below(8); ++i)
      a.push_back(vocab[rng.next_below(5)]);
    for (std::uint64_t i = 0; i < 2 + rng.next_below(8); ++i)
      b.push_back(vocab[rng.next_below(5)]);
    for (int n : {1, 2}) {
      RougeScore ab = rouge_n(a, b, n);
      RougeScore ba = rouge_n(b, a, n);
      CHECK(ab.precision == ba.recall);
      CHECK(ab.recall == ba.precision);
      CHECK(ab.f1 == doctest::Approx(ba.f1));
      CHECK(ab.precision >= 0.0);
      CHECK(ab.precision <= 1.0);
      CHECK(ab.f1 <= std::max(ab.precision, ab.recall) + 1e-12);
    }
  }
}

TEST_CASE("multi-reference scores are per-reference means") {
  Tokens cand{"a", "b", "c"};
  std::vector<Tokens> same{{"a", "b", "d"}, {"a", "b", "d"}};
  RougePair pair = rouge_multi(cand, same);
  CHECK(pair.rouge1.recall == doctest::Approx(2.0 / 3.0));

  // One reference fully matched (R=1), one disjoint (R=0) -> mean 0.5.
  std::vector<Tokens> split{{"a", "b", "c"}, {"x", "y", "z"}};
  CHECK(rouge_multi(cand, split).rouge1.recall == doctest::Approx(0.5));

  // Hand-computed three-reference mean.
  std::vector<Tokens> three{
      {"a", "b"},        // P 2/3, R 1,   F1 4/5
      {"a", "x"},        // P 1/3, R 1/2, F1 2/5
      {"x", "y", "z"}};  // 0
  RougePair mean3 = rouge_multi(cand, three);
  CHECK(mean3.rouge1.precision == doctest::Approx((2.0 / 3 + 1.0 / 3 + 0) / 3));
  CHECK(mean3.rouge1.recall == doctest::Approx((1.0 + 0.5 + 0) / 3));
  CHECK(mean3.rouge1.f1 == doctest::Approx((0.8 + 0.4 + 0) / 3));

  CHECK_THROWS_AS(rouge_multi(cand, {}), ValidationError);
}
