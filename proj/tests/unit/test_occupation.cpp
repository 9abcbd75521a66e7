// Copyright 2026 The rnbs-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rnbs/occupation.hpp"

#include <set>
#include <vector>

#include <doctest.h>

#include "rnbs/errors.hpp"

using namespace rnbs;

namespace {

std::vector<std::vector<int>> patterns(const std::vector<OutputSample>& v) {
  std::vector<std::vector<int>> out;
  for (const OutputSample& s : v) out.push_back(s.occupations);
  return out;
}

}  // namespace

TEST_SUITE("occupation") {

TEST_CASE("make_output_sample counts clicks") {
  const OutputSample s = make_output_sample({0, 2, 1, 0});
  CHECK(s.clicks == 2);
  CHECK_THROWS_AS(make_output_sample({}), InvalidDimensionError);
  CHECK_THROWS_AS(make_output_sample({0, -1}), DomainError);
}

TEST_CASE("collision-free enumeration, 2 photons in 3 ports") {
  const auto outputs = enumerate_outputs(3, 2, OutputMode::kCollisionFree);
  const std::vector<std::vector<int>> want = {
      {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  CHECK(patterns(outputs) == want);
  for (const OutputSample& s : outputs) CHECK(s.clicks == 2);
}

TEST_CASE("bunching enumeration, 2 photons in 2 ports") {
  const auto outputs = enumerate_outputs(2, 2, OutputMode::kBunching);
  const std::vector<std::vector<int>> want = {{2, 0}, {1, 1}, {0, 2}};
  CHECK(patterns(outputs) == want);
}

TEST_CASE("bunching click filter removes low-click patterns") {
  const auto outputs = enumerate_outputs(2, 2, OutputMode::kBunching, 2);
  const std::vector<std::vector<int>> want = {{1, 1}};
  CHECK(patterns(outputs) == want);
}

TEST_CASE("collision-free ignores the click filter") {
  // Every collision-free pattern has exactly n clicks already.
  const auto plain = enumerate_outputs(4, 2, OutputMode::kCollisionFree, 0);
  const auto filtered = enumerate_outputs(4, 2, OutputMode::kCollisionFree, 2);
  CHECK(patterns(plain) == patterns(filtered));
  CHECK(plain.size() == 6);  // C(4, 2)
}

TEST_CASE("enumeration counts match the closed forms") {
  CHECK(enumerate_outputs(6, 3, OutputMode::kCollisionFree).size() == 20);
  CHECK(enumerate_outputs(5, 3, OutputMode::kBunching).size() == 35);
  CHECK(count_outputs(6, 3, OutputMode::kCollisionFree) == 20);
  CHECK(count_outputs(5, 3, OutputMode::kBunching) == 35);  // C(7, 3)
}

TEST_CASE("patterns are distinct and conserve the photon number") {
  for (OutputMode mode : {OutputMode::kCollisionFree, OutputMode::kBunching}) {
    const auto outputs = enumerate_outputs(6, 4, mode);
    std::set<std::vector<int>> seen;
    for (const OutputSample& s : outputs) {
      int total = 0;
      for (int n : s.occupations) total += n;
      CHECK(total == 4);
      CHECK(s.occupations.size() == 6);
      seen.insert(s.occupations);
    }
    CHECK(seen.size() == outputs.size());
  }
}

TEST_CASE("zero photons yields the single empty pattern") {
  const auto outputs = enumerate_outputs(3, 0, OutputMode::kBunching);
  REQUIRE(outputs.size() == 1);
  CHECK(outputs[0].occupations == std::vector<int>{0, 0, 0});
  CHECK(outputs[0].clicks == 0);
  CHECK(count_outputs(3, 0, OutputMode::kBunching) == 1);
}

TEST_CASE("collision-free cannot fit more photons than ports") {
  CHECK_THROWS_AS(enumerate_outputs(3, 4, OutputMode::kCollisionFree),
                  InfeasibleError);
  CHECK_NOTHROW(enumerate_outputs(3, 4, OutputMode::kBunching));
}

TEST_CASE("oversized tables are refused, counts saturate") {
  // C(104, 5) = 91,962,520 exceeds the 1e7 cap.
  CHECK_THROWS_AS(enumerate_outputs(100, 5, OutputMode::kBunching),
                  SizeGuardError);
  CHECK(count_outputs(100, 5, OutputMode::kBunching) == kMaxTableEntries + 1);
  CHECK(count_outputs(1000, 500, OutputMode::kBunching) ==
        kMaxTableEntries + 1);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(enumerate_outputs(0, 1, OutputMode::kBunching),
                  InvalidDimensionError);
  CHECK_THROWS_AS(enumerate_outputs(3, -1, OutputMode::kBunching),
                  DomainError);
}

}  // TEST_SUITE
