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

#include "rnbs/permanent.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "rnbs/errors.hpp"
#include "rnbs/rng.hpp"

using namespace rnbs;

namespace {

ComplexMatrix random_matrix(std::size_t n, SeededRng& rng) {
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto [re, im] = rng.normal_pair();
      a(r, c) = cplx(re, im);
    }
  }
  return a;
}

ComplexMatrix all_ones(std::size_t n) {
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = cplx(1.0, 0.0);
  return a;
}

double rel_err(cplx got, cplx want) {
  const double scale = std::max(1.0, std::abs(want));
  return std::abs(got - want) / scale;
}

}  // namespace

TEST_SUITE("permanent") {

TEST_CASE("identity matrices have permanent one") {
  for (std::size_t n : {1, 2, 3, 5, 8}) {
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    CHECK(std::abs(permanent_naive(eye) - cplx(1.0, 0.0)) <= 1e-15);
    CHECK(std::abs(permanent_ryser(eye) - cplx(1.0, 0.0)) <= 1e-12);
    CHECK(std::abs(permanent_glynn(eye) - cplx(1.0, 0.0)) <= 1e-12);
  }
}

TEST_CASE("2x2 permanent is ad + bc") {
  ComplexMatrix m(2, 2);
  m(0, 0) = cplx(1.0, 2.0);   // a
  m(0, 1) = cplx(-3.0, 0.5);  // b
  m(1, 0) = cplx(0.0, 1.0);   // c
  m(1, 1) = cplx(2.0, -1.0);  // d
  const cplx want = m(0, 0) * m(1, 1) + m(0, 1) * m(1, 0);
  CHECK(std::abs(permanent_naive(m) - want) <= 1e-14);
  CHECK(std::abs(permanent_ryser(m) - want) <= 1e-13);
  CHECK(std::abs(permanent_glynn(m) - want) <= 1e-13);
}

TEST_CASE("all-ones matrix has permanent n factorial") {
  CHECK(std::abs(permanent_naive(all_ones(4)) - cplx(24.0, 0.0)) <= 1e-12);
  CHECK(rel_err(permanent_ryser(all_ones(8)), cplx(40320.0, 0.0)) <= 1e-12);
  CHECK(rel_err(permanent_glynn(all_ones(8)), cplx(40320.0, 0.0)) <= 1e-12);
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(permanent_naive(ComplexMatrix(11, 11)), SizeGuardError);
  CHECK_THROWS_AS(permanent_ryser(ComplexMatrix(33, 33)), SizeGuardError);
  CHECK_THROWS_AS(permanent_glynn(ComplexMatrix(33, 33)), SizeGuardError);
  CHECK_THROWS_AS(permanent(ComplexMatrix(33, 33)), SizeGuardError);
  CHECK_THROWS_AS(permanent_naive(ComplexMatrix(2, 3)),
                  InvalidDimensionError);
  CHECK_THROWS_AS(permanent_ryser(ComplexMatrix(2, 3)),
                  InvalidDimensionError);
  CHECK_THROWS_AS(permanent_glynn(ComplexMatrix(2, 3)),
                  InvalidDimensionError);
}

TEST_CASE("ryser and glynn agree with naive on random small matrices") {
  SeededRng rng(4242);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + rep % 8;
    const ComplexMatrix a = random_matrix(n, rng);
    const cplx oracle = permanent_naive(a);
    CAPTURE(n);
    CHECK(rel_err(permanent_ryser(a), oracle) <= 1e-10);
    CHECK(rel_err(permanent_glynn(a), oracle) <= 1e-10);
  }
}

TEST_CASE("ryser and glynn agree on medium matrices") {
  SeededRng rng(171717);
  for (std::size_t n : {7, 12}) {
    const ComplexMatrix a = random_matrix(n, rng);
    CAPTURE(n);
    CHECK(rel_err(permanent_ryser(a), permanent_glynn(a)) <= 1e-10);
  }
}

TEST_CASE("permanent is invariant under row and column permutation") {
  SeededRng rng(90210);
  const std::size_t n = 6;
  const ComplexMatrix a = random_matrix(n, rng);
  const cplx base = permanent_ryser(a);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.next_u64() % i]);
  }
  ComplexMatrix rows(n, n), cols(n, n), trans(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      rows(r, c) = a(perm[r], c);
      cols(r, c) = a(r, perm[c]);
      trans(r, c) = a(c, r);
    }
  }
  CHECK(rel_err(permanent_ryser(rows), base) <= 1e-12);
  CHECK(rel_err(permanent_ryser(cols), base) <= 1e-12);
  CHECK(rel_err(permanent_ryser(trans), base) <= 1e-12);
}

TEST_CASE("permanent is multilinear in rows") {
  SeededRng rng(626262);
  const std::size_t n = 5;
  const ComplexMatrix a = random_matrix(n, rng);
  const cplx base = permanent_ryser(a);
  const cplx scale(0.5, -1.5);
  ComplexMatrix scaled = a;
  for (std::size_t c = 0; c < n; ++c) scaled(2, c) = scale * a(2, c);
  CHECK(rel_err(permanent_ryser(scaled), scale * base) <= 1e-12);
}

TEST_CASE("threaded ryser is bitwise identical to single-threaded") {
  SeededRng rng(777);
  const ComplexMatrix a = random_matrix(14, rng);
  const cplx serial = permanent_ryser(a, 1);
  const cplx quad = permanent_ryser(a, 4);
  CHECK(serial.real() == quad.real());
  CHECK(serial.imag() == quad.imag());
}

TEST_CASE("dispatcher picks naive for small, ryser above") {
  SeededRng rng(31337);
  const ComplexMatrix small = random_matrix(3, rng);
  const PermanentResult small_res = permanent(small);
  CHECK(small_res.algorithm == PermanentAlgorithm::kNaive);
  CHECK(small_res.order == 3);
  CHECK(rel_err(small_res.value, permanent_naive(small)) == 0.0);

  const ComplexMatrix mid = random_matrix(12, rng);
  const PermanentResult mid_res = permanent(mid);
  CHECK(mid_res.algorithm == PermanentAlgorithm::kRyser);
  CHECK(mid_res.order == 12);
  CHECK(rel_err(mid_res.value, permanent_glynn(mid)) <= 1e-10);
}

TEST_CASE("algorithm names") {
  CHECK(std::string(to_string(PermanentAlgorithm::kNaive)) == "naive");
  CHECK(std::string(to_string(PermanentAlgorithm::kRyser)) == "ryser");
  CHECK(std::string(to_string(PermanentAlgorithm::kGlynn)) == "glynn");
}

TEST_CASE("abs_squared") {
  CHECK(abs_squared(cplx(1.0, 0.0)) == 1.0);
  CHECK(abs_squared(cplx(3.0, 4.0)) == 25.0);
  CHECK(abs_squared(cplx(0.0, 0.0)) == 0.0);
}

}  // TEST_SUITE
