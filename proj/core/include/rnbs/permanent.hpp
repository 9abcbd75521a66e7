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

#ifndef RNBS_PERMANENT_HPP_
#define RNBS_PERMANENT_HPP_

#include <cstddef>

#include "rnbs/complex_matrix.hpp"

namespace rnbs {

enum class PermanentAlgorithm { kNaive, kRyser, kGlynn };

const char* to_string(PermanentAlgorithm algorithm);

// Orders above kNaiveMaxOrder are refused by the naive kernel (n! terms);
// orders above kMaxOrder are refused by every kernel (2^n terms).
inline constexpr std::size_t kNaiveMaxOrder = 10;
inline constexpr std::size_t kMaxOrder = 32;

struct PermanentResult {
  cplx value;
  PermanentAlgorithm algorithm;
  std::size_t order;
};

// Definition-level evaluation: sum over all n! permutations. Square
// matrices up to kNaiveMaxOrder only. Serves as the oracle for the fast
// kernels in tests.
cplx permanent_naive(const ComplexMatrix& a);

// Ryser's inclusion-exclusion formula walked in Gray-code order, O(2^n n).
// For n > 12 the 2^n - 1 subsets are split into 256 fixed blocks evaluated
// via run_blocks; each block rebuilds its row sums from the Gray code of
// its first subset and keeps a compensated partial sum, and partials are
// reduced in block order, so the value is bit-identical for any `threads`.
cplx permanent_ryser(const ComplexMatrix& a, int threads = 1);

// Glynn's formula over 2^(n-1) sign vectors in Gray-code order, O(2^n n).
// Single-threaded; used for cross-checks against Ryser.
cplx permanent_glynn(const ComplexMatrix& a);

// Dispatcher: naive for n <= 4, Ryser otherwise. Reports which kernel ran.
PermanentResult permanent(const ComplexMatrix& a, int threads = 1);

inline double abs_squared(const cplx& z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

}  // namespace rnbs

#endif  // RNBS_PERMANENT_HPP_
