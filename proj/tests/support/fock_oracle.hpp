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

// Brute-force multimode Fock-state evolution. Independent of the permanent
// machinery: photons are injected one at a time through creation operators,
// tracking every intermediate occupation pattern and amplitude. Exponential
// in the photon number; fine as a test oracle for a handful of photons.

#ifndef RNBS_TESTS_SUPPORT_FOCK_ORACLE_HPP_
#define RNBS_TESTS_SUPPORT_FOCK_ORACLE_HPP_

#include <map>
#include <vector>

#include "rnbs/complex_matrix.hpp"
#include "rnbs/unitary.hpp"

namespace rnbs::testing {

// Output-state amplitudes for the given input occupations (over the first
// input.size() ports) pushed through u. Keys are full-length occupation
// vectors; the squared magnitudes sum to 1.
std::map<std::vector<int>, cplx> evolve_fock_state(
    const UnitaryMatrix& u, const std::vector<int>& input_occupations);

// |amplitude|^2 of one output pattern.
double fock_transition_probability(const UnitaryMatrix& u,
                                   const std::vector<int>& input_occupations,
                                   const std::vector<int>& output_occupations);

}  // namespace rnbs::testing

#endif  // RNBS_TESTS_SUPPORT_FOCK_ORACLE_HPP_
