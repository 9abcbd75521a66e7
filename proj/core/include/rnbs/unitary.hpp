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

#ifndef RNBS_UNITARY_HPP_
#define RNBS_UNITARY_HPP_

#include <cstddef>

#include "rnbs/complex_matrix.hpp"
#include "rnbs/rng.hpp"

namespace rnbs {

// Square matrix validated to be unitary within kTolerance at construction.
// Entry (d, s) is the transition amplitude from input port s to output
// port d of the interferometer.
class UnitaryMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  // Throws UnitarityError (message includes the measured defect) if
  // m^H m deviates from the identity by more than kTolerance; throws
  // InvalidDimensionError if m is not square.
  explicit UnitaryMatrix(ComplexMatrix m);

  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return mat_(r, c);
  }

 private:
  ComplexMatrix mat_;
};

// m x m matrix of iid standard complex normals (real and imaginary parts
// each N(0,1)). Entries are drawn row-major, real part first.
ComplexMatrix ginibre_matrix(std::size_t m, SeededRng& rng);

// Haar-distributed m x m unitary: Householder QR of a Ginibre matrix with
// each column of Q multiplied by the conjugate phase of the matching
// R diagonal entry, which removes the phase ambiguity of plain QR and
// restores the invariant distribution.
UnitaryMatrix haar_unitary(std::size_t m, SeededRng& rng);

}  // namespace rnbs

#endif  // RNBS_UNITARY_HPP_
