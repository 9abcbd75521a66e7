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

#include "rnbs/unitary.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace rnbs {

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  if (!mat_.is_square()) {
    throw InvalidDimensionError("unitary matrix must be square");
  }
  const double defect = unitarity_defect(mat_);
  if (!(defect <= kTolerance)) {
    std::ostringstream msg;
    msg << "matrix is not unitary: defect " << defect << " exceeds tolerance "
        << kTolerance;
    throw UnitarityError(msg.str());
  }
}

ComplexMatrix ginibre_matrix(std::size_t m, SeededRng& rng) {
  ComplexMatrix z(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const auto [re, im] = rng.normal_pair();
      z(r, c) = cplx{re, im};
    }
  }
  return z;
}

namespace {

// z / |z|, with the zero-measure degenerate case pinned to 1.
cplx unit_phase(const cplx& z) {
  const double mag = std::abs(z);
  if (mag == 0.0) return cplx{1.0, 0.0};
  return z / mag;
}

}  // namespace

UnitaryMatrix haar_unitary(std::size_t m, SeededRng& rng) {
  ComplexMatrix a = ginibre_matrix(m, rng);

  // Householder QR. Reflector k zeroes column k below the diagonal; the
  // reflector vectors are kept to assemble Q afterwards.
  std::vector<std::vector<cplx>> reflectors(m);
  for (std::size_t k = 0; k < m; ++k) {
    double norm_sq = 0.0;
    for (std::size_t i = k; i < m; ++i) {
      const cplx& v = a(i, k);
      norm_sq += v.real() * v.real() + v.imag() * v.imag();
    }
    const double norm = std::sqrt(norm_sq);
    if (norm == 0.0) continue;

    // alpha = -phase(x0) * |x|, so v0 = x0 - alpha accumulates magnitude
    // instead of cancelling.
    const cplx alpha = -unit_phase(a(k, k)) * norm;
    std::vector<cplx> v(m - k);
    v[0] = a(k, k) - alpha;
    double v_norm_sq = v[0].real() * v[0].real() + v[0].imag() * v[0].imag();
    for (std::size_t i = k + 1; i < m; ++i) {
      v[i - k] = a(i, k);
      v_norm_sq += a(i, k).real() * a(i, k).real() +
                   a(i, k).imag() * a(i, k).imag();
    }
    if (v_norm_sq == 0.0) continue;

    // Apply H = I - 2 v v^H / (v^H v) to the trailing block of a.
    const double beta = 2.0 / v_norm_sq;
    for (std::size_t j = k; j < m; ++j) {
      cplx dot{0.0, 0.0};
      for (std::size_t i = k; i < m; ++i) dot += std::conj(v[i - k]) * a(i, j);
      dot *= beta;
      for (std::size_t i = k; i < m; ++i) a(i, j) -= dot * v[i - k];
    }
    reflectors[k] = std::move(v);
  }

  // Q = H_0 H_1 ... H_{m-1}: apply reflectors to the identity in reverse.
  ComplexMatrix q = ComplexMatrix::identity(m);
  for (std::size_t kk = m; kk-- > 0;) {
    const auto& v = reflectors[kk];
    if (v.empty()) continue;
    double v_norm_sq = 0.0;
    for (const cplx& x : v)
      v_norm_sq += x.real() * x.real() + x.imag() * x.imag();
    const double beta = 2.0 / v_norm_sq;
    for (std::size_t j = 0; j < m; ++j) {
      cplx dot{0.0, 0.0};
      for (std::size_t i = kk; i < m; ++i) dot += std::conj(v[i - kk]) * q(i, j);
      dot *= beta;
      for (std::size_t i = kk; i < m; ++i) q(i, j) -= dot * v[i - kk];
    }
  }

  // Fix the column phases against the R diagonal (now sitting in a); plain
  // QR is only unitary-up-to-phases and would bias the ensemble.
  for (std::size_t j = 0; j < m; ++j) {
    const cplx ph = std::conj(unit_phase(a(j, j)));
    for (std::size_t i = 0; i < m; ++i) q(i, j) *= ph;
  }

  return UnitaryMatrix(std::move(q));
}

}  // namespace rnbs
