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
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rnbs/parallel.hpp"
#include "kahan_sum.hpp"

namespace rnbs {

const char* to_string(PermanentAlgorithm algorithm) {
  switch (algorithm) {
    case PermanentAlgorithm::kNaive:
      return "naive";
    case PermanentAlgorithm::kRyser:
      return "ryser";
    case PermanentAlgorithm::kGlynn:
      return "glynn";
  }
  return "unknown";
}

namespace {

using detail::kahan_add;

std::size_t checked_order(const ComplexMatrix& a, std::size_t max_order) {
  if (!a.is_square()) {
    throw InvalidDimensionError("permanent requires a square matrix");
  }
  const std::size_t n = a.rows();
  if (n > max_order) {
    throw SizeGuardError("permanent order " + std::to_string(n) +
                         " exceeds the cap of " + std::to_string(max_order));
  }
  return n;
}

// Ryser partial sum over Gray-code positions [k_lo, k_hi). The sign
// (-1)^(n - |S|) is folded into each term; the caller applies no outer
// factor. Row sums for the first subset are rebuilt from scratch, so any
// contiguous range can be evaluated independently of the rest. All
// accumulation runs in extended precision: the alternating sum cancels
// heavily, so double-precision term error would be amplified into the
// result.
void ryser_block(const double* col_re, const double* col_im, std::size_t n,
                 std::uint64_t k_lo, std::uint64_t k_hi, long double& out_re,
                 long double& out_im) {
  std::vector<long double> rs_re(n, 0.0L), rs_im(n, 0.0L);

  std::uint64_t subset = (k_lo - 1) ^ ((k_lo - 1) >> 1);
  for (std::uint64_t bits = subset; bits != 0; bits &= bits - 1) {
    const std::size_t j = static_cast<std::size_t>(std::countr_zero(bits));
    const double* cre = col_re + j * n;
    const double* cim = col_im + j * n;
    for (std::size_t i = 0; i < n; ++i) {
      rs_re[i] += cre[i];
      rs_im[i] += cim[i];
    }
  }
  unsigned parity = static_cast<unsigned>(std::popcount(subset)) & 1u;
  const unsigned n_parity = static_cast<unsigned>(n) & 1u;

  long double sum_re = 0.0L, sum_im = 0.0L, c_re = 0.0L, c_im = 0.0L;
  for (std::uint64_t k = k_lo; k < k_hi; ++k) {
    const std::size_t t = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint64_t bit = std::uint64_t{1} << t;
    subset ^= bit;
    const double* cre = col_re + t * n;
    const double* cim = col_im + t * n;
    if (subset & bit) {
      for (std::size_t i = 0; i < n; ++i) {
        rs_re[i] += cre[i];
        rs_im[i] += cim[i];
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        rs_re[i] -= cre[i];
        rs_im[i] -= cim[i];
      }
    }
    parity ^= 1u;

    long double pr = 1.0L, pi = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      const long double xr = rs_re[i], xi = rs_im[i];
      const long double nr = pr * xr - pi * xi;
      pi = pr * xi + pi * xr;
      pr = nr;
    }
    if (parity == n_parity) {
      kahan_add(sum_re, c_re, pr);
      kahan_add(sum_im, c_im, pi);
    } else {
      kahan_add(sum_re, c_re, -pr);
      kahan_add(sum_im, c_im, -pi);
    }
  }
  out_re = sum_re;
  out_im = sum_im;
}

}  // namespace

cplx permanent_naive(const ComplexMatrix& a) {
  const std::size_t n = checked_order(a, kNaiveMaxOrder);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  double sum_re = 0.0, sum_im = 0.0, c_re = 0.0, c_im = 0.0;
  do {
    double pr = 1.0, pi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx& x = a(i, perm[i]);
      const double nr = pr * x.real() - pi * x.imag();
      pi = pr * x.imag() + pi * x.real();
      pr = nr;
    }
    kahan_add(sum_re, c_re, pr);
    kahan_add(sum_im, c_im, pi);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return cplx{sum_re, sum_im};
}

cplx permanent_ryser(const ComplexMatrix& a, int threads) {
  const std::size_t n = checked_order(a, kMaxOrder);

  // Column-major copy: the Gray-code step touches one whole column.
  std::vector<double> col_re(n * n), col_im(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      col_re[j * n + i] = a(i, j).real();
      col_im[j * n + i] = a(i, j).imag();
    }
  }

  const std::uint64_t total = (std::uint64_t{1} << n) - 1;  // subsets, sans {}
  // Short blocks keep the incrementally updated row sums honest: each block
  // rebuilds them from scratch, so rounding drift cannot accumulate across
  // more than `chunk` Gray steps. The decomposition depends only on n, and
  // partials are reduced in block order below, so the value never depends
  // on `threads`.
  constexpr std::uint64_t kBlockLen = 64;
  constexpr std::uint64_t kMaxBlocks = std::uint64_t{1} << 20;
  const std::size_t nblocks = static_cast<std::size_t>(
      std::min((total + kBlockLen - 1) / kBlockLen, kMaxBlocks));
  const std::uint64_t chunk = (total + nblocks - 1) / nblocks;

  std::vector<long double> part_re(nblocks, 0.0L), part_im(nblocks, 0.0L);
  run_blocks(nblocks, threads, [&](std::size_t b) {
    const std::uint64_t k_lo = 1 + b * chunk;
    const std::uint64_t k_hi = std::min(k_lo + chunk, total + 1);
    if (k_lo > total) return;
    ryser_block(col_re.data(), col_im.data(), n, k_lo, k_hi, part_re[b],
                part_im[b]);
  });

  long double sum_re = 0.0L, sum_im = 0.0L, c_re = 0.0L, c_im = 0.0L;
  for (std::size_t b = 0; b < nblocks; ++b) {
    kahan_add(sum_re, c_re, part_re[b]);
    kahan_add(sum_im, c_im, part_im[b]);
  }
  return cplx{static_cast<double>(sum_re), static_cast<double>(sum_im)};
}

cplx permanent_glynn(const ComplexMatrix& a) {
  const std::size_t n = checked_order(a, kMaxOrder);
  if (n == 1) return a(0, 0);

  // Row-major copy: a sign flip of delta_r touches one whole row.
  std::vector<double> row_re(n * n), row_im(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      row_re[i * n + j] = a(i, j).real();
      row_im[i * n + j] = a(i, j).imag();
    }
  }

  // delta_0 is pinned to +1; Gray code bit t drives delta_{t+1}. As in the
  // Ryser kernel, the signed sums and the outer accumulation run in extended
  // precision to survive the cancellation in the final sum.
  std::vector<long double> cs_re(n, 0.0L), cs_im(n, 0.0L);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      cs_re[j] += row_re[i * n + j];
      cs_im[j] += row_im[i * n + j];
    }
  }

  long double sum_re = 0.0L, sum_im = 0.0L, c_re = 0.0L, c_im = 0.0L;
  {
    long double pr = 1.0L, pi = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const long double xr = cs_re[j], xi = cs_im[j];
      const long double nr = pr * xr - pi * xi;
      pi = pr * xi + pi * xr;
      pr = nr;
    }
    kahan_add(sum_re, c_re, pr);
    kahan_add(sum_im, c_im, pi);
  }

  std::uint64_t gray = 0;
  long double sign = 1.0L;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  // Rebuilding the signed sums from scratch at a fixed cadence bounds the
  // rounding drift of the +/- 2 row updates to at most kRebuildPeriod steps.
  constexpr std::uint64_t kRebuildPeriod = 64;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const std::size_t t = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint64_t bit = std::uint64_t{1} << t;
    gray ^= bit;
    if ((k & (kRebuildPeriod - 1)) == 0) {
      for (std::size_t j = 0; j < n; ++j) {
        cs_re[j] = row_re[j];
        cs_im[j] = row_im[j];
      }
      for (std::size_t i = 1; i < n; ++i) {
        const double* rr = row_re.data() + i * n;
        const double* ri = row_im.data() + i * n;
        if ((gray >> (i - 1)) & 1) {
          for (std::size_t j = 0; j < n; ++j) {
            cs_re[j] -= rr[j];
            cs_im[j] -= ri[j];
          }
        } else {
          for (std::size_t j = 0; j < n; ++j) {
            cs_re[j] += rr[j];
            cs_im[j] += ri[j];
          }
        }
      }
    } else {
      const std::size_t r = t + 1;
      const double* rre = row_re.data() + r * n;
      const double* rim = row_im.data() + r * n;
      // delta_r moved off +1 (subtract twice the row) or back (add it).
      if (gray & bit) {
        for (std::size_t j = 0; j < n; ++j) {
          cs_re[j] -= 2.0 * rre[j];
          cs_im[j] -= 2.0 * rim[j];
        }
      } else {
        for (std::size_t j = 0; j < n; ++j) {
          cs_re[j] += 2.0 * rre[j];
          cs_im[j] += 2.0 * rim[j];
        }
      }
    }
    sign = -sign;

    long double pr = 1.0L, pi = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      const long double xr = cs_re[j], xi = cs_im[j];
      const long double nr = pr * xr - pi * xi;
      pi = pr * xi + pi * xr;
      pr = nr;
    }
    kahan_add(sum_re, c_re, sign * pr);
    kahan_add(sum_im, c_im, sign * pi);
  }

  // 2^(1-n) is a power of two; the scaling is exact.
  const long double scale = std::ldexp(1.0L, -static_cast<int>(n - 1));
  return cplx{static_cast<double>(sum_re * scale),
              static_cast<double>(sum_im * scale)};
}

PermanentResult permanent(const ComplexMatrix& a, int threads) {
  const std::size_t n = checked_order(a, kMaxOrder);
  if (n <= 4) {
    return {permanent_naive(a), PermanentAlgorithm::kNaive, n};
  }
  return {permanent_ryser(a, threads), PermanentAlgorithm::kRyser, n};
}

}  // namespace rnbs
