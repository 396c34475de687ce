// Copyright 2026 The glint authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLINT_LINALG_HPP
#define GLINT_LINALG_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "glint/errors.hpp"

namespace glint {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Throws DimensionError on empty matrices and ValidationError on NaN/Inf
// entries. Called at every public entry point that accepts raw matrices.
void check_matrix(const ComplexMatrix& m);

// Max-norm of U†U - I. Cheap enough to run on every construction.
double unitarity_residual(const ComplexMatrix& m);

// Square matrix validated to satisfy ‖U†U - I‖_max <= residual_tolerance().
// Inputs failing the check are rejected, never repaired.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix m);

  const ComplexMatrix& mat() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  double residual() const { return residual_; }

  static constexpr double residual_tolerance() { return 1e-10; }

 private:
  ComplexMatrix m_;
  double residual_;
};

enum class PermanentAlgo {
  Glynn,  // default: slightly better-conditioned sign pattern on complex input
  Ryser,  // kept as an independent fast path for cross-checking
};

// Permanent of a square complex matrix, O(2^N * N) with Gray-code updates.
// Throws DimensionError for non-square input and SizeError for N > 30.
Complex permanent(const ComplexMatrix& m,
                  PermanentAlgo algo = PermanentAlgo::Glynn);

// Reference permanent: direct sum over all N! permutations. N <= 9.
Complex permanent_naive(const ComplexMatrix& m);

// Haar-distributed random unitary of the given dimension: QR factorization
// of a complex Gaussian matrix, with the R diagonal's phases folded into Q
// so the distribution is exactly Haar rather than QR-gauge-biased.
// Deterministic for a fixed (dim, seed) pair.
UnitaryMatrix haar_unitary(int dim, std::uint64_t seed);

// Balanced two-mode coupler in the real convention
//     1/sqrt(2) * [[1,  1],
//                  [1, -1]]
// i.e. the reflected amplitude off the second input carries the minus sign.
UnitaryMatrix beam_splitter_50_50();

// First row of a circulant matrix. Row r of the full matrix is this row
// rotated right r times, so entry (r, c) = a[(c - r) mod n].
struct CirculantSpec {
  int n = 0;               // dimension, >= 1
  std::vector<double> a;   // generator entries, size n
};

// Determinant of a circulant matrix as the product of its generator
// polynomial over the n-th roots of unity. The result of a real generator
// is real; the residual imaginary part (roundoff, <= 1e-10) is discarded.
double circulant_det(const CirculantSpec& spec);

}  // namespace glint

#endif  // GLINT_LINALG_HPP
