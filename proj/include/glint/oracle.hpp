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
//
// Independent brute-force verifiers. Everything here deliberately avoids
// the closed forms under test: purities come from discretized kernel
// matrices, integrals from tensor quadrature. Slow and simple on purpose.

#ifndef GLINT_ORACLE_HPP
#define GLINT_ORACLE_HPP

#include <vector>

#include "glint/distinguishability.hpp"
#include "glint/errors.hpp"
#include "glint/permgroup.hpp"
#include "glint/photon_model.hpp"

namespace glint {

// Uniform discretization of the time axis, endpoints included.
struct TimeGrid {
  double t_min = 0.0;
  double t_max = 0.0;
  int points = 0;

  double step() const { return (t_max - t_min) / (points - 1); }
  double node(int i) const { return t_min + i * step(); }

  // [-8 s, +8 s] with 400 points, s^2 = T^2 + dtau^2. Kernel mass beyond
  // eight envelope widths is below 1e-14.
  static TimeGrid default_for(const GaussianModel& model, int points = 400);
};

// Throws ValidationError unless t_max > t_min and points >= 16.
void check_grid(const TimeGrid& grid);

// Tr(rho^n) from the discretized kernel K_{ij} = rho_kernel(t_i, t_j)*step
// (trace of the n-th matrix power via its eigenvalues). Requires the grid
// to cover at least +-3 kernel standard deviations, i.e. a span of six.
double grid_purity(const GaussianModel& model, int n, const TimeGrid& grid);

// Integral of j_b_raw(t; sigma) over R^N by tensor Gauss-Hermite
// quadrature, N <= 3, order <= 64. Nodes are rescaled by the envelope
// width so the Gaussian bulk of the integrand is absorbed into the
// quadrature weight; only the smooth permutation factor remains to
// converge. Equals j_a(sigma) with exact purities.
double quad_j_integral(const GaussianModel& model, const Permutation& sigma,
                       int order = 48);

// Per-photon envelope parameters for the general-parameter oracle.
struct PhotonShape {
  double pulse_width = 1.0;
  double arrival_spread = 0.0;
};

// Weight J(sigma) for photons with distinct (T_k, dtau_k): the trace
// factorizes over the disjoint cycles of sigma into chain products of the
// per-photon kernel matrices, Tr(K_{i1} K_{i2} ... K_{im}). N <= 3.
double grid_j_a_general(const std::vector<PhotonShape>& photons,
                        const Permutation& sigma, const TimeGrid& grid);

// Gauss-Hermite rule for the weight exp(-x^2): nodes and weights via the
// symmetric tridiagonal Jacobi matrix (Golub-Welsch). Weights sum to
// sqrt(pi).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussHermiteRule gauss_hermite(int order);

}  // namespace glint

#endif  // GLINT_ORACLE_HPP
