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

#include "glint/oracle.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace glint {

TimeGrid TimeGrid::default_for(const GaussianModel& model, int points) {
  const double s = std::sqrt(model.envelope_scale_sq());
  return TimeGrid{-8.0 * s, 8.0 * s, points};
}

void check_grid(const TimeGrid& grid) {
  if (!(grid.t_max > grid.t_min)) {
    throw ValidationError("grid needs t_max > t_min");
  }
  if (grid.points < 16) {
    throw ValidationError("grid needs at least 16 points");
  }
}

namespace {

// The diagonal of the kernel is a Gaussian of variance s^2/2; demand the
// grid cover +-3 of its standard deviations (a span of six).
void check_grid_span(const TimeGrid& grid, double scale_sq) {
  const double sigma = std::sqrt(0.5 * scale_sq);
  if (grid.t_max < 3.0 * sigma || grid.t_min > -3.0 * sigma) {
    throw ValidationError(
        "grid span covers less than six kernel standard deviations; "
        "widen the grid");
  }
}

Eigen::MatrixXd kernel_matrix(double pulse_width, double arrival_spread,
                              const TimeGrid& grid) {
  const int p = grid.points;
  const double h = grid.step();
  Eigen::MatrixXd k(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = i; j < p; ++j) {
      const double v =
          rho_kernel_params(pulse_width, arrival_spread, grid.node(i),
                            grid.node(j)) *
          h;
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

}  // namespace

double grid_purity(const GaussianModel& model, int n, const TimeGrid& grid) {
  check_model(model);
  check_grid(grid);
  if (n < 1) {
    throw DomainError("purity order must be >= 1");
  }
  check_grid_span(grid, model.envelope_scale_sq());
  const Eigen::MatrixXd k =
      kernel_matrix(model.pulse_width, model.arrival_spread, grid);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k,
                                                    Eigen::EigenvaluesOnly);
  double trace = 0.0;
  for (int i = 0; i < k.rows(); ++i) {
    trace += std::pow(es.eigenvalues()[i], n);
  }
  return trace;
}

GaussHermiteRule gauss_hermite(int order) {
  if (order < 1 || order > 64) {
    throw DomainError("Gauss-Hermite order must be in 1..64");
  }
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double b = std::sqrt(0.5 * k);
    jacobi(k - 1, k) = b;
    jacobi(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  GaussHermiteRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int i = 0; i < order; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = sqrt_pi * v0 * v0;
  }
  return rule;
}

double quad_j_integral(const GaussianModel& model, const Permutation& sigma,
                       int order) {
  check_model(model);
  const int n = model.n_photons;
  if (sigma.size() != n) {
    throw DimensionError("permutation size must equal the photon count");
  }
  if (n > 3) {
    throw SizeError("tensor quadrature limited to N <= 3");
  }
  const GaussHermiteRule rule = gauss_hermite(order);
  const double s = std::sqrt(model.envelope_scale_sq());
  // Divide the e^{-x^2} weight out of the integrand: c_i = w_i e^{x_i^2}
  // stays O(1), and j_b_raw supplies the Gaussian decay itself.
  std::vector<double> c(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    c[i] = rule.weights[i] * std::exp(rule.nodes[i] * rule.nodes[i]);
  }
  const DistFunctionB df(model);
  TimeTuple t(static_cast<std::size_t>(n));
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  double sum = 0.0;
  while (true) {
    double factor = 1.0;
    for (int k = 0; k < n; ++k) {
      const int i = idx[static_cast<std::size_t>(k)];
      t[static_cast<std::size_t>(k)] = s * rule.nodes[static_cast<std::size_t>(i)];
      factor *= c[static_cast<std::size_t>(i)];
    }
    sum += factor * j_b_raw(df, t, sigma);
    int k = 0;
    while (k < n) {
      if (++idx[static_cast<std::size_t>(k)] < order) break;
      idx[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return sum * std::pow(s, n);
}

double grid_j_a_general(const std::vector<PhotonShape>& photons,
                        const Permutation& sigma, const TimeGrid& grid) {
  const int n = static_cast<int>(photons.size());
  if (n < 1 || sigma.size() != n) {
    throw DimensionError("need one photon shape per permuted element");
  }
  if (n > 3) {
    throw SizeError("general-parameter grid oracle limited to N <= 3");
  }
  check_grid(grid);
  for (const PhotonShape& ph : photons) {
    if (!(ph.pulse_width > 0.0) || !(ph.arrival_spread >= 0.0)) {
      throw ValidationError("photon shapes need T > 0 and dtau >= 0");
    }
    check_grid_span(grid, ph.pulse_width * ph.pulse_width +
                              ph.arrival_spread * ph.arrival_spread);
  }

  std::vector<Eigen::MatrixXd> kernels;
  kernels.reserve(photons.size());
  for (const PhotonShape& ph : photons) {
    kernels.push_back(kernel_matrix(ph.pulse_width, ph.arrival_spread, grid));
  }

  // Walk each disjoint cycle of sigma and take the trace of the kernel
  // chain along it. Fixed points contribute Tr(K) itself (unit trace up to
  // discretization error).
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  double result = 1.0;
  for (int start = 0; start < n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    Eigen::MatrixXd chain =
        kernels[static_cast<std::size_t>(start)];
    visited[static_cast<std::size_t>(start)] = 1;
    for (int k = sigma(start); k != start; k = sigma(k)) {
      visited[static_cast<std::size_t>(k)] = 1;
      chain = chain * kernels[static_cast<std::size_t>(k)];
    }
    result *= chain.trace();
  }
  return result;
}

}  // namespace glint
