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
// Gaussian single-photon model.
//
// Each photon carries a Gaussian temporal envelope of width T whose center
// is itself Gaussian-distributed with standard deviation dtau (random
// arrival time). Averaging the pure envelope over the arrival time gives a
// mixed internal state rho per photon. The single dimensionless knob is
//
//     eta = dtau / (2 T),
//
// the relative arrival-time uncertainty. eta = 0 means perfectly
// indistinguishable (pure) photons; large eta means fully distinguishable
// ones.

#ifndef GLINT_PHOTON_MODEL_HPP
#define GLINT_PHOTON_MODEL_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "glint/errors.hpp"
#include "glint/linalg.hpp"

namespace glint {

// Shared parameters of the N-photon source. All photons have the same
// (T, dtau); the carrier frequencies Omega_k may differ per photon. Results
// depend only on eta and on the products Omega_k * T, so T = 1 is the
// conventional choice of units.
struct GaussianModel {
  int n_photons = 0;
  double pulse_width = 1.0;              // T, > 0
  double arrival_spread = 0.0;           // dtau, >= 0
  std::vector<double> frequencies;       // Omega_k, size n_photons

  // Squared width of the arrival-time-broadened envelope, T^2 + dtau^2.
  // Every kernel and density below is a Gaussian on this scale.
  double envelope_scale_sq() const {
    return pulse_width * pulse_width + arrival_spread * arrival_spread;
  }
};

// Convenience constructor; empty `frequencies` means all zero.
GaussianModel make_model(int n_photons, double pulse_width,
                         double arrival_spread,
                         std::vector<double> frequencies = {});

// Throws ValidationError if the invariants (T > 0, dtau >= 0, finite
// parameters, N >= 1, |frequencies| == N) do not hold.
void check_model(const GaussianModel& model);

double eta(const GaussianModel& model);

// Detection-time tuple (t_1, ..., t_N), same units as T.
using TimeTuple = std::vector<double>;

void check_time_tuple(const GaussianModel& model, const TimeTuple& t);

// Internal split used by the purity closed form:
//   x_plus_sq + x_minus_sq = 1,
//   x_plus_sq - x_minus_sq = sqrt(1+4 eta^2)/(1+2 eta^2).
// x_minus_sq is evaluated cancellation-free (it scales as eta^4 for small
// eta, which a naive subtraction would destroy).
struct PuritySplit {
  double x_plus_sq = 1.0;
  double x_minus_sq = 0.0;
};
PuritySplit purity_split(double eta);

// Tr(rho^n) for one photon:
//
//     Tr(rho^n) = (1 + 2 eta^2)^{-n/2} (X_+^n - X_-^n)^{-1},
//     X_{+-}^2  = (1 +- sqrt(1+4 eta^2)/(1+2 eta^2)) / 2.
//
// n = 1 returns exactly 1 (the closed form also evaluates to 1 there).
// Large n is evaluated as X_+^n (1 - (X_-/X_+)^n) to document the regime
// where X_- -> 0. Throws DomainError for n < 1 or eta < 0.
double purity_order_n(double eta, int n);

// Exponential approximation exp(-n eta^2), accurate to better than 1% for
// eta <= 0.125 over n <= 20 (verified by sweep against purity_order_n).
double purity_approx(double eta, int n);

// Circulant generator whose determinant reproduces the purity:
// Tr(rho^n) = 1/sqrt(circulant_det(...)). For n >= 3 the generator is
// (1+2 eta^2, -eta^2, 0, ..., 0, -eta^2); at n = 2 the two off-diagonal
// entries land on the same matrix element and merge into -2 eta^2, because
// the cyclic quadratic form sum_j (x_j - x_{j+1})^2 doubles its single
// cross term when j runs over only two values.
CirculantSpec purity_circulant(double eta, int n);

// Position-basis kernel <t|rho|t'> of the single-photon mixed state.
//
// Derivation (all Gaussian integrals): with envelope
//     phi_tau(t) = pi^{-1/4} T^{-1/2} exp(-(t-tau)^2/(2T^2))
// and arrival density  p(tau) = exp(-tau^2/dtau^2) / (sqrt(pi) dtau),
// integrating  <t|rho|t'> = Int dtau p(tau) phi_tau(t) phi_tau(t')  gives,
// with  s^2 = T^2 + dtau^2  and  eta = dtau/(2T),
//
//     <t|rho|t'> = (pi s^2)^{-1/2}
//                  exp( -(t^2 + t'^2)/(2 s^2) - eta^2 (t - t')^2 / s^2 ).
//
// Real, symmetric, positive semidefinite, unit trace. Products of this
// kernel along a permutation reproduce the joint N-photon kernel because
// the sum of t_{sigma(k)}^2 over k reorders to the sum of t_k^2.
double rho_kernel(const GaussianModel& model, double t, double t_prime);

// Same kernel for explicitly given (T, dtau); used by the general-parameter
// oracle paths.
double rho_kernel_params(double pulse_width, double arrival_spread, double t,
                         double t_prime);

// Normalized single-photon envelope after arrival-time broadening:
//     chi_k(t) = (pi s^2)^{-1/4} exp(-i Omega_k t - t^2/(2 s^2)).
// |chi_k|^2 is independent of Omega_k and equals rho_kernel(t, t).
// k is a 0-based photon index.
std::complex<double> chi(const GaussianModel& model, int k, double t);

// Joint detection-time density p(t) = prod_k |chi_k(t_k)|^2: every photon
// contributes the same Gaussian marginal of variance s^2/2.
double time_density(const GaussianModel& model, const TimeTuple& t);

// i.i.d. samples of p(t). Sample i draws from an RNG stream derived from
// (seed, i), so the stream is reproducible and independent of chunking or
// thread count.
std::vector<TimeTuple> sample_times(const GaussianModel& model,
                                    std::uint64_t seed, int count);

}  // namespace glint

#endif  // GLINT_PHOTON_MODEL_HPP
