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
// Distinguishability weights of permutation terms in multiphoton
// interference, for two detection setups:
//
//  (a) detectors integrate over arrival time. Each permutation sigma is
//      weighted by J(sigma), a product of single-photon purities over the
//      cycles of sigma.
//
//  (b) detectors resolve arrival times t. Each sigma is weighted by the
//      joint Gaussian kernel Jb(t; sigma), or after factoring out the
//      detection density p(t), by the proper weight Jt(t; sigma) in (0, 1].
//
// The scalar summary in both setups is the symmetrized average d_s, the
// probability that the N-photon internal state passes a symmetry test. It
// admits three routes: an exact N! group sum, a closed form under the
// exponential purity approximation, and a Monte Carlo average of the
// time-resolved weight. All three agree within their stated tolerances.

#ifndef GLINT_DISTINGUISHABILITY_HPP
#define GLINT_DISTINGUISHABILITY_HPP

#include <cstdint>
#include <vector>

#include "glint/errors.hpp"
#include "glint/permgroup.hpp"
#include "glint/photon_model.hpp"

namespace glint {

enum class JMode {
  Exact,   // cycle product of exact purities
  Approx,  // exponential approximation exp(-eta^2 (N - fixed_points))
};

// Time-unresolved weight J(sigma). Purities are cached per cycle length at
// construction; J(identity) = 1 in both modes.
class DistFunctionA {
 public:
  explicit DistFunctionA(GaussianModel model, JMode mode = JMode::Exact);

  const GaussianModel& model() const { return model_; }
  JMode mode() const { return mode_; }
  double eta() const { return eta_; }
  int n_photons() const { return model_.n_photons; }

  // Cached Tr(rho^n), n = 1..N.
  double purity(int n) const;

 private:
  GaussianModel model_;
  JMode mode_;
  double eta_;
  std::vector<double> purities_;
};

double j_a(const DistFunctionA& df, const Permutation& sigma);
double j_a(const DistFunctionA& df, const CycleType& ct);

// Time-resolved weights.
class DistFunctionB {
 public:
  explicit DistFunctionB(GaussianModel model);

  const GaussianModel& model() const { return model_; }
  double eta() const { return eta_; }
  int n_photons() const { return model_.n_photons; }

 private:
  GaussianModel model_;
  double eta_;
};

// Joint Gaussian kernel of detection times threaded along sigma:
//   Jb(t; sigma) = (pi s^2)^{-N/2}
//                  exp(-sum_k t_k^2 / s^2 - eta^2 sum_k (t_k - t_{sigma(k)})^2 / s^2)
// with s^2 = T^2 + dtau^2. Equals prod_k rho_kernel(t_k, t_{sigma(k)}), and
// reduces to time_density(t) at sigma = identity.
double j_b_raw(const DistFunctionB& df, const TimeTuple& t,
               const Permutation& sigma);

// Proper weight Jt(t; sigma) = Jb(t; sigma) / p(t). The division cancels
// the envelope analytically, leaving
//   exp(-eta^2 sum_k (t_k - t_{sigma(k)})^2 / s^2) in (0, 1],
// which is how it is evaluated. Throws NumericRangeError if p(t)
// underflows to zero (the quotient form would be ill-defined there).
double j_b_proper(const DistFunctionB& df, const TimeTuple& t,
                  const Permutation& sigma);

// Group average lambda(t) = (1/N!) sum_sigma Jt(t; sigma), the probability
// of passing the symmetry test conditional on detection times t. Always in
// (0, 1]. N <= 10.
double lambda_t(const DistFunctionB& df, const TimeTuple& t);

// d_s = (1/N!) sum_sigma J(sigma) over the full group, with exact purities.
// N <= 10; larger N is served by ds_closed_form.
double ds_exact(const DistFunctionA& df);

// Closed form under the exponential purity approximation:
//   d_s ~= exp(-eta^2 N) sum_{k=0}^{N} (e^{eta^2} - 1)^k / k!.
// The sum is the fixed-point generating average of zeta^{C_1} at
// zeta = e^{eta^2}, so this equals the N! group sum of the approximate
// weights exactly, at any N, in O(N) time.
double ds_closed_form(int n_photons, double eta);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  int samples = 0;
};

// d_s as the average of lambda(t) over t ~ p(t). Unbiased: integrating
// lambda against p recovers the time-unresolved d_s. Samples use derived
// per-index RNG streams and a fixed-order pairwise-summed mean, so the
// result is independent of chunking. N <= 8, samples >= 100.
MonteCarloEstimate ds_monte_carlo(const DistFunctionB& df, std::uint64_t seed,
                                  int samples);

}  // namespace glint

#endif  // GLINT_DISTINGUISHABILITY_HPP
