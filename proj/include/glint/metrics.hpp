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

#ifndef GLINT_METRICS_HPP
#define GLINT_METRICS_HPP

#include <cstdint>

#include "glint/distinguishability.hpp"
#include "glint/interference.hpp"

// Total-variation distances between the partially distinguishable output
// distributions and their indistinguishable ideals, the 1 - d_s bound that
// caps both, and the purity needed to keep the deviation below a target.

namespace glint {

// Which average-distinguishability evaluation produced a reported bound.
enum class DsRoute { Exact, ClosedForm };

struct DistSummary {
  double d_a = 0.0;          // exact total-variation distance, setup a
  MonteCarloEstimate d_b;    // sampled total-variation distance, setup b
  double ds = 0.0;           // average group-weight (indistinguishability)
  double bound = 0.0;        // 1 - ds, caps both distances
  double purity = 0.0;       // second-order purity of one photon
  DsRoute ds_route = DsRoute::Exact;
  bool a_within_bound = false;  // d_a <= bound + 1e-9
  bool b_within_bound = false;  // d_b <= bound + 3 std errors
};

// Exact total-variation distance between the mixed and ideal ordered-tuple
// distributions of setup a, enumerated over all M^N tuples. N <= 4, M <= 8.
double tvd_a(const Experiment& exp);

// Monte-Carlo total-variation distance for setup b, importance-sampled
// with the exact detection-time density as proposal (the per-sample
// integrand is bounded by one). N <= 4, M <= 8, samples >= 1000.
MonteCarloEstimate tvd_b(const Experiment& exp, std::uint64_t seed,
                         int samples);

// Upper bound 1 - d_s on both distances, written in terms of the
// second-order purity P of a single photon. Decreasing in P, increasing in
// the photon count.
double deviation_bound(int n_photons, double purity);

// Smallest single-photon purity that keeps deviation_bound at or below the
// target, solved by bisection to 1e-9. Targets at or above the fully
// distinguishable ceiling 1 - 1/N! are unreachable.
double required_purity(int n_photons, double target_deviation);

// Mismatch parameter whose exponential purity approximation e^{-2 eta^2}
// equals the given purity.
double eta_for_purity(double purity);

// Full comparison of one experiment: both distances, the bound, and the
// pass/fail of both bound inequalities.
DistSummary compare_setups(const Experiment& exp, std::uint64_t seed,
                           int samples, DsRoute route = DsRoute::Exact);

}  // namespace glint

#endif  // GLINT_METRICS_HPP
