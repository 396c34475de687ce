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

#include "glint/metrics.hpp"

#include <cmath>
#include <vector>

#include "glint/detail/summation.hpp"
#include "glint/photon_model.hpp"

namespace glint {

namespace {

void check_tvd_sizes(const Experiment& exp) {
  if (exp.n_photons() > 4 || exp.n_ports() > 8) {
    throw SizeError(
        "distance enumeration limited to N <= 4 and M <= 8 (M^N tuples)");
  }
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

double tvd_a(const Experiment& exp) {
  check_tvd_sizes(exp);
  const TupleDistributionsA dist = distributions_a(exp);
  std::vector<double> gaps(dist.mixed.size());
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    gaps[i] = std::fabs(dist.mixed[i] - dist.ideal[i]);
  }
  return 0.5 * detail::pairwise_sum(gaps);
}

MonteCarloEstimate tvd_b(const Experiment& exp, std::uint64_t seed,
                         int samples) {
  check_tvd_sizes(exp);
  if (samples < 1000) {
    throw DomainError("tvd_b needs at least 1000 samples");
  }
  const std::vector<TimeTuple> times = sample_times(exp.model, seed, samples);
  std::vector<double> values(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double density = time_density(exp.model, times[i]);
    if (density <= 0.0) {
      throw NumericRangeError("proposal density underflows at a sample");
    }
    const TupleDistributionsB dist = distributions_b(exp, times[i]);
    std::vector<double> gaps(dist.mixed.size());
    for (std::size_t r = 0; r < gaps.size(); ++r) {
      gaps[r] = std::fabs(dist.mixed[r] - dist.ideal[r]);
    }
    values[i] = 0.5 * detail::pairwise_sum(gaps) / density;
  }
  const detail::MeanAndError stats = detail::mean_and_std_error(values);
  return MonteCarloEstimate{stats.mean, stats.std_error, samples};
}

double deviation_bound(int n_photons, double purity) {
  if (n_photons < 1) {
    throw DomainError("deviation bound needs at least one photon");
  }
  if (!(purity > 0.0) || purity > 1.0 || !std::isfinite(purity)) {
    throw DomainError("purity must lie in (0, 1]");
  }
  // d_s ~ P^{(N-1)/2} + sum_{n=2}^{N} (1-sqrt(P))^n P^{(N-n)/2} / n!,
  // written so each term stays finite as P -> 0.
  const double sp = std::sqrt(purity);
  double ds = std::pow(sp, n_photons - 1);
  double fact = 1.0;
  for (int n = 2; n <= n_photons; ++n) {
    fact *= n;
    ds += std::pow(1.0 - sp, n) * std::pow(sp, n_photons - n) / fact;
  }
  return 1.0 - ds;
}

double required_purity(int n_photons, double target_deviation) {
  if (n_photons < 1) {
    throw DomainError("required purity needs at least one photon");
  }
  if (!(target_deviation > 0.0) || !(target_deviation < 1.0)) {
    throw DomainError("target deviation must lie in (0, 1)");
  }
  // The bound decreases from 1 - 1/N! (fully distinguishable limit) to 0
  // (pure photons); targets above that ceiling have no solution. A target
  // at the ceiling itself converges to vanishing purity.
  const double ceiling = 1.0 - 1.0 / factorial(n_photons);
  if (target_deviation > ceiling) {
    throw DomainError(
        "target deviation exceeds the fully distinguishable ceiling "
        "1 - 1/N! and cannot be met by any purity");
  }
  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (deviation_bound(n_photons, mid) > target_deviation) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double eta_for_purity(double purity) {
  if (!(purity > 0.0) || purity > 1.0) {
    throw DomainError("purity must lie in (0, 1]");
  }
  return std::sqrt(-std::log(purity) / 2.0);
}

DistSummary compare_setups(const Experiment& exp, std::uint64_t seed,
                           int samples, DsRoute route) {
  DistSummary s;
  const double e = eta(exp.model);
  s.purity = purity_order_n(e, 2);
  s.ds_route = route;
  if (route == DsRoute::Exact) {
    s.ds = ds_exact(DistFunctionA(exp.model, JMode::Exact));
  } else {
    s.ds = ds_closed_form(exp.n_photons(), e);
  }
  s.bound = 1.0 - s.ds;
  s.d_a = tvd_a(exp);
  s.d_b = tvd_b(exp, seed, samples);
  s.a_within_bound = s.d_a <= s.bound + 1e-9;
  s.b_within_bound = s.d_b.estimate <= s.bound + 3.0 * s.d_b.std_error;
  return s;
}

}  // namespace glint
