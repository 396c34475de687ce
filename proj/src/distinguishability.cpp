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

#include "glint/distinguishability.hpp"

#include <cmath>
#include <numbers>

#include "glint/detail/summation.hpp"

namespace glint {

namespace {

constexpr int kMaxGroupN = 10;

double sigma_displacement_sq(const TimeTuple& t, const Permutation& sigma) {
  double sum = 0.0;
  const int n = sigma.size();
  for (int k = 0; k < n; ++k) {
    const double d = t[static_cast<std::size_t>(k)] -
                     t[static_cast<std::size_t>(sigma(k))];
    sum += d * d;
  }
  return sum;
}

}  // namespace

DistFunctionA::DistFunctionA(GaussianModel model, JMode mode)
    : model_(std::move(model)), mode_(mode) {
  check_model(model_);
  eta_ = glint::eta(model_);
  purities_.assign(static_cast<std::size_t>(model_.n_photons) + 1, 1.0);
  for (int n = 2; n <= model_.n_photons; ++n) {
    purities_[static_cast<std::size_t>(n)] = purity_order_n(eta_, n);
  }
}

double DistFunctionA::purity(int n) const {
  if (n < 1 || n > model_.n_photons) {
    throw DomainError("purity order outside 1..N");
  }
  return purities_[static_cast<std::size_t>(n)];
}

double j_a(const DistFunctionA& df, const CycleType& ct) {
  const int n = ct.n_elements();
  if (n != df.n_photons()) {
    throw DimensionError("cycle type size must equal the photon count");
  }
  if (df.mode() == JMode::Approx) {
    const double e2 = df.eta() * df.eta();
    return std::exp(-e2 * (n - ct.fixed_points()));
  }
  double j = 1.0;
  for (int len = 2; len <= n; ++len) {
    const int c = ct.cycles_of_length(len);
    for (int i = 0; i < c; ++i) j *= df.purity(len);
  }
  return j;
}

double j_a(const DistFunctionA& df, const Permutation& sigma) {
  return j_a(df, cycle_type(sigma));
}

DistFunctionB::DistFunctionB(GaussianModel model) : model_(std::move(model)) {
  check_model(model_);
  eta_ = glint::eta(model_);
}

double j_b_raw(const DistFunctionB& df, const TimeTuple& t,
               const Permutation& sigma) {
  const GaussianModel& m = df.model();
  check_time_tuple(m, t);
  if (sigma.size() != m.n_photons) {
    throw DimensionError("permutation size must equal the photon count");
  }
  const double s2 = m.envelope_scale_sq();
  double t_sq = 0.0;
  for (double tk : t) t_sq += tk * tk;
  const double expo = -t_sq / s2 -
                      df.eta() * df.eta() * sigma_displacement_sq(t, sigma) / s2;
  const double norm =
      std::pow(std::numbers::pi * s2, -0.5 * m.n_photons);
  return norm * std::exp(expo);
}

double j_b_proper(const DistFunctionB& df, const TimeTuple& t,
                  const Permutation& sigma) {
  const GaussianModel& m = df.model();
  check_time_tuple(m, t);
  if (sigma.size() != m.n_photons) {
    throw DimensionError("permutation size must equal the photon count");
  }
  if (time_density(m, t) == 0.0) {
    throw NumericRangeError(
        "detection density underflows at these times; the proper weight "
        "is defined as a quotient and loses meaning here");
  }
  const double s2 = m.envelope_scale_sq();
  return std::exp(-df.eta() * df.eta() * sigma_displacement_sq(t, sigma) / s2);
}

double lambda_t(const DistFunctionB& df, const TimeTuple& t) {
  const GaussianModel& m = df.model();
  check_time_tuple(m, t);
  const int n = m.n_photons;
  if (n > kMaxGroupN) {
    throw SizeError("lambda_t limited to N <= 10 (N! group sum)");
  }
  if (time_density(m, t) == 0.0) {
    throw NumericRangeError("detection density underflows at these times");
  }
  const double e2 = df.eta() * df.eta();
  const double s2 = m.envelope_scale_sq();
  double sum = 0.0;
  double count = 0.0;
  iterate_group(n, [&](const Permutation& sigma) {
    sum += std::exp(-e2 * sigma_displacement_sq(t, sigma) / s2);
    count += 1.0;
  });
  return sum / count;
}

double ds_exact(const DistFunctionA& df) {
  const int n = df.n_photons();
  if (n > kMaxGroupN) {
    throw SizeError(
        "ds_exact limited to N <= 10 (N! group sum); use ds_closed_form");
  }
  double sum = 0.0;
  double count = 0.0;
  iterate_group(n, [&](const Permutation& sigma) {
    sum += j_a(df, sigma);
    count += 1.0;
  });
  return sum / count;
}

double ds_closed_form(int n_photons, double eta) {
  if (n_photons < 1) {
    throw DomainError("ds_closed_form requires N >= 1");
  }
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw DomainError("ds_closed_form requires finite eta >= 0");
  }
  const double e2 = eta * eta;
  return std::exp(-e2 * n_photons) * z_fixed_point_sum(n_photons, std::exp(e2));
}

MonteCarloEstimate ds_monte_carlo(const DistFunctionB& df, std::uint64_t seed,
                                  int samples) {
  const int n = df.n_photons();
  if (n > 8) {
    throw SizeError("ds_monte_carlo limited to N <= 8");
  }
  if (samples < 100) {
    throw DomainError("ds_monte_carlo needs at least 100 samples");
  }
  const auto times = sample_times(df.model(), seed, samples);
  std::vector<double> values(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    values[i] = lambda_t(df, times[i]);
  }
  const auto stats = detail::mean_and_std_error(values);
  return {stats.mean, stats.std_error, samples};
}

}  // namespace glint
