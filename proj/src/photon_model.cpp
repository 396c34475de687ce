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

#include "glint/photon_model.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "glint/detail/rng.hpp"

namespace glint {

GaussianModel make_model(int n_photons, double pulse_width,
                         double arrival_spread,
                         std::vector<double> frequencies) {
  GaussianModel m;
  m.n_photons = n_photons;
  m.pulse_width = pulse_width;
  m.arrival_spread = arrival_spread;
  if (frequencies.empty() && n_photons > 0) {
    frequencies.assign(static_cast<std::size_t>(n_photons), 0.0);
  }
  m.frequencies = std::move(frequencies);
  check_model(m);
  return m;
}

void check_model(const GaussianModel& model) {
  if (model.n_photons < 1) {
    throw ValidationError("model needs at least one photon");
  }
  if (!(model.pulse_width > 0.0) || !std::isfinite(model.pulse_width)) {
    throw ValidationError("pulse width must be positive and finite");
  }
  if (!(model.arrival_spread >= 0.0) || !std::isfinite(model.arrival_spread)) {
    throw ValidationError("arrival spread must be non-negative and finite");
  }
  if (static_cast<int>(model.frequencies.size()) != model.n_photons) {
    throw ValidationError("need one carrier frequency per photon");
  }
  for (double w : model.frequencies) {
    if (!std::isfinite(w)) {
      throw ValidationError("carrier frequencies must be finite");
    }
  }
}

double eta(const GaussianModel& model) {
  check_model(model);
  return model.arrival_spread / (2.0 * model.pulse_width);
}

void check_time_tuple(const GaussianModel& model, const TimeTuple& t) {
  if (static_cast<int>(t.size()) != model.n_photons) {
    throw DimensionError("time tuple length must equal the photon count");
  }
  for (double x : t) {
    if (!std::isfinite(x)) {
      throw ValidationError("time tuple entries must be finite");
    }
  }
}

PuritySplit purity_split(double eta) {
  const double e2 = eta * eta;
  const double d = 1.0 + 2.0 * e2;
  const double r = std::sqrt(1.0 + 4.0 * e2);
  PuritySplit s;
  s.x_plus_sq = 0.5 * (1.0 + r / d);
  // x_minus_sq = (1 - r/d)/2 rewritten to avoid the subtraction:
  // d^2 - r^2 = 4 eta^4, so (d - r)/(2d) = 2 eta^4 / (d (d + r)).
  s.x_minus_sq = 2.0 * e2 * e2 / (d * (d + r));
  return s;
}

double purity_order_n(double eta, int n) {
  if (n < 1) {
    throw DomainError("purity is defined for n >= 1");
  }
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw DomainError("purity requires finite eta >= 0");
  }
  if (n == 1 || eta == 0.0) {
    return 1.0;
  }
  const double d = 1.0 + 2.0 * eta * eta;
  const PuritySplit s = purity_split(eta);
  // (1+2 eta^2)^{-n/2} X_+^{-n} = (d X_+^2)^{-n/2}; d X_+^2 = (d + r)/2.
  const double lead = std::pow(d * s.x_plus_sq, -0.5 * n);
  const double ratio = std::sqrt(s.x_minus_sq / s.x_plus_sq);
  return lead / (1.0 - std::pow(ratio, n));
}

double purity_approx(double eta, int n) {
  if (n < 1) {
    throw DomainError("purity is defined for n >= 1");
  }
  return std::exp(-static_cast<double>(n) * eta * eta);
}

CirculantSpec purity_circulant(double eta, int n) {
  if (n < 2) {
    throw DomainError("purity circulant is defined for n >= 2");
  }
  const double e2 = eta * eta;
  CirculantSpec spec;
  spec.n = n;
  spec.a.assign(static_cast<std::size_t>(n), 0.0);
  spec.a[0] = 1.0 + 2.0 * e2;
  if (n == 2) {
    spec.a[1] = -2.0 * e2;
  } else {
    spec.a[1] = -e2;
    spec.a[static_cast<std::size_t>(n) - 1] = -e2;
  }
  return spec;
}

double rho_kernel_params(double pulse_width, double arrival_spread, double t,
                         double t_prime) {
  const double s2 = pulse_width * pulse_width + arrival_spread * arrival_spread;
  const double et = arrival_spread / (2.0 * pulse_width);
  const double diff = t - t_prime;
  const double expo =
      -(t * t + t_prime * t_prime) / (2.0 * s2) - et * et * diff * diff / s2;
  return std::exp(expo) / std::sqrt(std::numbers::pi * s2);
}

double rho_kernel(const GaussianModel& model, double t, double t_prime) {
  check_model(model);
  return rho_kernel_params(model.pulse_width, model.arrival_spread, t, t_prime);
}

std::complex<double> chi(const GaussianModel& model, int k, double t) {
  check_model(model);
  if (k < 0 || k >= model.n_photons) {
    throw DomainError("photon index out of range");
  }
  const double s2 = model.envelope_scale_sq();
  const double amp = std::pow(std::numbers::pi * s2, -0.25) *
                     std::exp(-t * t / (2.0 * s2));
  const double phase = -model.frequencies[static_cast<std::size_t>(k)] * t;
  return std::polar(amp, phase);
}

double time_density(const GaussianModel& model, const TimeTuple& t) {
  check_model(model);
  check_time_tuple(model, t);
  const double s2 = model.envelope_scale_sq();
  const double norm = 1.0 / std::sqrt(std::numbers::pi * s2);
  double density = 1.0;
  for (double tk : t) {
    density *= norm * std::exp(-tk * tk / s2);
  }
  return density;
}

std::vector<TimeTuple> sample_times(const GaussianModel& model,
                                    std::uint64_t seed, int count) {
  check_model(model);
  if (count < 1) {
    throw DomainError("sample count must be >= 1");
  }
  const double sigma = std::sqrt(0.5 * model.envelope_scale_sq());
  std::vector<TimeTuple> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 engine(
        detail::derive_stream(seed, static_cast<std::uint64_t>(i)));
    std::normal_distribution<double> normal(0.0, sigma);
    TimeTuple t(static_cast<std::size_t>(model.n_photons));
    for (int k = 0; k < model.n_photons; ++k) {
      t[static_cast<std::size_t>(k)] = normal(engine);
    }
    out[static_cast<std::size_t>(i)] = std::move(t);
  }
  return out;
}

}  // namespace glint
