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

#include "glint/interference.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "glint/permgroup.hpp"

namespace glint {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Probabilities assembled from signed permanent sums can dip a hair below
// zero; anything past the roundoff band signals a real defect.
double clamp_probability(double p) {
  if (p >= 0.0) return p;
  if (p < -1e-9) {
    throw NumericRangeError("probability came out negative beyond roundoff");
  }
  return 0.0;
}

// Lexicographic rank of a permutation, consistent with all_permutations.
std::int64_t lehmer_rank(const Permutation& p) {
  const int n = p.size();
  std::int64_t rank = 0;
  std::int64_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  for (int k = 0; k < n; ++k) {
    fact /= (n - k);
    int smaller_later = 0;
    for (int j = k + 1; j < n; ++j) {
      if (p(j) < p(k)) ++smaller_later;
    }
    rank += smaller_later * fact;
  }
  return rank;
}

// Effective single-photon amplitudes for time-resolved detection: photon j
// reaching port c at the slot-k detection time.
Eigen::MatrixXcd effective_columns(const Experiment& exp, const TimeTuple& t,
                                   int slot) {
  const int n = exp.n_photons();
  const int m = exp.n_ports();
  const Eigen::MatrixXcd& u = exp.unitary.mat();
  Eigen::MatrixXcd e(n, m);
  for (int j = 0; j < n; ++j) {
    const Complex amp = chi(exp.model, j, t[static_cast<std::size_t>(slot)]);
    for (int c = 0; c < m; ++c) {
      e(j, c) = u(j, c) * amp;
    }
  }
  return e;
}

}  // namespace

int Occupation::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

Experiment make_experiment(GaussianModel model, UnitaryMatrix unitary) {
  check_model(model);
  if (model.n_photons > static_cast<int>(unitary.dim())) {
    throw DimensionError("need at least as many ports as photons");
  }
  return Experiment{std::move(model), std::move(unitary)};
}

void check_output_tuple(const Experiment& exp, const OutputTuple& l) {
  if (l.size() != exp.n_photons()) {
    throw DimensionError("output tuple length must equal the photon count");
  }
  for (int port : l.ports) {
    if (port < 1 || port > exp.n_ports()) {
      throw DomainError("output port out of range");
    }
  }
}

void check_occupation(const Experiment& exp, const Occupation& m) {
  if (m.n_ports() != exp.n_ports()) {
    throw DimensionError("occupation needs one count per port");
  }
  for (int c : m.counts) {
    if (c < 0) throw ValidationError("occupation counts must be non-negative");
  }
  if (m.total() != exp.n_photons()) {
    throw ValidationError("occupation must sum to the photon count");
  }
}

Occupation occupation_of(const OutputTuple& l, int n_ports) {
  Occupation m;
  m.counts.assign(static_cast<std::size_t>(n_ports), 0);
  for (int port : l.ports) {
    if (port < 1 || port > n_ports) {
      throw DomainError("output port out of range");
    }
    ++m.counts[static_cast<std::size_t>(port - 1)];
  }
  return m;
}

OutputTuple ascending_tuple_of(const Occupation& m) {
  OutputTuple l;
  for (int port = 1; port <= m.n_ports(); ++port) {
    const int c = m.counts[static_cast<std::size_t>(port - 1)];
    if (c < 0) throw ValidationError("occupation counts must be non-negative");
    for (int i = 0; i < c; ++i) l.ports.push_back(port);
  }
  if (l.ports.empty()) {
    throw ValidationError("occupation holds no photons");
  }
  return l;
}

std::int64_t rank_of_output_tuple(const OutputTuple& l, int n_ports) {
  std::int64_t rank = 0;
  for (int port : l.ports) {
    if (port < 1 || port > n_ports) {
      throw DomainError("output port out of range");
    }
    rank = rank * n_ports + (port - 1);
  }
  return rank;
}

OutputTuple output_tuple_from_rank(std::int64_t rank, int n_photons,
                                   int n_ports) {
  if (n_photons < 1 || n_ports < 1) {
    throw DimensionError("need positive photon and port counts");
  }
  std::int64_t total = 1;
  for (int k = 0; k < n_photons; ++k) total *= n_ports;
  if (rank < 0 || rank >= total) {
    throw DomainError("tuple rank out of range");
  }
  OutputTuple l;
  l.ports.assign(static_cast<std::size_t>(n_photons), 1);
  for (int k = n_photons - 1; k >= 0; --k) {
    l.ports[static_cast<std::size_t>(k)] = static_cast<int>(rank % n_ports) + 1;
    rank /= n_ports;
  }
  return l;
}

double prob_a(const Experiment& exp, const OutputTuple& l, ProbPath path) {
  check_output_tuple(exp, l);
  // With zero arrival spread every group weight is exactly one and the
  // double sum collapses to a squared permanent; delegating makes the
  // equality exact in floating point as well.
  if (eta(exp.model) == 0.0) return prob_a_ideal(exp, l);
  const int n = exp.n_photons();
  const Eigen::MatrixXcd& u = exp.unitary.mat();
  const DistFunctionA df(exp.model, JMode::Exact);

  if (path == ProbPath::Grouped) {
    if (n > 9) throw SizeError("grouped path limited to N <= 9");
    double acc = 0.0;
    ComplexMatrix a(n, n);
    iterate_group(n, [&](const Permutation& s) {
      for (int k = 0; k < n; ++k) {
        const int col = l.ports[static_cast<std::size_t>(k)] - 1;
        for (int j = 0; j < n; ++j) {
          a(j, k) = std::conj(u(s(j), col)) * u(j, col);
        }
      }
      acc += j_a(df, s) * permanent(a).real();
    });
    return clamp_probability(acc / factorial(n));
  }

  if (n > 7) throw SizeError("direct path limited to N <= 7");
  const std::vector<Permutation> perms = all_permutations(n);
  Complex acc(0.0, 0.0);
  for (const Permutation& s1 : perms) {
    for (const Permutation& s2 : perms) {
      const double w = j_a(df, compose(s1, inverse(s2)));
      Complex prod(1.0, 0.0);
      for (int k = 0; k < n; ++k) {
        const int col = l.ports[static_cast<std::size_t>(k)] - 1;
        prod *= std::conj(u(s1(k), col)) * u(s2(k), col);
      }
      acc += w * prod;
    }
  }
  return clamp_probability(acc.real() / factorial(n));
}

double prob_a_occupation(const Experiment& exp, const Occupation& m,
                         ProbPath path) {
  check_occupation(exp, m);
  double divisor = 1.0;
  for (int c : m.counts) divisor *= factorial(c);
  const OutputTuple l = ascending_tuple_of(m);
  return factorial(exp.n_photons()) / divisor * prob_a(exp, l, path);
}

double prob_a_ideal(const Experiment& exp, const OutputTuple& l) {
  check_output_tuple(exp, l);
  const int n = exp.n_photons();
  if (n > 20) throw SizeError("ideal path limited to N <= 20");
  const Eigen::MatrixXcd& u = exp.unitary.mat();
  ComplexMatrix sub(n, n);
  for (int k = 0; k < n; ++k) {
    const int col = l.ports[static_cast<std::size_t>(k)] - 1;
    for (int j = 0; j < n; ++j) sub(j, k) = u(j, col);
  }
  return std::norm(permanent(sub)) / factorial(n);
}

double prob_a_classical(const Experiment& exp, const OutputTuple& l) {
  check_output_tuple(exp, l);
  const int n = exp.n_photons();
  if (n > 20) throw SizeError("classical path limited to N <= 20");
  const Eigen::MatrixXcd& u = exp.unitary.mat();
  ComplexMatrix sub(n, n);
  for (int k = 0; k < n; ++k) {
    const int col = l.ports[static_cast<std::size_t>(k)] - 1;
    for (int j = 0; j < n; ++j) sub(j, k) = Complex(std::norm(u(j, col)), 0.0);
  }
  return permanent(sub).real() / factorial(n);
}

double prob_b(const Experiment& exp, const OutputTuple& l, const TimeTuple& t,
              ProbPath path) {
  check_output_tuple(exp, l);
  check_time_tuple(exp.model, t);
  if (eta(exp.model) == 0.0) return prob_b_ideal(exp, l, t);
  const int n = exp.n_photons();
  const DistFunctionB df(exp.model);

  // e(j, k): photon j reaching the slot-k port at the slot-k time.
  Eigen::MatrixXcd e(n, n);
  for (int k = 0; k < n; ++k) {
    const int col = l.ports[static_cast<std::size_t>(k)] - 1;
    for (int j = 0; j < n; ++j) {
      e(j, k) = exp.unitary.mat()(j, col) *
                chi(exp.model, j, t[static_cast<std::size_t>(k)]);
    }
  }

  // The time-resolved weight is not constant on conjugacy classes, so the
  // permuted index must live in slot space (which port/time pair a photon
  // reaches), not photon space. That choice is what makes the density
  // invariant under relabeling of the detection slots.
  if (path == ProbPath::Grouped) {
    if (n > 8) throw SizeError("grouped path limited to N <= 8");
    double acc = 0.0;
    ComplexMatrix b(n, n);
    iterate_group(n, [&](const Permutation& s) {
      for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
          b(j, k) = std::conj(e(j, s(k))) * e(j, k);
        }
      }
      acc += j_b_proper(df, t, s) * permanent(b).real();
    });
    return clamp_probability(acc / factorial(n));
  }

  if (n > 6) throw SizeError("direct path limited to N <= 6");
  const std::vector<Permutation> perms = all_permutations(n);
  Complex acc(0.0, 0.0);
  for (const Permutation& s1 : perms) {
    for (const Permutation& s2 : perms) {
      const double w = j_b_proper(df, t, compose(s1, inverse(s2)));
      Complex prod(1.0, 0.0);
      for (int k = 0; k < n; ++k) {
        prod *= std::conj(e(k, s1(k))) * e(k, s2(k));
      }
      acc += w * prod;
    }
  }
  return clamp_probability(acc.real() / factorial(n));
}

double prob_b_ideal(const Experiment& exp, const OutputTuple& l,
                    const TimeTuple& t) {
  check_output_tuple(exp, l);
  check_time_tuple(exp.model, t);
  const int n = exp.n_photons();
  if (n > 20) throw SizeError("ideal path limited to N <= 20");
  ComplexMatrix b(n, n);
  for (int k = 0; k < n; ++k) {
    const int col = l.ports[static_cast<std::size_t>(k)] - 1;
    for (int j = 0; j < n; ++j) {
      b(j, k) = exp.unitary.mat()(j, col) *
                chi(exp.model, j, t[static_cast<std::size_t>(k)]);
    }
  }
  return std::norm(permanent(b)) / factorial(n);
}

namespace {

constexpr int kMaxBatchPhotons = 6;
constexpr std::int64_t kMaxBatchTuples = std::int64_t{1} << 20;

std::int64_t checked_tuple_count(int n, int m) {
  if (n > kMaxBatchPhotons) {
    throw SizeError("batch evaluation limited to N <= 6");
  }
  std::int64_t total = 1;
  for (int k = 0; k < n; ++k) {
    total *= m;
    if (total > kMaxBatchTuples) {
      throw SizeError("batch evaluation limited to M^N <= 2^20 tuples");
    }
  }
  return total;
}

// Group-weight kernel G(i, j) = J(sigma_i^{-1} sigma_j) for the direct
// double permutation sum written as a quadratic form over photon-permuted
// amplitude products. The inverse-composition order matters once J is not
// constant on conjugacy classes (time-resolved weights): it is what keeps
// the distribution invariant under relabeling of detection slots.
Eigen::MatrixXcd weight_kernel(const std::vector<Permutation>& perms,
                               const std::vector<double>& jvals) {
  const int nf = static_cast<int>(perms.size());
  Eigen::MatrixXcd g(nf, nf);
  for (int i = 0; i < nf; ++i) {
    for (int j = 0; j < nf; ++j) {
      const Permutation rel =
          compose(inverse(perms[static_cast<std::size_t>(i)]),
                  perms[static_cast<std::size_t>(j)]);
      g(i, j) = jvals[static_cast<std::size_t>(lehmer_rank(rel))];
    }
  }
  return g;
}

// Shared odometer walk over all M^N ordered tuples in rank order. For each
// slot j and port c, slot_factor(j, c) gives the per-permutation amplitude
// vector; leaf(V) consumes the full product vector at each tuple.
template <typename SlotFactor, typename Leaf>
void walk_tuples(int n, int m, int n_fact, SlotFactor&& slot_factor,
                 Leaf&& leaf) {
  std::vector<Eigen::VectorXcd> partial(static_cast<std::size_t>(n) + 1);
  partial[0] = Eigen::VectorXcd::Ones(n_fact);
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    partial[static_cast<std::size_t>(j) + 1] =
        partial[static_cast<std::size_t>(j)].cwiseProduct(slot_factor(j, 0));
  }
  while (true) {
    leaf(partial[static_cast<std::size_t>(n)]);
    int k = n - 1;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == m) {
      idx[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    for (int j = k; j < n; ++j) {
      partial[static_cast<std::size_t>(j) + 1] =
          partial[static_cast<std::size_t>(j)].cwiseProduct(
              slot_factor(j, idx[static_cast<std::size_t>(j)]));
    }
  }
}

}  // namespace

TupleDistributionsA distributions_a(const Experiment& exp) {
  const int n = exp.n_photons();
  const int m = exp.n_ports();
  const std::int64_t total = checked_tuple_count(n, m);
  const std::vector<Permutation> perms = all_permutations(n);
  const int nf = static_cast<int>(perms.size());
  const double nfd = factorial(n);
  const Eigen::MatrixXcd& u = exp.unitary.mat();
  const bool ideal_limit = eta(exp.model) == 0.0;

  // fac[j][c](i): amplitude of permutation i sending slot j to port c+1.
  std::vector<std::vector<Eigen::VectorXcd>> fac(
      static_cast<std::size_t>(n),
      std::vector<Eigen::VectorXcd>(static_cast<std::size_t>(m)));
  std::vector<std::vector<Eigen::VectorXd>> facc(
      static_cast<std::size_t>(n),
      std::vector<Eigen::VectorXd>(static_cast<std::size_t>(m)));
  for (int j = 0; j < n; ++j) {
    for (int c = 0; c < m; ++c) {
      Eigen::VectorXcd col(nf);
      Eigen::VectorXd colc(nf);
      for (int i = 0; i < nf; ++i) {
        const Complex amp = u(perms[static_cast<std::size_t>(i)](j), c);
        col(i) = amp;
        colc(i) = std::norm(amp);
      }
      fac[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] =
          std::move(col);
      facc[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] =
          std::move(colc);
    }
  }

  Eigen::MatrixXcd g;
  if (!ideal_limit) {
    const DistFunctionA df(exp.model, JMode::Exact);
    std::vector<double> jvals(static_cast<std::size_t>(nf));
    for (int i = 0; i < nf; ++i) {
      jvals[static_cast<std::size_t>(i)] =
          j_a(df, perms[static_cast<std::size_t>(i)]);
    }
    g = weight_kernel(perms, jvals);
  }

  TupleDistributionsA out;
  out.mixed.reserve(static_cast<std::size_t>(total));
  out.ideal.reserve(static_cast<std::size_t>(total));
  out.classical.reserve(static_cast<std::size_t>(total));

  // The classical weights multiply along the same tuple tree, so run a
  // parallel real-valued odometer inside the complex one.
  std::vector<Eigen::VectorXd> partialc(static_cast<std::size_t>(n) + 1);
  partialc[0] = Eigen::VectorXd::Ones(nf);
  Eigen::VectorXcd y(nf);

  std::vector<Eigen::VectorXcd> partial(static_cast<std::size_t>(n) + 1);
  partial[0] = Eigen::VectorXcd::Ones(nf);
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    partial[static_cast<std::size_t>(j) + 1] =
        partial[static_cast<std::size_t>(j)].cwiseProduct(
            fac[static_cast<std::size_t>(j)][0]);
    partialc[static_cast<std::size_t>(j) + 1] =
        partialc[static_cast<std::size_t>(j)].cwiseProduct(
            facc[static_cast<std::size_t>(j)][0]);
  }
  while (true) {
    const Eigen::VectorXcd& v = partial[static_cast<std::size_t>(n)];
    const double ideal = std::norm(v.sum()) / nfd;
    out.ideal.push_back(ideal);
    out.classical.push_back(
        partialc[static_cast<std::size_t>(n)].sum() / nfd);
    if (ideal_limit) {
      out.mixed.push_back(ideal);
    } else {
      y.noalias() = g * v;
      out.mixed.push_back(clamp_probability(v.dot(y).real() / nfd));
    }
    int k = n - 1;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == m) {
      idx[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
    for (int j = k; j < n; ++j) {
      partial[static_cast<std::size_t>(j) + 1] =
          partial[static_cast<std::size_t>(j)].cwiseProduct(
              fac[static_cast<std::size_t>(j)]
                 [static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]);
      partialc[static_cast<std::size_t>(j) + 1] =
          partialc[static_cast<std::size_t>(j)].cwiseProduct(
              facc[static_cast<std::size_t>(j)]
                  [static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]);
    }
  }
  return out;
}

TupleDistributionsB distributions_b(const Experiment& exp,
                                    const TimeTuple& t) {
  check_time_tuple(exp.model, t);
  const int n = exp.n_photons();
  const int m = exp.n_ports();
  const std::int64_t total = checked_tuple_count(n, m);
  const std::vector<Permutation> perms = all_permutations(n);
  const int nf = static_cast<int>(perms.size());
  const double nfd = factorial(n);
  const bool ideal_limit = eta(exp.model) == 0.0;

  // Per-slot effective amplitudes pick up the slot's detection time.
  std::vector<std::vector<Eigen::VectorXcd>> fac(
      static_cast<std::size_t>(n),
      std::vector<Eigen::VectorXcd>(static_cast<std::size_t>(m)));
  for (int j = 0; j < n; ++j) {
    const Eigen::MatrixXcd e = effective_columns(exp, t, j);
    for (int c = 0; c < m; ++c) {
      Eigen::VectorXcd col(nf);
      for (int i = 0; i < nf; ++i) {
        col(i) = e(perms[static_cast<std::size_t>(i)](j), c);
      }
      fac[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] =
          std::move(col);
    }
  }

  Eigen::MatrixXcd g;
  if (!ideal_limit) {
    const DistFunctionB df(exp.model);
    std::vector<double> jvals(static_cast<std::size_t>(nf));
    for (int i = 0; i < nf; ++i) {
      jvals[static_cast<std::size_t>(i)] =
          j_b_proper(df, t, perms[static_cast<std::size_t>(i)]);
    }
    g = weight_kernel(perms, jvals);
  }

  TupleDistributionsB out;
  out.mixed.reserve(static_cast<std::size_t>(total));
  out.ideal.reserve(static_cast<std::size_t>(total));
  Eigen::VectorXcd y(nf);
  walk_tuples(
      n, m, nf,
      [&](int j, int c) -> const Eigen::VectorXcd& {
        return fac[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
      },
      [&](const Eigen::VectorXcd& v) {
        const double ideal = std::norm(v.sum()) / nfd;
        out.ideal.push_back(ideal);
        if (ideal_limit) {
          out.mixed.push_back(ideal);
        } else {
          y.noalias() = g * v;
          out.mixed.push_back(clamp_probability(v.dot(y).real() / nfd));
        }
      });
  return out;
}

}  // namespace glint
