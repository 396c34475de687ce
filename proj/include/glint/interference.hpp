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

#ifndef GLINT_INTERFERENCE_HPP
#define GLINT_INTERFERENCE_HPP

#include <cstdint>
#include <vector>

#include "glint/distinguishability.hpp"
#include "glint/linalg.hpp"
#include "glint/photon_model.hpp"

// Output probability distributions of N photons entering ports 1..N of an
// M-port interferometer, for time-unresolved detection (setup a) and
// time-resolved detection (setup b). Each setup has a mixed-state form, an
// ideal pure-state form, and (for a) a classical-particle form.

namespace glint {

// Ordered detection record: photon slot k fired detector ports[k], 1-based.
// The same multiset of ports in a different order is a distinct tuple; the
// occupation view groups them.
struct OutputTuple {
  std::vector<int> ports;

  int size() const { return static_cast<int>(ports.size()); }
};

// Detector counts per port, m[l] photons in port l+1; sums to N.
struct Occupation {
  std::vector<int> counts;

  int n_ports() const { return static_cast<int>(counts.size()); }
  int total() const;
};

struct Experiment {
  GaussianModel model;
  UnitaryMatrix unitary;

  int n_photons() const { return model.n_photons; }
  int n_ports() const { return static_cast<int>(unitary.dim()); }
};

// Requires N <= M; photons always enter ports 1..N.
Experiment make_experiment(GaussianModel model, UnitaryMatrix unitary);

void check_output_tuple(const Experiment& exp, const OutputTuple& l);
void check_occupation(const Experiment& exp, const Occupation& m);

// Conversions between the ordered-tuple and occupation views.
Occupation occupation_of(const OutputTuple& l, int n_ports);
OutputTuple ascending_tuple_of(const Occupation& m);

// Lexicographic rank of an ordered tuple among all M^N of them, with the
// last slot varying fastest; inverse mapping below.
std::int64_t rank_of_output_tuple(const OutputTuple& l, int n_ports);
OutputTuple output_tuple_from_rank(std::int64_t rank, int n_photons,
                                   int n_ports);

// Evaluation path for the mixed-state probabilities. Grouped folds the
// double permutation sum into one group sum over permanents; Direct is the
// plain double sum kept as an internal reference.
enum class ProbPath { Grouped, Direct };

// Time-unresolved detection probability of the ordered tuple l for
// partially distinguishable photons. Grouped: N <= 9; Direct: N <= 7.
double prob_a(const Experiment& exp, const OutputTuple& l,
              ProbPath path = ProbPath::Grouped);

// Same distribution indexed by detector counts: (N!/m!) times any ordered
// tuple realizing m.
double prob_a_occupation(const Experiment& exp, const Occupation& m,
                         ProbPath path = ProbPath::Grouped);

// Fully indistinguishable limit: squared permanent of the port submatrix
// over N!. N <= 20.
double prob_a_ideal(const Experiment& exp, const OutputTuple& l);

// Fully distinguishable limit: permanent of the squared-modulus submatrix
// over N!.
double prob_a_classical(const Experiment& exp, const OutputTuple& l);

// Time-resolved detection density at detection times t (one per slot).
// Reported in units of 1/T^N. Grouped: N <= 8; Direct: N <= 6.
double prob_b(const Experiment& exp, const OutputTuple& l, const TimeTuple& t,
              ProbPath path = ProbPath::Grouped);

// Pure-state limit of setup b: squared permanent of the spatiotemporal
// submatrix with entries U_{k,l_j} chi_k(t_j), over N!. N <= 20.
double prob_b_ideal(const Experiment& exp, const OutputTuple& l,
                    const TimeTuple& t);

// Full ordered-tuple distributions evaluated in one pass over all M^N
// tuples, indexed by rank_of_output_tuple. One pass shares the partial
// port-amplitude products across tuples, so it runs far faster than M^N
// independent evaluations. Requires N <= 6 and M^N <= 2^20.
struct TupleDistributionsA {
  std::vector<double> mixed;
  std::vector<double> ideal;
  std::vector<double> classical;
};
TupleDistributionsA distributions_a(const Experiment& exp);

// Distributions over tuples at fixed detection times for setup b;
// densities in units of 1/T^N.
struct TupleDistributionsB {
  std::vector<double> mixed;
  std::vector<double> ideal;
};
TupleDistributionsB distributions_b(const Experiment& exp, const TimeTuple& t);

}  // namespace glint

#endif  // GLINT_INTERFERENCE_HPP
