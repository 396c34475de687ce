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

#ifndef GLINT_PERMGROUP_HPP
#define GLINT_PERMGROUP_HPP

#include <functional>
#include <vector>

#include "glint/errors.hpp"

namespace glint {

// Permutation of {0, ..., N-1} stored as a target array: the element at slot
// k moves to slot sigma(k). Consequently a tuple t transforms with the
// inverse index: (sigma . t)[k] = t[sigma^{-1}(k)].
//
// Worked 3-element example for sigma = (0 -> 1, 1 -> 2, 2 -> 0), i.e.
// targets = [1, 2, 0]:
//   slot 0's element lands in slot 1, slot 1's in slot 2, slot 2's in slot 0,
//   so (sigma . t) = (t_2, t_0, t_1), matching t_{sigma^{-1}(k)} entrywise.
// Sums of the form f(t_k, t_{sigma(k)}) are written with the forward map and
// never with an implicit inverse.
class Permutation {
 public:
  // Validates that `targets` is a bijection on {0, ..., N-1}.
  explicit Permutation(std::vector<int> targets);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(targets_.size()); }
  int operator()(int k) const { return targets_[k]; }
  const std::vector<int>& targets() const { return targets_; }

  bool operator==(const Permutation& other) const = default;

 private:
  std::vector<int> targets_;
};

// counts[n] = number of cycles of length n, for n = 1..N (index 0 unused).
// The lengths weighted by multiplicity always add up to N.
struct CycleType {
  std::vector<int> counts;

  int n_elements() const { return static_cast<int>(counts.size()) - 1; }
  int cycles_of_length(int n) const { return counts[n]; }
  int fixed_points() const { return counts.size() > 1 ? counts[1] : 0; }
};

CycleType cycle_type(const Permutation& p);

// (compose(p, q))(k) = p(q(k)). Throws DimensionError on size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// Calls fn once per element of S_n in lexicographic order of target arrays.
// Guarded to n <= 10 since the group has n! elements.
void iterate_group(int n, const std::function<void(const Permutation&)>& fn);

// Materialized variant for callers that index permutations repeatedly.
std::vector<Permutation> all_permutations(int n);

// Closed form of the group average (1/N!) sum over sigma of zeta^{F(sigma)},
// where F counts fixed points:
//     sum_{k=0}^{n} (zeta - 1)^k / k!
// Requires n >= 1 and zeta > 0.
double z_fixed_point_sum(int n, double zeta);

}  // namespace glint

#endif  // GLINT_PERMGROUP_HPP
