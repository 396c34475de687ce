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

#include "glint/permgroup.hpp"

#include <algorithm>
#include <numeric>

namespace glint {

Permutation::Permutation(std::vector<int> targets)
    : targets_(std::move(targets)) {
  const int n = static_cast<int>(targets_.size());
  if (n < 1) {
    throw DimensionError("permutation must act on at least one element");
  }
  std::vector<char> seen(n, 0);
  for (int t : targets_) {
    if (t < 0 || t >= n || seen[t]) {
      throw ValidationError("permutation targets must form a bijection");
    }
    seen[t] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  return Permutation(std::move(t));
}

CycleType cycle_type(const Permutation& p) {
  const int n = p.size();
  CycleType ct;
  ct.counts.assign(n + 1, 0);
  std::vector<char> visited(n, 0);
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    int len = 0;
    int k = start;
    while (!visited[k]) {
      visited[k] = 1;
      k = p(k);
      ++len;
    }
    ++ct.counts[len];
  }
  return ct;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw DimensionError("compose requires permutations of equal size");
  }
  const int n = p.size();
  std::vector<int> t(n);
  for (int k = 0; k < n; ++k) t[k] = p(q(k));
  return Permutation(std::move(t));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> t(n);
  for (int k = 0; k < n; ++k) t[p(k)] = k;
  return Permutation(std::move(t));
}

namespace {

void check_group_size(int n) {
  if (n < 1) {
    throw DimensionError("group iteration requires n >= 1");
  }
  if (n > 10) {
    throw SizeError("group iteration limited to n <= 10 (n! elements)");
  }
}

}  // namespace

void iterate_group(int n, const std::function<void(const Permutation&)>& fn) {
  check_group_size(n);
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  do {
    fn(Permutation(t));
  } while (std::next_permutation(t.begin(), t.end()));
}

std::vector<Permutation> all_permutations(int n) {
  check_group_size(n);
  std::vector<Permutation> out;
  std::size_t count = 1;
  for (int k = 2; k <= n; ++k) count *= k;
  out.reserve(count);
  iterate_group(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

double z_fixed_point_sum(int n, double zeta) {
  if (n < 1) {
    throw DomainError("z_fixed_point_sum requires n >= 1");
  }
  if (!(zeta > 0.0)) {
    throw DomainError("z_fixed_point_sum requires zeta > 0");
  }
  const double x = zeta - 1.0;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= n; ++k) {
    term *= x / k;
    sum += term;
  }
  return sum;
}

}  // namespace glint
