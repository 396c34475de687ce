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

#ifndef GLINT_DETAIL_RNG_HPP
#define GLINT_DETAIL_RNG_HPP

#include <cstdint>

namespace glint::detail {

// SplitMix64 finalizer. Used to decorrelate seed/counter pairs before they
// initialize a full engine.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent sub-stream seed for (seed, index). Each Monte Carlo sample owns
// one stream, so results do not depend on scheduling or chunking.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (0x517cc1b727220a95ULL * (index + 1)));
}

}  // namespace glint::detail

#endif  // GLINT_DETAIL_RNG_HPP
