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

// JSON codecs for unitaries, model parameters, and comparison-run configs.
//
// All malformed input (unreadable file, JSON syntax error, missing or
// unknown keys, wrong types, values violating downstream invariants) is
// reported as ValidationError. Doubles are serialized by the JSON library
// with shortest-round-trip precision, so a save/load cycle reproduces
// every matrix entry bit for bit.

#ifndef GLINT_IO_HPP
#define GLINT_IO_HPP

#include <cstdint>
#include <string>

#include "json.hpp"

#include "glint/linalg.hpp"
#include "glint/photon_model.hpp"

namespace glint {

// Unitary file schema:
//     {"m": M, "re": [[M rows of M reals]], "im": [[M rows of M reals]]}
// Row r, column c of the matrix is re[r][c] + i*im[r][c]. The reader
// rejects non-unitary matrices (max-norm residual above the UnitaryMatrix
// tolerance) with the residual quoted in the error message.
nlohmann::json unitary_to_json(const UnitaryMatrix& u);
UnitaryMatrix unitary_from_json(const nlohmann::json& j);
void save_unitary(const UnitaryMatrix& u, const std::string& path);
UnitaryMatrix load_unitary(const std::string& path);

// Model object schema:
//     {"N": int, "T": real, "dtau": real, "omega": [N reals], "seed": int}
// "omega" is optional (all zeros when absent). "seed" is optional and not
// interpreted here; commands that sample read it from their own flags or
// from the enclosing config. Unknown keys are rejected.
GaussianModel model_from_json(const nlohmann::json& j);

// Comparison-run config schema:
//     {"model": {...},
//      "unitary": "path/to/unitary.json" | {"haar": {"M": int, "seed": int}},
//      "samples": int,        optional, default 1000
//      "seed": int}           optional, default 0
// A relative unitary path is resolved against base_dir (the directory of
// the config file). The photon count must not exceed the unitary dimension.
struct CompareConfig {
  GaussianModel model;
  UnitaryMatrix unitary;
  long long samples = 1000;
  std::uint64_t seed = 0;
};

CompareConfig compare_config_from_json(const nlohmann::json& j,
                                       const std::string& base_dir);
CompareConfig load_compare_config(const std::string& path);

}  // namespace glint

#endif  // GLINT_IO_HPP
