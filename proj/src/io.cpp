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

#include "glint/io.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <utility>
#include <vector>

#include "glint/errors.hpp"

namespace glint {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

const json& require_key(const json& j, const char* key,
                        const std::string& where) {
  if (!j.is_object()) fail(where, "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

void reject_unknown_keys(const json& j,
                         std::initializer_list<const char*> known,
                         const std::string& where) {
  if (!j.is_object()) fail(where, "expected a JSON object");
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) fail(where, "unknown key \"" + item.key() + "\"");
  }
}

long long get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long long>();
}

std::uint64_t get_u64(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const long long v = get_int(j, where);
  if (v < 0) fail(where, "must be non-negative");
  return static_cast<std::uint64_t>(v);
}

double get_real(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

std::vector<double> get_real_array(const json& j, std::size_t size,
                                   const std::string& where) {
  if (!j.is_array() || j.size() != size) {
    fail(where, "expected an array of " + std::to_string(size) + " numbers");
  }
  std::vector<double> out;
  out.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    out.push_back(get_real(j[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

json parse_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) fail(path, "cannot open file");
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    fail(path, std::string("JSON parse error: ") + e.what());
  }
}

void write_file(const json& j, const std::string& path) {
  std::ofstream os(path);
  if (!os) fail(path, "cannot open file for writing");
  os << j.dump() << '\n';
  if (!os) fail(path, "write failed");
}

// Guards absurd allocations from corrupt files; real workloads stay far
// below this (Haar generation caps at 64, comparisons at 8 ports).
constexpr long long kMaxUnitaryDim = 1024;

}  // namespace

json unitary_to_json(const UnitaryMatrix& u) {
  const int m = u.dim();
  std::vector<std::vector<double>> re(static_cast<std::size_t>(m)),
      im(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    auto& re_row = re[static_cast<std::size_t>(r)];
    auto& im_row = im[static_cast<std::size_t>(r)];
    re_row.resize(static_cast<std::size_t>(m));
    im_row.resize(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
      re_row[static_cast<std::size_t>(c)] = u.mat()(r, c).real();
      im_row[static_cast<std::size_t>(c)] = u.mat()(r, c).imag();
    }
  }
  json j;
  j["m"] = m;
  j["re"] = re;
  j["im"] = im;
  return j;
}

UnitaryMatrix unitary_from_json(const json& j) {
  reject_unknown_keys(j, {"m", "re", "im"}, "unitary");
  const long long m = get_int(require_key(j, "m", "unitary"), "unitary.m");
  if (m < 1 || m > kMaxUnitaryDim) {
    fail("unitary.m", "must be in [1, " + std::to_string(kMaxUnitaryDim) + "]");
  }
  const auto n = static_cast<std::size_t>(m);
  const json& re = require_key(j, "re", "unitary");
  const json& im = require_key(j, "im", "unitary");
  if (!re.is_array() || re.size() != n) {
    fail("unitary.re", "expected " + std::to_string(m) + " rows");
  }
  if (!im.is_array() || im.size() != n) {
    fail("unitary.im", "expected " + std::to_string(m) + " rows");
  }
  ComplexMatrix mat(m, m);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string row_id = "[" + std::to_string(r) + "]";
    const std::vector<double> re_row =
        get_real_array(re[r], n, "unitary.re" + row_id);
    const std::vector<double> im_row =
        get_real_array(im[r], n, "unitary.im" + row_id);
    for (std::size_t c = 0; c < n; ++c) {
      mat(static_cast<int>(r), static_cast<int>(c)) =
          Complex(re_row[c], im_row[c]);
    }
  }
  return UnitaryMatrix(std::move(mat));
}

void save_unitary(const UnitaryMatrix& u, const std::string& path) {
  write_file(unitary_to_json(u), path);
}

UnitaryMatrix load_unitary(const std::string& path) {
  return unitary_from_json(parse_file(path));
}

GaussianModel model_from_json(const json& j) {
  reject_unknown_keys(j, {"N", "T", "dtau", "omega", "seed"}, "model");
  const long long n = get_int(require_key(j, "N", "model"), "model.N");
  if (n < 1 || n > 1000000) fail("model.N", "out of range");
  const double t = get_real(require_key(j, "T", "model"), "model.T");
  const double dtau = get_real(require_key(j, "dtau", "model"), "model.dtau");
  std::vector<double> omega;
  if (j.contains("omega")) {
    omega = get_real_array(j["omega"], static_cast<std::size_t>(n),
                           "model.omega");
  }
  if (j.contains("seed")) get_u64(j["seed"], "model.seed");
  return make_model(static_cast<int>(n), t, dtau, std::move(omega));
}

CompareConfig compare_config_from_json(const json& j,
                                       const std::string& base_dir) {
  reject_unknown_keys(j, {"model", "unitary", "samples", "seed"}, "config");
  GaussianModel model = model_from_json(require_key(j, "model", "config"));

  const json& ju = require_key(j, "unitary", "config");
  UnitaryMatrix unitary = [&]() -> UnitaryMatrix {
    if (ju.is_string()) {
      std::filesystem::path p(ju.get<std::string>());
      if (p.is_relative() && !base_dir.empty()) {
        p = std::filesystem::path(base_dir) / p;
      }
      return load_unitary(p.string());
    }
    if (ju.is_object()) {
      reject_unknown_keys(ju, {"haar"}, "config.unitary");
      const json& jh = require_key(ju, "haar", "config.unitary");
      reject_unknown_keys(jh, {"M", "seed"}, "config.unitary.haar");
      const long long m =
          get_int(require_key(jh, "M", "config.unitary.haar"),
                  "config.unitary.haar.M");
      if (m < 1 || m > kMaxUnitaryDim) fail("config.unitary.haar.M",
                                            "out of range");
      const std::uint64_t seed =
          get_u64(require_key(jh, "seed", "config.unitary.haar"),
                  "config.unitary.haar.seed");
      return haar_unitary(static_cast<int>(m), seed);
    }
    fail("config.unitary", "expected a file path or {\"haar\": {...}}");
  }();

  long long samples = 1000;
  if (j.contains("samples")) {
    samples = get_int(j["samples"], "config.samples");
    if (samples < 1) fail("config.samples", "must be positive");
  }
  std::uint64_t seed = 0;
  if (j.contains("seed")) seed = get_u64(j["seed"], "config.seed");

  if (model.n_photons > unitary.dim()) {
    fail("config", "model.N exceeds the unitary dimension");
  }
  return CompareConfig{std::move(model), std::move(unitary), samples, seed};
}

CompareConfig load_compare_config(const std::string& path) {
  const json j = parse_file(path);
  const std::string base_dir =
      std::filesystem::path(path).parent_path().string();
  return compare_config_from_json(j, base_dir);
}

}  // namespace glint
