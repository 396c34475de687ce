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

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "glint/errors.hpp"
#include "glint/io.hpp"
#include "glint/linalg.hpp"
#include "glint/metrics.hpp"
#include "glint/photon_model.hpp"

namespace {

using nlohmann::json;

bool same_bits(const glint::ComplexMatrix& a, const glint::ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (a(r, c).real() != b(r, c).real()) return false;
      if (a(r, c).imag() != b(r, c).imag()) return false;
    }
  }
  return true;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  REQUIRE(static_cast<bool>(is));
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  REQUIRE(static_cast<bool>(os));
  os << text;
}

// Runs the installed command line under /bin/sh and returns its exit code.
int run_cli_cmd(const std::string& args) {
  const std::string cmd = std::string(GLINT_CLI_BIN) + " " + args;
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("unitary json round-trips bit for bit") {
  const glint::UnitaryMatrix u = glint::haar_unitary(8, 42);
  const glint::UnitaryMatrix v = glint::unitary_from_json(
      glint::unitary_to_json(u));
  CHECK(same_bits(u.mat(), v.mat()));

  const std::string path = "io_roundtrip_unitary.json";
  glint::save_unitary(u, path);
  const glint::UnitaryMatrix w = glint::load_unitary(path);
  CHECK(same_bits(u.mat(), w.mat()));
  std::remove(path.c_str());
}

TEST_CASE("unitary json rejects malformed input") {
  const json good = glint::unitary_to_json(glint::haar_unitary(3, 1));

  json missing = good;
  missing.erase("im");
  CHECK_THROWS_AS(glint::unitary_from_json(missing), glint::ValidationError);

  json short_row = good;
  short_row["re"][1] = json::array({0.0, 0.0});
  CHECK_THROWS_AS(glint::unitary_from_json(short_row), glint::ValidationError);

  json bad_entry = good;
  bad_entry["re"][0][0] = "zero";
  CHECK_THROWS_AS(glint::unitary_from_json(bad_entry), glint::ValidationError);

  json extra = good;
  extra["comment"] = "hello";
  CHECK_THROWS_AS(glint::unitary_from_json(extra), glint::ValidationError);

  json bad_dim = good;
  bad_dim["m"] = 0;
  CHECK_THROWS_AS(glint::unitary_from_json(bad_dim), glint::ValidationError);
}

TEST_CASE("unitary json rejects non-unitary data with the residual quoted") {
  json j;
  j["m"] = 2;
  j["re"] = {{1.0, 0.0}, {0.0, 1.0}};
  j["im"] = {{0.0, 0.5}, {0.0, 0.0}};
  try {
    glint::unitary_from_json(j);
    FAIL("expected rejection");
  } catch (const glint::ValidationError& e) {
    CHECK(std::string(e.what()).find("residual") != std::string::npos);
  }
}

TEST_CASE("model json parses fields and applies defaults") {
  const glint::GaussianModel m = glint::model_from_json(
      json::parse(R"({"N": 3, "T": 2.0, "dtau": 0.4,
                      "omega": [0.0, 1.5, -2.0], "seed": 9})"));
  CHECK(m.n_photons == 3);
  CHECK(m.pulse_width == 2.0);
  CHECK(m.arrival_spread == 0.4);
  CHECK(m.frequencies == std::vector<double>{0.0, 1.5, -2.0});

  const glint::GaussianModel d = glint::model_from_json(
      json::parse(R"({"N": 2, "T": 1, "dtau": 0})"));
  CHECK(d.frequencies == std::vector<double>{0.0, 0.0});
}

TEST_CASE("model json rejects malformed input") {
  CHECK_THROWS_AS(glint::model_from_json(json::parse(R"([1, 2])")),
                  glint::ValidationError);
  CHECK_THROWS_AS(
      glint::model_from_json(json::parse(R"({"T": 1, "dtau": 0})")),
      glint::ValidationError);
  CHECK_THROWS_AS(glint::model_from_json(json::parse(
                      R"({"N": 2, "T": 1, "dtau": 0, "omgea": [0, 0]})")),
                  glint::ValidationError);
  CHECK_THROWS_AS(glint::model_from_json(json::parse(
                      R"({"N": 2, "T": 1, "dtau": 0, "omega": [0]})")),
                  glint::ValidationError);
  CHECK_THROWS_AS(glint::model_from_json(json::parse(
                      R"({"N": 2, "T": -1, "dtau": 0})")),
                  glint::ValidationError);
  CHECK_THROWS_AS(glint::model_from_json(json::parse(
                      R"({"N": 0, "T": 1, "dtau": 0})")),
                  glint::ValidationError);
}

TEST_CASE("compare config accepts haar specs and applies defaults") {
  const glint::CompareConfig cfg = glint::compare_config_from_json(
      json::parse(R"({"model": {"N": 2, "T": 1, "dtau": 0.2},
                      "unitary": {"haar": {"M": 4, "seed": 7}}})"),
      "");
  CHECK(cfg.model.n_photons == 2);
  CHECK(cfg.unitary.dim() == 4);
  CHECK(cfg.samples == 1000);
  CHECK(cfg.seed == 0);
  CHECK(same_bits(cfg.unitary.mat(), glint::haar_unitary(4, 7).mat()));
}

TEST_CASE("compare config resolves unitary paths against the config dir") {
  const std::string dir = "io_cfg_dir";
  REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
  glint::save_unitary(glint::haar_unitary(4, 3), dir + "/u.json");
  const glint::CompareConfig cfg = glint::compare_config_from_json(
      json::parse(R"({"model": {"N": 2, "T": 1, "dtau": 0.1},
                      "unitary": "u.json",
                      "samples": 2000, "seed": 5})"),
      dir);
  CHECK(cfg.unitary.dim() == 4);
  CHECK(cfg.samples == 2000);
  CHECK(cfg.seed == 5);
  CHECK(same_bits(cfg.unitary.mat(), glint::haar_unitary(4, 3).mat()));
  std::remove((dir + "/u.json").c_str());
}

TEST_CASE("compare config rejects inconsistent or malformed input") {
  CHECK_THROWS_AS(glint::compare_config_from_json(
                      json::parse(R"({"model": {"N": 5, "T": 1, "dtau": 0.1},
                                      "unitary": {"haar": {"M": 4, "seed": 1}}})"),
                      ""),
                  glint::ValidationError);
  CHECK_THROWS_AS(glint::compare_config_from_json(
                      json::parse(R"({"model": {"N": 2, "T": 1, "dtau": 0.1},
                                      "unitary": 42})"),
                      ""),
                  glint::ValidationError);
  CHECK_THROWS_AS(glint::compare_config_from_json(
                      json::parse(R"({"model": {"N": 2, "T": 1, "dtau": 0.1},
                                      "unitary": {"haar": {"M": 4, "seed": 1}},
                                      "samples": 0})"),
                      ""),
                  glint::ValidationError);
  CHECK_THROWS_AS(glint::compare_config_from_json(
                      json::parse(R"({"model": {"N": 2, "T": 1, "dtau": 0.1},
                                      "unitary": {"haar": {"M": 4, "seed": 1}},
                                      "extra": 1})"),
                      ""),
                  glint::ValidationError);
  CHECK_THROWS_AS(glint::load_compare_config("no_such_config.json"),
                  glint::ValidationError);
}

TEST_CASE("cli maps flag and value problems to the documented exit codes") {
  CHECK(run_cli_cmd("2>/dev/null") == 2);
  CHECK(run_cli_cmd("bogus 2>/dev/null") == 2);
  CHECK(run_cli_cmd("purity 2>/dev/null") == 2);
  CHECK(run_cli_cmd("purity --eta 0.1 --format xml 2>/dev/null") == 2);
  CHECK(run_cli_cmd("purity --eta 0.1 >/dev/null 2>&1") == 0);
  CHECK(run_cli_cmd("purity --eta -0.5 >/dev/null 2>&1") == 3);
  CHECK(run_cli_cmd("purity --eta 0.1 --n-max 500 >/dev/null 2>&1") == 3);
  CHECK(run_cli_cmd("ds --n 12 --eta 0.1 >/dev/null 2>&1") == 3);
  CHECK(run_cli_cmd("required-purity --n 3 --target 0.9 >/dev/null 2>&1") ==
        3);
  CHECK(run_cli_cmd("haar --m 80 --seed 1 --out io_never.json "
                    ">/dev/null 2>&1") == 3);
  CHECK(run_cli_cmd("--help >/dev/null") == 0);
}

TEST_CASE("cli ds suggests the closed route when the exact one is too large") {
  const std::string err = "io_ds_err.txt";
  CHECK(run_cli_cmd("ds --n 12 --eta 0.1 2>" + err + " >/dev/null") == 3);
  CHECK(slurp(err).find("closed") != std::string::npos);
  std::remove(err.c_str());
}

TEST_CASE("cli purity table has a header and exact values") {
  const std::string out = "io_purity.csv";
  CHECK(run_cli_cmd("purity --eta 0 --n-max 3 --out " + out) == 0);
  CHECK(slurp(out) == "n,exact,approx,rel_diff\n"
                      "1,1,1,0\n"
                      "2,1,1,0\n"
                      "3,1,1,0\n");
  CHECK(run_cli_cmd("purity --eta 0.1 --n-max 2 --out " + out) == 0);
  CHECK(slurp(out).find("2,0.980580676,0.980198673,") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("cli purity json output parses and matches the closed forms") {
  const std::string out = "io_purity.json";
  CHECK(run_cli_cmd("purity --eta 0.1 --n-max 5 --format json --out " + out) ==
        0);
  const json rows = json::parse(slurp(out));
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 5);
  for (int n = 1; n <= 5; ++n) {
    const json& row = rows[static_cast<std::size_t>(n - 1)];
    CHECK(row.at("n") == n);
    CHECK(row.at("exact").get<double>() ==
          doctest::Approx(glint::purity_order_n(0.1, n)).epsilon(1e-8));
    CHECK(row.at("approx").get<double>() ==
          doctest::Approx(glint::purity_approx(0.1, n)).epsilon(1e-8));
  }
  std::remove(out.c_str());
}

TEST_CASE("cli haar is seed-deterministic and reloads bit-identically") {
  const std::string a = "io_haar_a.json";
  const std::string b = "io_haar_b.json";
  CHECK(run_cli_cmd("haar --m 8 --seed 42 --out " + a + " >/dev/null") == 0);
  CHECK(run_cli_cmd("haar --m 8 --seed 42 --out " + b + " >/dev/null") == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(same_bits(glint::load_unitary(a).mat(),
                  glint::haar_unitary(8, 42).mat()));

  CHECK(run_cli_cmd("haar --m 8 --seed 43 --out " + b + " >/dev/null") == 0);
  CHECK(slurp(a) != slurp(b));

  const std::string res = "io_haar_res.txt";
  CHECK(run_cli_cmd("haar --m 8 --seed 42 --out " + a + " >" + res) == 0);
  CHECK(slurp(res).rfind("residual = ", 0) == 0);

  std::remove(a.c_str());
  std::remove(b.c_str());
  std::remove(res.c_str());
}

TEST_CASE("cli prob commands agree between file and haar unitary sources") {
  const std::string u = "io_probe_u.json";
  const std::string o1 = "io_prob1.txt";
  const std::string o2 = "io_prob2.txt";
  CHECK(run_cli_cmd("haar --m 4 --seed 3 --out " + u + " >/dev/null") == 0);

  const std::string common =
      "--n 2 --dtau 0.2 --omega 0,1.5 --ports 1,2 ";
  CHECK(run_cli_cmd("prob-a " + common + "--unitary " + u + " >" + o1) == 0);
  CHECK(run_cli_cmd("prob-a " + common + "--haar-m 4 --haar-seed 3 >" + o2) ==
        0);
  CHECK(slurp(o1) == slurp(o2));

  const std::string bcommon = common + "--times 0.3,-0.1 ";
  CHECK(run_cli_cmd("prob-b " + bcommon + "--unitary " + u + " >" + o1) == 0);
  CHECK(run_cli_cmd("prob-b " + bcommon + "--unitary " + u +
                    " --route direct >" + o2) == 0);
  CHECK(slurp(o1) == slurp(o2));

  std::remove(u.c_str());
  std::remove(o1.c_str());
  std::remove(o2.c_str());
}

TEST_CASE("cli ds report prints the frozen two-photon value") {
  const std::string out = "io_ds.txt";
  CHECK(run_cli_cmd("ds --n 2 --eta 0.1 >" + out) == 0);
  CHECK(slurp(out) == "d_s = 0.990290338\nmethod = exact\n");
  CHECK(run_cli_cmd("ds --n 3 --eta 0.1 --method mc --samples 2000 --seed 7 "
                    "--format json >" +
                    out) == 0);
  const json j = json::parse(slurp(out));
  CHECK(j.at("method") == "mc");
  CHECK(j.at("samples") == 2000);
  CHECK(j.at("std_error").get<double>() > 0.0);
  std::remove(out.c_str());
}

TEST_CASE("cli required-purity round-trips the published operating point") {
  const std::string out = "io_req.txt";
  CHECK(run_cli_cmd("required-purity --n 20 --target 0.1 >" + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("purity = 0.988969") != std::string::npos);
  CHECK(text.find("eta = 0.07447") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("cli hom reports the closed-form coincidence") {
  const std::string out = "io_hom.txt";
  CHECK(run_cli_cmd("hom --eta 0.1 >" + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("coincidence = 0.00970966215") != std::string::npos);
  CHECK(text.find("visibility = 0.980580676") != std::string::npos);

  CHECK(run_cli_cmd("hom --dtau 0.2 --t 1 >" + out) == 0);
  CHECK(slurp(out) == text);

  CHECK(run_cli_cmd("hom --scan-points 3 --scan-max 2 --out " + out +
                    " >/dev/null") == 0);
  CHECK(slurp(out).rfind("dtau_over_t,eta,purity,coincidence\n0,0,1,0\n", 0) ==
        0);
  std::remove(out.c_str());
}

TEST_CASE("cli compare emits a parseable report with passing bounds") {
  const std::string cfg = "io_cmp_cfg.json";
  const std::string out = "io_cmp_out.json";
  spit(cfg, R"({"model": {"N": 2, "T": 1.0, "dtau": 0.2},
                "unitary": {"haar": {"M": 4, "seed": 5}},
                "samples": 1000, "seed": 11})");
  CHECK(run_cli_cmd("compare " + cfg + " --out " + out) == 0);
  const json j = json::parse(slurp(out));
  CHECK(j.at("N") == 2);
  CHECK(j.at("M") == 4);
  CHECK(j.at("eta").get<double>() == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(j.at("purity").get<double>() ==
        doctest::Approx(glint::purity_order_n(0.1, 2)).epsilon(1e-8));
  CHECK(j.at("ds_route") == "exact");
  CHECK(j.at("a_within_bound") == true);
  CHECK(j.at("b_within_bound") == true);
  CHECK(j.at("d_a").get<double>() >= 0.0);
  CHECK(j.at("d_b_err").get<double>() > 0.0);
  CHECK(j.at("bound").get<double>() ==
        doctest::Approx(1.0 - j.at("ds").get<double>()).epsilon(1e-6));

  // Deterministic for a fixed flag set, and seed overrides change d_b.
  const std::string out2 = "io_cmp_out2.json";
  CHECK(run_cli_cmd("compare " + cfg + " --out " + out2) == 0);
  CHECK(slurp(out) == slurp(out2));
  CHECK(run_cli_cmd("compare " + cfg + " --seed 12 --out " + out2) == 0);
  CHECK(json::parse(slurp(out2)).at("d_b") != j.at("d_b"));

  std::remove(cfg.c_str());
  std::remove(out.c_str());
  std::remove(out2.c_str());
}

TEST_CASE("cli compare rejects a non-unitary matrix quoting the residual") {
  const std::string u = "io_bad_u.json";
  const std::string cfg = "io_bad_cfg.json";
  const std::string err = "io_bad_err.txt";
  spit(u, R"({"m": 2, "re": [[1, 0], [0, 1]], "im": [[0, 0.5], [0, 0]]})");
  spit(cfg, R"({"model": {"N": 2, "T": 1, "dtau": 0.1},
                "unitary": ")" + u + R"("})");
  CHECK(run_cli_cmd("compare " + cfg + " 2>" + err + " >/dev/null") == 3);
  CHECK(slurp(err).find("residual") != std::string::npos);
  std::remove(u.c_str());
  std::remove(cfg.c_str());
  std::remove(err.c_str());
}

TEST_CASE("cli compare honors the closed ds route") {
  const std::string cfg = "io_cmp_closed.json";
  const std::string out = "io_cmp_closed_out.json";
  spit(cfg, R"({"model": {"N": 3, "T": 1.0, "dtau": 0.2},
                "unitary": {"haar": {"M": 5, "seed": 2}},
                "samples": 1000, "seed": 4})");
  CHECK(run_cli_cmd("compare " + cfg + " --route closed --out " + out) == 0);
  const json j = json::parse(slurp(out));
  CHECK(j.at("ds_route") == "closed");
  CHECK(j.at("ds").get<double>() ==
        doctest::Approx(glint::ds_closed_form(3, 0.1)).epsilon(1e-8));
  std::remove(cfg.c_str());
  std::remove(out.c_str());
}
