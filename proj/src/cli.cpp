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

#include "glint/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "glint/distinguishability.hpp"
#include "glint/errors.hpp"
#include "glint/interference.hpp"
#include "glint/io.hpp"
#include "glint/linalg.hpp"
#include "glint/metrics.hpp"
#include "glint/photon_model.hpp"

namespace glint {

namespace {

// All numeric output goes through this: 9 significant digits, the point
// where Monte-Carlo noise dominates and below which diffs churn.
std::string fmt9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw ValidationError(out_path + ": cannot open file for writing");
  os << text;
  os.flush();
  if (!os) throw ValidationError(out_path + ": write failed");
}

// Flat JSON object with a fixed field order; fields arrive preformatted as
// `"key": value` strings.
std::string json_object(const std::vector<std::string>& fields) {
  std::string s = "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    s += "  " + fields[i];
    if (i + 1 < fields.size()) s += ",";
    s += "\n";
  }
  s += "}\n";
  return s;
}

std::string jnum(const std::string& key, double v) {
  return "\"" + key + "\": " + fmt9(v);
}

std::string jint(const std::string& key, long long v) {
  return "\"" + key + "\": " + std::to_string(v);
}

std::string jstr(const std::string& key, const std::string& v) {
  return "\"" + key + "\": \"" + v + "\"";
}

std::string jbool(const std::string& key, bool v) {
  return "\"" + key + "\": " + fmt_bool(v);
}

int checked_sample_count(long long samples) {
  if (samples > std::numeric_limits<int>::max()) {
    throw SizeError("sample count too large");
  }
  return static_cast<int>(samples);
}

// Model parameters shared by the prob-a / prob-b / hom commands. eta is
// dtau / (2 T); passing --eta is shorthand for --t 1 --dtau 2*eta.
struct ModelFlags {
  int n = 0;
  double t = 1.0;
  double dtau = 0.0;
  std::vector<double> omega;
};

void add_model_flags(CLI::App* sub, const std::shared_ptr<ModelFlags>& mf) {
  sub->add_option("--n", mf->n, "number of photons N")->required();
  sub->add_option("--t", mf->t, "pulse width T (default 1)");
  sub->add_option("--dtau", mf->dtau,
                  "arrival-time spread dtau (default 0, i.e. pure photons)");
  sub->add_option("--omega", mf->omega,
                  "comma-separated carrier frequencies, N entries")
      ->delimiter(',');
}

GaussianModel model_from_flags(const ModelFlags& mf) {
  return make_model(mf.n, mf.t, mf.dtau, mf.omega);
}

// Unitary source shared by prob-a / prob-b: a JSON file or a Haar draw.
struct UnitaryFlags {
  std::string path;
  int haar_m = 0;
  std::uint64_t haar_seed = 0;
};

void add_unitary_flags(CLI::App* sub, const std::shared_ptr<UnitaryFlags>& uf) {
  auto* grp = sub->add_option_group("unitary source");
  auto* po = grp->add_option("--unitary", uf->path, "unitary JSON file");
  auto* mo = grp->add_option("--haar-m", uf->haar_m,
                             "draw a Haar-random unitary of this dimension");
  grp->require_option(1);
  po->excludes(mo);
  sub->add_option("--haar-seed", uf->haar_seed,
                  "seed for the Haar draw (default 0)")
      ->needs(mo);
}

UnitaryMatrix unitary_from_flags(const UnitaryFlags& uf) {
  if (!uf.path.empty()) return load_unitary(uf.path);
  return haar_unitary(uf.haar_m, uf.haar_seed);
}

ProbPath path_from_name(const std::string& route) {
  return route == "direct" ? ProbPath::Direct : ProbPath::Grouped;
}

// ---------------------------------------------------------------------------
// purity: table of Tr(rho^n) exact vs exponential approximation.

struct PurityOpts {
  double eta = 0.0;
  int n_max = 20;
  std::string format = "csv";
  std::string out;
};

void run_purity(const PurityOpts& o) {
  if (o.n_max < 1 || o.n_max > 200) {
    throw ValidationError("--n-max must be in [1, 200]");
  }
  std::string text;
  if (o.format == "csv") {
    text += "n,exact,approx,rel_diff\n";
  } else {
    text += "[\n";
  }
  for (int n = 1; n <= o.n_max; ++n) {
    const double exact = purity_order_n(o.eta, n);
    const double approx = purity_approx(o.eta, n);
    const double rel_diff = (exact - approx) / exact;
    if (o.format == "csv") {
      text += std::to_string(n) + "," + fmt9(exact) + "," + fmt9(approx) +
              "," + fmt9(rel_diff) + "\n";
    } else {
      text += "  {" + jint("n", n) + ", " + jnum("exact", exact) + ", " +
              jnum("approx", approx) + ", " + jnum("rel_diff", rel_diff) +
              "}" + (n < o.n_max ? "," : "") + "\n";
    }
  }
  if (o.format != "csv") text += "]\n";
  emit(text, o.out);
}

// ---------------------------------------------------------------------------
// ds: average group weight (indistinguishability) by three methods.

struct DsOpts {
  int n = 0;
  double eta = 0.0;
  std::string method = "exact";
  std::uint64_t seed = 0;
  long long samples = 100000;
  std::string format = "text";
};

void run_ds(const DsOpts& o) {
  double value = 0.0;
  MonteCarloEstimate mc;
  if (o.method == "exact") {
    if (o.n > 10) {
      throw SizeError(
          "N > 10 is too large for the exact N! permutation sum; "
          "use --method closed, which handles any N");
    }
    value = ds_exact(DistFunctionA(make_model(o.n, 1.0, 2.0 * o.eta)));
  } else if (o.method == "closed") {
    value = ds_closed_form(o.n, o.eta);
  } else {
    mc = ds_monte_carlo(DistFunctionB(make_model(o.n, 1.0, 2.0 * o.eta)),
                        o.seed, checked_sample_count(o.samples));
    value = mc.estimate;
  }

  if (o.format == "json") {
    std::vector<std::string> fields{jint("N", o.n), jnum("eta", o.eta),
                                    jstr("method", o.method),
                                    jnum("d_s", value)};
    if (o.method == "mc") {
      fields.push_back(jnum("std_error", mc.std_error));
      fields.push_back(jint("samples", mc.samples));
      fields.push_back(jint("seed", static_cast<long long>(o.seed)));
    }
    emit(json_object(fields), "");
    return;
  }
  std::string text = "d_s = " + fmt9(value) + "\nmethod = " + o.method + "\n";
  if (o.method == "mc") {
    text += "std_error = " + fmt9(mc.std_error) + "\n";
    text += "samples = " + std::to_string(mc.samples) + "\n";
  }
  emit(text, "");
}

// ---------------------------------------------------------------------------
// compare: distances to the ideal for both detection setups, plus the bound.

struct CompareOpts {
  std::string config_path;
  std::string route = "exact";
  long long samples_override = 0;
  std::uint64_t seed_override = 0;
  CLI::Option* samples_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  std::string out;
};

void run_compare(const CompareOpts& o) {
  CompareConfig cfg = load_compare_config(o.config_path);
  if (o.samples_opt->count() > 0) cfg.samples = o.samples_override;
  if (o.seed_opt->count() > 0) cfg.seed = o.seed_override;

  const Experiment exp = make_experiment(cfg.model, cfg.unitary);
  const DsRoute route =
      o.route == "closed" ? DsRoute::ClosedForm : DsRoute::Exact;
  const DistSummary s = compare_setups(exp, cfg.seed,
                                       checked_sample_count(cfg.samples),
                                       route);

  emit(json_object({
           jint("N", exp.n_photons()),
           jint("M", exp.n_ports()),
           jnum("eta", eta(cfg.model)),
           jnum("d_a", s.d_a),
           jnum("d_b", s.d_b.estimate),
           jnum("d_b_err", s.d_b.std_error),
           jint("samples", s.d_b.samples),
           jint("seed", static_cast<long long>(cfg.seed)),
           jnum("ds", s.ds),
           jstr("ds_route", s.ds_route == DsRoute::Exact ? "exact" : "closed"),
           jnum("bound", s.bound),
           jnum("purity", s.purity),
           jbool("a_within_bound", s.a_within_bound),
           jbool("b_within_bound", s.b_within_bound),
       }),
       o.out);
}

// ---------------------------------------------------------------------------
// required-purity: invert the deviation bound for a photon count.

struct RequiredPurityOpts {
  int n = 0;
  double target = 0.0;
  std::string format = "text";
};

void run_required_purity(const RequiredPurityOpts& o) {
  const double purity = required_purity(o.n, o.target);
  const double eta_eq = eta_for_purity(purity);
  if (o.format == "json") {
    emit(json_object({jint("N", o.n), jnum("target", o.target),
                      jnum("purity", purity), jnum("eta", eta_eq)}),
         "");
    return;
  }
  emit("purity = " + fmt9(purity) + "\neta = " + fmt9(eta_eq) + "\n", "");
}

// ---------------------------------------------------------------------------
// haar: draw a Haar-random unitary and write it as JSON.

struct HaarOpts {
  int m = 0;
  std::uint64_t seed = 0;
  std::string out;
};

void run_haar(const HaarOpts& o) {
  if (o.m < 1 || o.m > 64) throw ValidationError("--m must be in [1, 64]");
  const UnitaryMatrix u = haar_unitary(o.m, o.seed);
  save_unitary(u, o.out);
  emit("residual = " + fmt9(u.residual()) + "\n", "");
}

// ---------------------------------------------------------------------------
// prob-a: probability of one ordered output tuple, time-unresolved setup.

struct ProbAOpts {
  std::shared_ptr<ModelFlags> model = std::make_shared<ModelFlags>();
  std::shared_ptr<UnitaryFlags> unitary = std::make_shared<UnitaryFlags>();
  std::vector<int> ports;
  std::string kind = "mixed";
  std::string route = "grouped";
};

void run_prob_a(const ProbAOpts& o) {
  const Experiment exp =
      make_experiment(model_from_flags(*o.model), unitary_from_flags(*o.unitary));
  const OutputTuple l{o.ports};
  double p = 0.0;
  if (o.kind == "ideal") {
    p = prob_a_ideal(exp, l);
  } else if (o.kind == "classical") {
    p = prob_a_classical(exp, l);
  } else {
    p = prob_a(exp, l, path_from_name(o.route));
  }
  emit(fmt9(p) + "\n", "");
}

// ---------------------------------------------------------------------------
// prob-b: joint density of one ordered tuple and its detection times.

struct ProbBOpts {
  std::shared_ptr<ModelFlags> model = std::make_shared<ModelFlags>();
  std::shared_ptr<UnitaryFlags> unitary = std::make_shared<UnitaryFlags>();
  std::vector<int> ports;
  std::vector<double> times;
  std::string kind = "mixed";
  std::string route = "grouped";
};

void run_prob_b(const ProbBOpts& o) {
  const Experiment exp =
      make_experiment(model_from_flags(*o.model), unitary_from_flags(*o.unitary));
  const OutputTuple l{o.ports};
  const TimeTuple t{o.times};
  const double p = o.kind == "ideal"
                       ? prob_b_ideal(exp, l, t)
                       : prob_b(exp, l, t, path_from_name(o.route));
  emit(fmt9(p) + "\n", "");
}

// ---------------------------------------------------------------------------
// hom: two-photon coincidence at a balanced coupler.

struct HomOpts {
  double eta = -1.0;
  double t = 1.0;
  double dtau = -1.0;
  std::string format = "text";
  int scan_points = 0;
  double scan_max = 3.0;
  std::string out;
};

void run_hom(const HomOpts& o) {
  if (o.scan_points > 0) {
    if (o.scan_points < 2) throw ValidationError("--scan-points must be >= 2");
    if (!(o.scan_max > 0.0)) throw ValidationError("--scan-max must be > 0");
    std::string text = "dtau_over_t,eta,purity,coincidence\n";
    for (int k = 0; k < o.scan_points; ++k) {
      const double ratio = o.scan_max * k / (o.scan_points - 1);
      const double e = ratio / 2.0;
      const double p = purity_order_n(e, 2);
      text += fmt9(ratio) + "," + fmt9(e) + "," + fmt9(p) + "," +
              fmt9((1.0 - p) / 2.0) + "\n";
    }
    emit(text, o.out);
    return;
  }

  if (o.eta >= 0.0 && o.dtau >= 0.0) {
    throw ValidationError("give either --eta or --dtau, not both");
  }
  double eta_val = 0.0;
  if (o.eta >= 0.0) {
    eta_val = o.eta;
  } else if (o.dtau >= 0.0) {
    if (!(o.t > 0.0)) throw ValidationError("--t must be positive");
    eta_val = o.dtau / (2.0 * o.t);
  } else {
    throw ValidationError("one of --eta or --dtau is required");
  }

  const double purity = purity_order_n(eta_val, 2);
  const double coincidence = (1.0 - purity) / 2.0;
  const double bunching = (1.0 + purity) / 2.0;
  if (o.format == "json") {
    emit(json_object({jnum("eta", eta_val), jnum("purity", purity),
                      jnum("coincidence", coincidence),
                      jnum("bunching", bunching),
                      jnum("visibility", purity)}),
         o.out);
    return;
  }
  emit("eta = " + fmt9(eta_val) + "\npurity = " + fmt9(purity) +
           "\ncoincidence = " + fmt9(coincidence) +
           "\nbunching = " + fmt9(bunching) +
           "\nvisibility = " + fmt9(purity) + "\n",
       o.out);
}

// ---------------------------------------------------------------------------

void register_commands(CLI::App& app) {
  {
    auto o = std::make_shared<PurityOpts>();
    auto* sub = app.add_subcommand(
        "purity", "table of single-photon purities Tr(rho^n), exact vs "
                  "exponential approximation");
    sub->add_option("--eta", o->eta, "arrival-time spread over 2T")
        ->required();
    sub->add_option("--n-max", o->n_max, "largest order n (default 20)");
    sub->add_option("--format", o->format, "csv or json (default csv)")
        ->transform(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o->out, "output file (default stdout)");
    sub->callback([o] { run_purity(*o); });
  }
  {
    auto o = std::make_shared<DsOpts>();
    auto* sub = app.add_subcommand(
        "ds", "average group weight d_s (indistinguishability measure)");
    sub->add_option("--n", o->n, "number of photons N")->required();
    sub->add_option("--eta", o->eta, "arrival-time spread over 2T")
        ->required();
    sub->add_option("--method", o->method,
                    "exact | closed | mc (default exact)")
        ->transform(CLI::IsMember({"exact", "closed", "mc"}));
    sub->add_option("--seed", o->seed, "RNG seed for --method mc (default 0)");
    sub->add_option("--samples", o->samples,
                    "sample count for --method mc (default 100000)");
    sub->add_option("--format", o->format, "text or json (default text)")
        ->transform(CLI::IsMember({"text", "json"}));
    sub->callback([o] { run_ds(*o); });
  }
  {
    auto o = std::make_shared<CompareOpts>();
    auto* sub = app.add_subcommand(
        "compare", "distances between mixed and ideal output distributions "
                   "for both detection setups, with the 1 - d_s bound");
    sub->add_option("config", o->config_path, "JSON config file")->required();
    sub->add_option("--route", o->route,
                    "d_s evaluation: exact or closed (default exact)")
        ->transform(CLI::IsMember({"exact", "closed"}));
    o->samples_opt = sub->add_option("--samples", o->samples_override,
                                     "override the config sample count");
    o->seed_opt =
        sub->add_option("--seed", o->seed_override, "override the config seed");
    sub->add_option("--out", o->out, "output file (default stdout)");
    sub->callback([o] { run_compare(*o); });
  }
  {
    auto o = std::make_shared<RequiredPurityOpts>();
    auto* sub = app.add_subcommand(
        "required-purity",
        "single-photon purity needed to keep the deviation bound at a target");
    sub->add_option("--n", o->n, "number of photons N")->required();
    sub->add_option("--target", o->target, "deviation bound target in (0, 1)")
        ->required();
    sub->add_option("--format", o->format, "text or json (default text)")
        ->transform(CLI::IsMember({"text", "json"}));
    sub->callback([o] { run_required_purity(*o); });
  }
  {
    auto o = std::make_shared<HaarOpts>();
    auto* sub = app.add_subcommand(
        "haar", "draw a Haar-random unitary and write it as JSON");
    sub->add_option("--m", o->m, "dimension, 1..64")->required();
    sub->add_option("--seed", o->seed, "RNG seed (default 0)");
    sub->add_option("--out", o->out, "output JSON file")->required();
    sub->callback([o] { run_haar(*o); });
  }
  {
    auto o = std::make_shared<ProbAOpts>();
    auto* sub = app.add_subcommand(
        "prob-a", "probability of one ordered output tuple, "
                  "time-unresolved detection");
    add_model_flags(sub, o->model);
    add_unitary_flags(sub, o->unitary);
    sub->add_option("--ports", o->ports,
                    "comma-separated 1-based output ports, N entries")
        ->required()
        ->delimiter(',');
    sub->add_option("--kind", o->kind,
                    "mixed | ideal | classical (default mixed)")
        ->transform(CLI::IsMember({"mixed", "ideal", "classical"}));
    sub->add_option("--route", o->route,
                    "grouped or direct evaluation (default grouped)")
        ->transform(CLI::IsMember({"grouped", "direct"}));
    sub->callback([o] { run_prob_a(*o); });
  }
  {
    auto o = std::make_shared<ProbBOpts>();
    auto* sub = app.add_subcommand(
        "prob-b", "joint density of one ordered output tuple and its "
                  "detection times (units 1/T^N)");
    add_model_flags(sub, o->model);
    add_unitary_flags(sub, o->unitary);
    sub->add_option("--ports", o->ports,
                    "comma-separated 1-based output ports, N entries")
        ->required()
        ->delimiter(',');
    sub->add_option("--times", o->times,
                    "comma-separated detection times, N entries")
        ->required()
        ->delimiter(',');
    sub->add_option("--kind", o->kind, "mixed | ideal (default mixed)")
        ->transform(CLI::IsMember({"mixed", "ideal"}));
    sub->add_option("--route", o->route,
                    "grouped or direct evaluation (default grouped)")
        ->transform(CLI::IsMember({"grouped", "direct"}));
    sub->callback([o] { run_prob_b(*o); });
  }
  {
    auto o = std::make_shared<HomOpts>();
    auto* sub = app.add_subcommand(
        "hom", "two-photon coincidence at a balanced two-port coupler");
    sub->add_option("--eta", o->eta, "arrival-time spread over 2T");
    sub->add_option("--t", o->t, "pulse width T (default 1, with --dtau)");
    sub->add_option("--dtau", o->dtau, "arrival-time spread");
    sub->add_option("--format", o->format, "text or json (default text)")
        ->transform(CLI::IsMember({"text", "json"}));
    sub->add_option("--scan-points", o->scan_points,
                    "emit a CSV dip curve with this many rows instead");
    sub->add_option("--scan-max", o->scan_max,
                    "largest dtau/T in the scan (default 3)");
    sub->add_option("--out", o->out, "output file (default stdout)");
    sub->callback([o] { run_hom(*o); });
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"partially distinguishable boson-sampling calculator"};
  app.require_subcommand(1);
  register_commands(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const NumericRangeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace glint
