#pragma once

// Command-line front end: sweep, evolve, nmin, validate.
//
// Exit codes: 0 success, 1 runtime or validation failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "realism/realism.hpp"

namespace realism::cli {

enum class Command { sweep, evolve, nmin, validate };
enum class Format { csv, jsonl };

struct RunConfig {
  Command command = Command::sweep;
  int d = 2;
  double phi = std::numbers::pi / 4;  // radians once parsed
  int phi_points = 64;
  int n = 10;
  double delta = 0.01;
  std::uint64_t seed = 1;
  int trials = 200;
  double tolerance = 1e-10;
  std::string output;
  Format format = Format::csv;
  bool degrees = false;
  bool d_given = false;
  // Qubit-only overrides, "x,y,z".
  std::string r0_text, a_text, b_text, x_text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string g12(double v) { return realism::detail::format_g12(v); }

inline RVector parse_triple(const std::string& text, const char* flag) {
  std::vector<double> vals;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      vals.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": expected three comma-separated numbers");
    }
  }
  if (vals.size() != 3) throw UsageError(std::string(flag) + ": expected three comma-separated numbers");
  RVector v(3);
  v << vals[0], vals[1], vals[2];
  return v;
}

inline RVector parse_direction(const std::string& text, const char* flag, const RVector& fallback) {
  if (text.empty()) return fallback;
  const RVector v = parse_triple(text, flag);
  if (v.norm() < 1e-12) throw UsageError(std::string(flag) + ": direction must be nonzero");
  return v / v.norm();
}

/// Observables and initial state for evolve/nmin.
///
/// d = 2: b = z, a = (sin phi, 0, cos phi), x = x axis, r0 = z (overridable);
/// d = 3: |m=-1>, A = S_z cos phi + S_x sin phi, B = S_z, X = S_x;
/// d >= 4: random_instance(d, seed).
struct Scenario {
  GellMannBasis basis;
  BlochVector r0;
  ProjectiveObservable a;
  ProjectiveObservable b;
  ProjectiveObservable x;
};

inline Scenario build_scenario(const RunConfig& cfg) {
  GellMannBasis basis(cfg.d);
  if (cfg.d == 2) {
    RVector z(3), xaxis(3), a(3);
    z << 0, 0, 1;
    xaxis << 1, 0, 0;
    a << std::sin(cfg.phi), 0.0, std::cos(cfg.phi);
    const RVector a_hat = parse_direction(cfg.a_text, "--a", a);
    const RVector b_hat = parse_direction(cfg.b_text, "--b", z);
    const RVector x_hat = parse_direction(cfg.x_text, "--x", xaxis);
    RVector r0 = z;
    if (!cfg.r0_text.empty()) {
      r0 = parse_triple(cfg.r0_text, "--r0");
      if (r0.norm() > 1.0 + 1e-12) throw UsageError("--r0: qubit Bloch vector must have norm <= 1");
    }
    return {basis, BlochVector(2, r0), spin_observable(a_hat, basis), spin_observable(b_hat, basis),
            spin_observable(x_hat, basis)};
  }
  if (!cfg.r0_text.empty() || !cfg.a_text.empty() || !cfg.b_text.empty() || !cfg.x_text.empty()) {
    throw UsageError("--r0/--a/--b/--x are only available for --d 2");
  }
  if (cfg.d == 3) {
    const QutritSetup s = qutrit_setup(cfg.phi, basis);
    const ProjectiveObservable x = observable_from_matrix(spin1_operators().sx, basis);
    return {basis, to_bloch(s.rho, basis), s.a, s.b, x};
  }
  RandomInstance inst = random_instance(cfg.d, cfg.seed);
  BlochVector r0 = to_bloch(inst.rho, basis);
  return {std::move(basis), std::move(r0), std::move(inst.a), std::move(inst.b), std::move(inst.x)};
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_file_atomically(cfg.output, text);
  }
}

inline nlohmann::ordered_json finite_or_string(double v) {
  if (std::isinf(v)) return "infinity";
  return v;
}

}  // namespace detail

inline int run_sweep(const RunConfig& cfg, std::ostream& out) {
  const SweepGrid grid = qutrit_sweep(default_phi_grid(cfg.phi_points), cfg.n);
  emit_sweep_csv(grid, cfg.output);
  out << "wrote " << grid.results.size() << " rows to " << cfg.output << "\n";
  const double half_pi = std::numbers::pi / 2;
  if (std::abs(grid.phi_values.back() - half_pi) < 1e-12) {
    const double value = grid.at(grid.phi_values.size() - 1, 0);
    out << "phi_rad=" << detail::g12(half_pi) << " n=1 max_irreality_nats=" << detail::g12(value)
        << " deviation_from_0.015=" << detail::g12(value - 0.015) << "\n";
  } else {
    out << "grid does not contain phi = pi/2\n";
  }
  return kExitOk;
}

inline int run_evolve(const RunConfig& cfg, std::ostream& out) {
  const detail::Scenario sc = detail::build_scenario(cfg);
  const Trajectory traj = monitor(sc.r0, sc.a, sc.b, cfg.n, sc.x, sc.basis);
  std::string text;
  if (cfg.format == Format::csv) {
    text = "n,bloch_norm,epsilon,epsilon_defined,irreality_nats,bound_nats\n";
    for (const TrajectoryStep& s : traj.steps) {
      text += std::to_string(s.n) + "," + detail::g12(s.norm) + "," + detail::g12(s.epsilon) + "," +
              (s.epsilon_valid ? "1" : "0") + "," + detail::g12(s.irreality_x) + "," + detail::g12(s.bound_rhs) + "\n";
    }
  } else {
    for (const TrajectoryStep& s : traj.steps) {
      nlohmann::ordered_json row;
      row["n"] = s.n;
      row["bloch_norm"] = s.norm;
      row["epsilon"] = s.epsilon_valid ? nlohmann::ordered_json(s.epsilon) : nlohmann::ordered_json(nullptr);
      row["irreality_nats"] = s.irreality_x;
      row["bound_nats"] = s.bound_rhs;
      text += row.dump() + "\n";
    }
  }
  detail::emit(cfg, text, out);
  return kExitOk;
}

inline int run_nmin(const RunConfig& cfg, std::ostream& out) {
  const detail::Scenario sc = detail::build_scenario(cfg);
  const BoundReport rep = nmin_report(sc.r0, sc.a, sc.b, sc.x, cfg.delta, sc.basis);
  nlohmann::ordered_json rec;
  rec["d"] = cfg.d;
  rec["phi_rad"] = cfg.phi;
  rec["delta"] = rep.delta;
  rec["g_d"] = rep.g_d;
  rec["o_eps"] = rep.o_eps;
  rec["r0_norm"] = rep.r0_norm;
  rec["residual"] = rep.residual;
  rec["n_min"] = detail::finite_or_string(rep.n_min);
  if (rep.n_used) {
    rec["n_used"] = *rep.n_used;
    rec["achieved_irreality_nats"] = rep.irreality;
    rec["bound_at_n_used_nats"] = rep.ineq2_rhs;
  } else {
    rec["n_used"] = nullptr;
    rec["achieved_irreality_nats"] = nullptr;
    rec["bound_at_n_used_nats"] = nullptr;
    rec["note"] = "O(eps) = 1: the pairwise steps do not contract the Bloch vector, so delta is unreachable";
  }
  detail::emit(cfg, rec.dump() + "\n", out);
  return kExitOk;
}

inline int run_validate(const RunConfig& cfg, std::ostream& out) {
  validation::Options opt;
  opt.seed = cfg.seed;
  opt.trials = cfg.trials;
  opt.tolerance = cfg.tolerance;
  if (cfg.d_given) opt.dims = {cfg.d};
  bool all = true;
  std::string report;
  for (const validation::SuiteResult& r : validation::run_all(opt)) {
    all = all && r.passed;
    report += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " checks=" + std::to_string(r.trials) +
              " worst_margin=" + detail::g12(r.worst) + "\n";
    if (!r.passed) report += "  counterexample: " + r.counterexample + "\n";
  }
  out << report;
  if (!cfg.output.empty()) write_file_atomically(cfg.output, report);
  return all ? kExitOk : kExitFailure;
}

/// Parses argv and dispatches. Output goes to `out`, diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequential-measurement irreality simulator", "irreality_cli"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format_text = "csv";

  auto add_phi = [&](CLI::App* sub) {
    sub->add_option("--phi", cfg.phi, "Angle between the two measured spin directions (radians unless --degrees)");
    sub->add_flag("--degrees", cfg.degrees, "Interpret --phi in degrees");
  };
  auto add_d = [&](CLI::App* sub, int lo, int hi) {
    sub->add_option("--d", cfg.d, "Hilbert-space dimension")->check(CLI::Range(lo, hi));
  };

  CLI::App* sweep = app.add_subcommand("sweep", "Qutrit sweep of ln 3 - S(rho_n) over phi and n, written as CSV");
  sweep->add_option("--n-max", cfg.n, "Largest number of pairwise steps")->check(CLI::PositiveNumber);
  sweep->add_option("--phi-points", cfg.phi_points, "Uniform phi samples on [0, pi/2]")->check(CLI::PositiveNumber);
  sweep->add_option("-o,--output", cfg.output, "CSV destination (default sweep.csv)");

  CLI::App* evolve = app.add_subcommand("evolve", "Per-step norms, eps, irreality and bound along one trajectory");
  add_d(evolve, 2, 16);
  add_phi(evolve);
  evolve->add_option("--n-max", cfg.n, "Number of pairwise steps")->check(CLI::PositiveNumber);
  evolve->add_option("--seed", cfg.seed, "Seed for random instances (d >= 4)");
  evolve->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
  evolve->add_option("-o,--output", cfg.output, "Destination file (default stdout)");
  for (auto [flag, target] : {std::pair{"--r0", &cfg.r0_text}, {"--a", &cfg.a_text}, {"--b", &cfg.b_text}, {"--x", &cfg.x_text}}) {
    evolve->add_option(flag, *target, "Qubit vector x,y,z");
  }

  CLI::App* nmin = app.add_subcommand("nmin", "Steps sufficient to push the irreality of X below delta");
  add_d(nmin, 2, 16);
  add_phi(nmin);
  nmin->add_option("--delta", cfg.delta, "Target irreality in nats")->check(CLI::PositiveNumber);
  nmin->add_option("--seed", cfg.seed, "Seed for random instances (d >= 4)");
  nmin->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"jsonl"}));
  nmin->add_option("-o,--output", cfg.output, "Destination file (default stdout)");
  for (auto [flag, target] : {std::pair{"--r0", &cfg.r0_text}, {"--a", &cfg.a_text}, {"--b", &cfg.b_text}, {"--x", &cfg.x_text}}) {
    nmin->add_option(flag, *target, "Qubit vector x,y,z");
  }

  CLI::App* validate = app.add_subcommand("validate", "Seeded oracle-equivalence and inequality suites");
  add_d(validate, 2, 16);
  validate->add_option("--seed", cfg.seed, "Suite seed");
  validate->add_option("--trials", cfg.trials, "Random trials per suite and dimension")->check(CLI::PositiveNumber);
  validate->add_option("--tolerance", cfg.tolerance, "Equality tolerance")->check(CLI::PositiveNumber);
  validate->add_option("-o,--output", cfg.output, "Also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (sweep->parsed()) {
    cfg.command = Command::sweep;
    if (cfg.output.empty()) cfg.output = "sweep.csv";
  } else if (evolve->parsed()) {
    cfg.command = Command::evolve;
  } else if (nmin->parsed()) {
    cfg.command = Command::nmin;
  } else {
    cfg.command = Command::validate;
    cfg.d_given = validate->count("--d") > 0;
  }
  cfg.format = format_text == "jsonl" ? Format::jsonl : Format::csv;
  if (cfg.command == Command::nmin) cfg.format = Format::jsonl;
  if (cfg.degrees) cfg.phi *= std::numbers::pi / 180.0;

  try {
    switch (cfg.command) {
      case Command::sweep:
        return run_sweep(cfg, out);
      case Command::evolve:
        return run_evolve(cfg, out);
      case Command::nmin:
        return run_nmin(cfg, out);
      case Command::validate:
        return run_validate(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace realism::cli
