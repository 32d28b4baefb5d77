#pragma once

// Seeded property suites: Hilbert-space vs Bloch-space equivalence and the
// inequalities behind the irreality bound. Each suite reports its worst
// observed slack and, on failure, the first counterexample.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "realism/bounds.hpp"
#include "realism/channels.hpp"
#include "realism/entropy.hpp"
#include "realism/experiments.hpp"
#include "realism/monitor.hpp"
#include "realism/random.hpp"

namespace realism::validation {

struct Options {
  std::uint64_t seed = 1;
  int trials = 200;
  std::vector<int> dims{2, 3};
  double tolerance = 1e-10;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  int trials = 0;
  double worst = 0.0;  // largest violation margin seen (<= 0 means slack everywhere)
  std::string counterexample;
};

namespace detail {

inline std::string matrix_text(const CMatrix& m) {
  std::ostringstream out;
  out.precision(17);
  out << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << (i ? ",[" : "[");
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out << (j ? "," : "") << "[" << m(i, j).real() << "," << m(i, j).imag() << "]";
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

inline std::string describe(int d, int trial, double value, double limit, const CMatrix& rho) {
  std::ostringstream out;
  out.precision(17);
  out << "{\"d\":" << d << ",\"trial\":" << trial << ",\"value\":" << value << ",\"limit\":" << limit
      << ",\"rho\":" << matrix_text(rho) << "}";
  return out.str();
}

// value <= limit is a pass; records the first failure.
inline void record(SuiteResult& res, double value, double limit, int d, int trial, const CMatrix& rho) {
  ++res.trials;
  const double margin = value - limit;
  if (res.trials == 1 || margin > res.worst) res.worst = margin;
  if (margin > 0.0 && res.passed) {
    res.passed = false;
    res.counterexample = describe(d, trial, value, limit, rho);
  }
}

inline Rng suite_rng(const Options& opt, int suite, int d) {
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(d)};
  return Rng(seq);
}

}  // namespace detail

inline SuiteResult oracle_equivalence(const Options& opt) {
  SuiteResult res{"oracle-equivalence"};
  for (int d : opt.dims) {
    const GellMannBasis basis(d);
    Rng rng = detail::suite_rng(opt, 1, d);
    for (int t = 0; t < opt.trials; ++t) {
      const DensityMatrix rho = random_state(d, rng);
      const ProjectiveObservable a = random_observable(basis, rng);
      const ProjectiveObservable b = random_observable(basis, rng);
      const BlochVector r1 = pairwise_step(to_bloch(rho, basis), simplex_projector(a), simplex_projector(b));
      const double dev = realism::detail::max_abs_entry(from_bloch(r1, basis).matrix() - phi_map(phi_map(rho, a), b).matrix());
      detail::record(res, dev, opt.tolerance, d, t, rho.matrix());
    }
  }
  return res;
}

inline SuiteResult stinespring(const Options& opt) {
  SuiteResult res{"stinespring-dilation"};
  for (int d : opt.dims) {
    const GellMannBasis basis(d);
    Rng rng = detail::suite_rng(opt, 2, d);
    for (int t = 0; t < opt.trials; ++t) {
      const DensityMatrix rho = random_state(d, rng);
      detail::record(res, stinespring_check(rho, random_observable(basis, rng)), opt.tolerance, d, t, rho.matrix());
    }
  }
  return res;
}

inline SuiteResult irreality_forms(const Options& opt) {
  SuiteResult res{"irreality-relative-entropy-form"};
  for (int d : opt.dims) {
    const GellMannBasis basis(d);
    Rng rng = detail::suite_rng(opt, 3, d);
    for (int t = 0; t < opt.trials; ++t) {
      const DensityMatrix rho = random_state(d, rng);
      const ProjectiveObservable x = random_observable(basis, rng);
      const double value = irreality(x, rho);
      const double dev = std::abs(value - relative_entropy(rho, phi_map(rho, x)));
      detail::record(res, std::max(dev, -value), opt.tolerance, d, t, rho.matrix());
    }
  }
  return res;
}

/// irreality(X, rho_n) <= g(d) sqrt(||(1-P_X) r_hat_n||) sqrt(||r_n||) for n <= 8.
inline SuiteResult theorem_bound(const Options& opt) {
  SuiteResult res{"theorem-bound"};
  for (int d : opt.dims) {
    const GellMannBasis basis(d);
    Rng rng = detail::suite_rng(opt, 4, d);
    std::uniform_int_distribution<int> steps(1, 8);
    for (int t = 0; t < opt.trials; ++t) {
      const DensityMatrix rho = random_state(d, rng);
      const ProjectiveObservable a = random_observable(basis, rng);
      const ProjectiveObservable b = random_observable(basis, rng);
      const ProjectiveObservable x = random_observable(basis, rng);
      const int n = steps(rng);
      const Trajectory traj = monitor(to_bloch(rho, basis), a, b, n, x, basis);
      const TrajectoryStep& last = traj.steps.back();
      const double limit = last.norm < 1e-12 ? 0.0 : last.bound_rhs;
      detail::record(res, last.irreality_x, limit + opt.tolerance, d, t, rho.matrix());
    }
  }
  return res;
}

/// Fannes/Audenaert, trace-norm Hoelder step, and H_bin(T) <= sqrt(2T).
inline SuiteResult entropy_inequalities(const Options& opt) {
  SuiteResult res{"entropy-inequalities"};
  for (int d : opt.dims) {
    Rng rng = detail::suite_rng(opt, 5, d);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int t = 0; t < opt.trials; ++t) {
      const DensityMatrix rho = random_state(d, rng);
      const double w = unif(rng);
      const DensityMatrix pure = DensityMatrix::pure(ginibre(d, 1, rng).col(0));
      const DensityMatrix sigma(w * pure.matrix() + (1.0 - w) * random_state(d, rng).matrix());
      const CMatrix diff = rho.matrix() - sigma.matrix();
      const double tdist = std::min(1.0, 0.5 * schatten_norm(diff, 1));
      const double gap = std::abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma));
      detail::record(res, gap, tdist * std::log(d - 1.0) + binary_entropy(tdist) + opt.tolerance, d, t, rho.matrix());
      detail::record(res, schatten_norm(diff, 1), std::sqrt(static_cast<double>(d)) * schatten_norm(diff, 2) + opt.tolerance,
                     d, t, rho.matrix());
      detail::record(res, binary_entropy(tdist), std::sqrt(2.0 * tdist) + opt.tolerance, d, t, rho.matrix());
    }
  }
  return res;
}

/// Qubit closed form for r_n and the closed-form irreality bound.
inline SuiteResult qubit_closed_form_suite(const Options& opt) {
  SuiteResult res{"qubit-closed-form"};
  const GellMannBasis basis(2);
  Rng rng = detail::suite_rng(opt, 6, 2);
  for (int t = 0; t < opt.trials; ++t) {
    const RVector a = random_unit_vector(3, rng);
    const RVector b = random_unit_vector(3, rng);
    const RVector x = random_unit_vector(3, rng);
    const DensityMatrix rho = random_state(2, rng);
    const BlochVector r0 = to_bloch(rho, basis);
    const Trajectory traj = monitor(r0, spin_observable(a, basis), spin_observable(b, basis), 10, spin_observable(x, basis), basis);
    for (const TrajectoryStep& s : traj.steps) {
      const double dev = (qubit_closed_form(r0.coords(), a, b, s.n).coords() - s.r.coords()).norm();
      detail::record(res, dev, 1e-12, 2, t, rho.matrix());
      const double bound = qubit_irreality_bound(a.dot(r0.coords()), a.dot(b), x.dot(b), s.n);
      detail::record(res, s.irreality_x, bound + opt.tolerance, 2, t, rho.matrix());
    }
  }
  return res;
}

/// irreality at max(1, ceil(n_min)) <= delta whenever O(eps) < 1 - 1e-6.
inline SuiteResult nmin_sufficiency(const Options& opt) {
  SuiteResult res{"nmin-sufficiency"};
  for (int d : opt.dims) {
    const GellMannBasis basis(d);
    Rng rng = detail::suite_rng(opt, 7, d);
    for (int t = 0; t < opt.trials; ++t) {
      const DensityMatrix rho = random_state(d, rng);
      const ProjectiveObservable a = random_observable(basis, rng);
      const ProjectiveObservable b = random_observable(basis, rng);
      const ProjectiveObservable x = random_observable(basis, rng);
      for (double delta : {0.1, 0.01}) {
        const BoundReport rep = nmin_report(to_bloch(rho, basis), a, b, x, delta, basis);
        if (!(rep.o_eps < 1.0 - 1e-6) || !rep.n_used) continue;
        detail::record(res, rep.irreality, delta, d, t, rho.matrix());
      }
    }
  }
  return res;
}

/// Mutually unbiased A, B (computational and Fourier bases) erase the Bloch
/// vector in one pairwise step, leaving every X real.
inline SuiteResult mub_one_shot(const Options& opt) {
  SuiteResult res{"mub-one-shot"};
  for (int d : opt.dims) {
    const GellMannBasis basis(d);
    Rng rng = detail::suite_rng(opt, 8, d);
    std::vector<double> vals;
    for (int k = 0; k < d; ++k) vals.push_back(d - 1.0 - k);
    const ProjectiveObservable a = observable_from_basis(CMatrix::Identity(d, d), vals, basis);
    const ProjectiveObservable b = observable_from_basis(fourier_basis(d), vals, basis);
    for (int t = 0; t < opt.trials; ++t) {
      const DensityMatrix rho = random_state(d, rng);
      const Trajectory traj = monitor(to_bloch(rho, basis), a, b, 1, random_observable(basis, rng), basis);
      detail::record(res, traj.steps[0].norm, 1e-12, d, t, rho.matrix());
      detail::record(res, std::abs(traj.steps[0].irreality_x), opt.tolerance, d, t, rho.matrix());
    }
  }
  return res;
}

inline std::vector<SuiteResult> run_all(const Options& opt) {
  std::vector<SuiteResult> out;
  out.push_back(oracle_equivalence(opt));
  out.push_back(stinespring(opt));
  out.push_back(irreality_forms(opt));
  out.push_back(theorem_bound(opt));
  out.push_back(entropy_inequalities(opt));
  if (std::find(opt.dims.begin(), opt.dims.end(), 2) != opt.dims.end()) out.push_back(qubit_closed_form_suite(opt));
  out.push_back(nmin_sufficiency(opt));
  out.push_back(mub_one_shot(opt));
  return out;
}

}  // namespace realism::validation
