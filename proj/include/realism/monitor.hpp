#pragma once

// Sequential pairwise monitoring r_n = (P_B P_A)^n r_0 and the n_min
// prescription built on top of it.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "realism/bounds.hpp"
#include "realism/channels.hpp"

namespace realism {

struct TrajectoryStep {
  int n = 0;
  BlochVector r;
  double norm = 0.0;
  double epsilon = 0.0;        // ||r_n|| / ||r_{n-1}||, or 0 when r_{n-1} is the center
  bool epsilon_valid = false;  // false when ||r_{n-1}|| <= tol::zero_norm
  double irreality_x = 0.0;    // nats
  double bound_rhs = 0.0;      // nats
};

struct Trajectory {
  BlochVector r0;
  std::vector<TrajectoryStep> steps;
};

namespace detail {

// Ratios within round-off of 1 are snapped to 1 so commuting configurations
// report O(eps) = 1 exactly.
inline double contraction_ratio(double current, double previous) {
  const double eps = current / previous;
  return eps > 1.0 - tol::algebraic ? 1.0 : std::max(0.0, eps);
}

}  // namespace detail

inline Trajectory monitor(const BlochVector& r0, const ProjectiveObservable& obs_a, const ProjectiveObservable& obs_b,
                          int n, const ProjectiveObservable& x, const GellMannBasis& basis) {
  if (n < 1) throw InvalidArgument("monitor: n must be >= 1");
  for (int d : {obs_a.dim, obs_b.dim, x.dim, basis.dim()}) detail::require_same_dim(r0.dim(), d, "monitor");

  const SimplexProjector pa = simplex_projector(obs_a);
  const SimplexProjector pb = simplex_projector(obs_b);
  const SimplexProjector px = simplex_projector(x);
  const RMatrix step_map = pb.matrix() * pa.matrix();

  Trajectory traj{r0, {}};
  traj.steps.reserve(static_cast<std::size_t>(n));
  RVector current = r0.coords();
  double previous_norm = r0.norm();
  for (int k = 1; k <= n; ++k) {
    current = step_map * current;
    BlochVector rk(r0.dim(), current);
    TrajectoryStep step{k, rk, rk.norm()};
    step.epsilon_valid = previous_norm > tol::zero_norm;
    step.epsilon = step.epsilon_valid ? detail::contraction_ratio(step.norm, previous_norm) : 0.0;
    step.irreality_x = irreality(x, from_bloch(rk, basis));
    step.bound_rhs = ineq2_rhs(rk, px);
    previous_norm = step.norm;
    traj.steps.push_back(std::move(step));
  }
  return traj;
}

/// O(eps): the largest contraction ratio over steps with a defined ratio.
///
/// The product bound prod eps_k <= O(eps)^n needs the maximum; a minimum would
/// not bound the product from above.
inline double o_epsilon(const Trajectory& traj) {
  double best = -1.0;
  for (const TrajectoryStep& s : traj.steps) {
    if (s.epsilon_valid) best = std::max(best, s.epsilon);
  }
  if (best < 0.0) throw InvalidArgument("o_epsilon: trajectory has no step with a defined contraction ratio");
  return best;
}

struct BoundReport {
  double irreality = 0.0;  // achieved at n_used, nats
  double ineq2_rhs = 0.0;  // at n_used, nats
  double g_d = 0.0;
  double o_eps = 0.0;
  double n_min = 0.0;  // may be +infinity
  double delta = 0.0;
  double r0_norm = 0.0;
  double residual = 0.0;  // max ||(1 - P_X) r_hat_k|| over the horizon
  int horizon = 0;
  std::optional<int> n_used;  // max(1, ceil(n_min)) when finite
};

/// Evaluates the n_min prescription for a concrete configuration.
///
/// O(eps) and the residual are maximized over a horizon that is doubled until
/// it covers ceil(n_min), so the bound behind n_min holds at every n up to it.
inline BoundReport nmin_report(const BlochVector& r0, const ProjectiveObservable& obs_a,
                               const ProjectiveObservable& obs_b, const ProjectiveObservable& x, double delta,
                               const GellMannBasis& basis, int initial_horizon = 64, int max_horizon = 1 << 22) {
  if (!(delta > 0.0)) throw InvalidArgument("nmin_report: delta must be > 0");
  for (int d : {obs_a.dim, obs_b.dim, x.dim, basis.dim()}) detail::require_same_dim(r0.dim(), d, "nmin_report");
  const int d = r0.dim();
  const SimplexProjector pa = simplex_projector(obs_a);
  const SimplexProjector pb = simplex_projector(obs_b);
  const SimplexProjector px = simplex_projector(x);
  const RMatrix step_map = pb.matrix() * pa.matrix();

  BoundReport report;
  report.delta = delta;
  report.g_d = g_factor(d);
  report.r0_norm = r0.norm();

  int horizon = std::max(1, initial_horizon);
  for (;;) {
    double o_eps = -1.0;
    double residual = 0.0;
    RVector current = r0.coords();
    double previous_norm = report.r0_norm;
    for (int k = 1; k <= horizon; ++k) {
      current = step_map * current;
      const double norm = current.norm();
      if (previous_norm > tol::zero_norm) o_eps = std::max(o_eps, detail::contraction_ratio(norm, previous_norm));
      if (norm > tol::zero_norm) residual = std::max(residual, px.residual(current / norm));
      previous_norm = norm;
    }
    report.o_eps = std::max(0.0, o_eps);
    report.residual = residual;
    report.horizon = horizon;
    report.n_min = n_min(delta, d, report.r0_norm, residual, report.o_eps);
    if (!std::isfinite(report.n_min) || std::ceil(report.n_min) <= horizon || horizon >= max_horizon) break;
    const double wanted = std::max(2.0 * horizon, std::ceil(report.n_min));
    horizon = static_cast<int>(std::min<double>(wanted, max_horizon));
  }

  if (std::isfinite(report.n_min)) {
    const int used = std::max(1, static_cast<int>(std::ceil(report.n_min)));
    RVector current = r0.coords();
    for (int k = 0; k < used; ++k) current = step_map * current;
    const BlochVector rn(d, current);
    report.n_used = used;
    report.irreality = irreality(x, from_bloch(rn, basis));
    report.ineq2_rhs = ineq2_rhs(rn, px);
  }
  return report;
}

}  // namespace realism
