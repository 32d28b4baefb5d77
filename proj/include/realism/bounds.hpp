#pragma once

// Irreality and the upper bounds on it after sequential pairwise monitoring.

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "realism/channels.hpp"
#include "realism/entropy.hpp"

namespace realism {

/// I_X(rho) = S(Phi_X(rho)) - S(rho)
inline double irreality(const ProjectiveObservable& x, const DensityMatrix& rho) {
  detail::require_same_dim(x.dim, rho.dim(), "irreality");
  return von_neumann_entropy(phi_map(rho, x)) - von_neumann_entropy(rho);
}

/// ln d - S(rho), the maximum of I_X(rho) over all observables X.
inline double max_irreality(const DensityMatrix& rho) {
  return std::log(static_cast<double>(rho.dim())) - von_neumann_entropy(rho);
}

/// g(d) = (d-1)^{1/4} (1 + ln(d-1)/sqrt 2)
inline double g_factor(int d) {
  if (d < 2) throw InvalidDimension("g_factor: d must be >= 2");
  const double m = d - 1.0;
  return std::pow(m, 0.25) * (1.0 + std::log(m) / std::numbers::sqrt2);
}

/// g(d) sqrt(||(1 - P_X) r_hat||) sqrt(||r||); 0 at the ball center.
inline double ineq2_rhs(const BlochVector& r, const SimplexProjector& px) {
  detail::require_same_dim(r.dim(), px.dim(), "ineq2_rhs");
  const double norm = r.norm();
  if (norm <= tol::zero_norm) return 0.0;
  const RVector unit = r.coords() / norm;
  return g_factor(r.dim()) * std::sqrt(px.residual(unit)) * std::sqrt(norm);
}

/// Number of pairwise steps after which the bound falls below delta.
///
/// Returns 0 when the n = 0 bound is already <= delta, 1 when o_eps == 0
/// (one step reaches the center), +infinity when o_eps >= 1. Callers use
/// max(1, ceil(n_min)).
inline double n_min(double delta, int d, double r0_norm, double residual, double o_eps) {
  if (!(delta > 0.0)) throw InvalidArgument("n_min: delta must be > 0");
  if (r0_norm < 0.0 || residual < 0.0) throw InvalidArgument("n_min: norms must be >= 0");
  if (!(o_eps >= 0.0 && o_eps <= 1.0)) throw InvalidArgument("n_min: o_eps outside [0, 1]");
  const double initial = g_factor(d) * std::sqrt(r0_norm * residual);
  if (delta >= initial) return 0.0;
  if (o_eps == 0.0) return 1.0;
  if (o_eps >= 1.0) return std::numeric_limits<double>::infinity();
  return 2.0 * std::log(delta / initial) / std::log(o_eps);
}

/// (a.r)^2 (a.b)^{2(2n-1)} [1 - (x.b)^4] ln 2
inline double qubit_irreality_bound(double a_dot_r, double a_dot_b, double x_dot_b, int n) {
  if (n < 1) throw InvalidArgument("qubit_irreality_bound: n must be >= 1");
  for (double v : {a_dot_r, a_dot_b, x_dot_b}) {
    if (!(v >= -1.0 - tol::algebraic && v <= 1.0 + tol::algebraic)) {
      throw InvalidArgument("qubit_irreality_bound: dot products must lie in [-1, 1]");
    }
  }
  return a_dot_r * a_dot_r * std::pow(a_dot_b, 2 * (2 * n - 1)) * (1.0 - std::pow(x_dot_b, 4)) *
         std::numbers::ln2;
}

/// lhs = H((1 + mu lambda)/2) - H((1 + lambda)/2), rhs = lambda^2 (1 - mu^4) ln 2.
inline std::pair<double, double> hbin_bound_check(double lambda, double mu) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw InvalidArgument("hbin_bound_check: lambda outside [0, 1]");
  if (!(mu >= -1.0 && mu <= 1.0)) throw InvalidArgument("hbin_bound_check: mu outside [-1, 1]");
  const double lhs = binary_entropy(0.5 * (1.0 + mu * lambda)) - binary_entropy(0.5 * (1.0 + lambda));
  const double rhs = lambda * lambda * (1.0 - std::pow(mu, 4)) * std::numbers::ln2;
  return {lhs, rhs};
}

}  // namespace realism
