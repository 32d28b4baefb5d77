#pragma once

// Von Neumann and relative entropies, in nats.

#include <cmath>
#include <limits>

#include "realism/spectrum.hpp"
#include "realism/state.hpp"

namespace realism {

namespace detail {

// Eigenvalues in [-positivity, 0) are clipped; more negative values were
// already rejected when the DensityMatrix was built.
inline double clipped(double lambda) { return lambda < tol::zero_eigen ? 0.0 : lambda; }

}  // namespace detail

/// S(rho) = -sum lambda ln lambda with 0 ln 0 = 0.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < rho.spectrum().eigenvalues.size(); ++k) {
    const double lambda = detail::clipped(rho.spectrum().eigenvalues(k));
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

/// S(rho || sigma) = Tr rho (ln rho - ln sigma); +infinity when supp(rho) is
/// not contained in supp(sigma).
inline double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  detail::require_same_dim(rho.dim(), sigma.dim(), "relative_entropy");
  const Spectrum& sr = rho.spectrum();
  const Spectrum& ss = sigma.spectrum();
  // overlap(i, j) = |<u_i|v_j>|^2
  const RMatrix overlap = (sr.eigenvectors.adjoint() * ss.eigenvectors).cwiseAbs2();
  const Eigen::Index d = sr.eigenvalues.size();

  double cross = 0.0;  // -Tr rho ln sigma
  for (Eigen::Index j = 0; j < d; ++j) {
    double weight = 0.0;  // <v_j| rho |v_j>
    for (Eigen::Index i = 0; i < d; ++i) weight += detail::clipped(sr.eigenvalues(i)) * overlap(i, j);
    const double mu = detail::clipped(ss.eigenvalues(j));
    if (mu == 0.0) {
      if (weight > tol::algebraic) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross -= weight * std::log(mu);
  }
  return cross - von_neumann_entropy(rho);
}

}  // namespace realism
