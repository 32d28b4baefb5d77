#pragma once

// Nonselective projective measurement in Hilbert space (Phi_A) and in Bloch
// space (the simplex projector P_A), plus the single-ancilla dilation check.

#include <span>
#include <utility>

#include "realism/bloch.hpp"
#include "realism/state.hpp"

namespace realism {

/// sum_i P_i rho P_i for an arbitrary complete set of orthogonal projectors
/// (grouped or rank-1).
inline DensityMatrix dephase(const DensityMatrix& rho, std::span<const CMatrix> projectors) {
  CMatrix out = CMatrix::Zero(rho.dim(), rho.dim());
  for (const CMatrix& p : projectors) {
    detail::require_same_dim(static_cast<int>(p.rows()), rho.dim(), "dephase");
    out += p * rho.matrix() * p;
  }
  return DensityMatrix(out);
}

inline DensityMatrix phi_map(const DensityMatrix& rho, const ProjectiveObservable& obs) {
  detail::require_same_dim(rho.dim(), obs.dim, "phi_map");
  return dephase(rho, obs.projectors);
}

/// Dense (d^2-1) x (d^2-1) matrix of P_A r = ((d-1)/d) sum_i (a_i . r) a_i.
class SimplexProjector {
 public:
  SimplexProjector(int dim, RMatrix matrix) : dim_(dim), matrix_(std::move(matrix)) {}

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const RMatrix& matrix() const { return matrix_; }

  [[nodiscard]] BlochVector apply(const BlochVector& r) const {
    detail::require_same_dim(r.dim(), dim_, "SimplexProjector::apply");
    return {dim_, matrix_ * r.coords()};
  }

  /// ||(1 - P) v||
  [[nodiscard]] double residual(const RVector& v) const { return (v - matrix_ * v).norm(); }

 private:
  int dim_;
  RMatrix matrix_;
};

inline SimplexProjector simplex_projector(const ProjectiveObservable& obs) {
  const int d = obs.dim;
  const Eigen::Index n = d * d - 1;
  RMatrix p = RMatrix::Zero(n, n);
  for (const RVector& a : obs.vertices) p += a * a.transpose();
  p *= (d - 1.0) / d;
  return {d, std::move(p)};
}

/// r -> P_B P_A r
inline BlochVector pairwise_step(const BlochVector& r, const SimplexProjector& pa, const SimplexProjector& pb) {
  detail::require_same_dim(pa.dim(), pb.dim(), "pairwise_step");
  return pb.apply(pa.apply(r));
}

/// Max entrywise deviation between Tr_E[V rho V^dagger], with the isometry
/// V = sum_i A_i (x) |e_i> on a d-level ancilla, and phi_map(rho).
inline double stinespring_check(const DensityMatrix& rho, const ProjectiveObservable& obs) {
  const int d = rho.dim();
  detail::require_same_dim(d, obs.dim, "stinespring_check");
  const int m = static_cast<int>(obs.projectors.size());
  // Row index of the joint space: system * m + environment.
  CMatrix v = CMatrix::Zero(d * m, d);
  for (int e = 0; e < m; ++e) {
    const CMatrix& a = obs.projectors[static_cast<std::size_t>(e)];
    for (int s = 0; s < d; ++s) v.row(s * m + e) = a.row(s);
  }
  const CMatrix joint = v * rho.matrix() * v.adjoint();
  CMatrix reduced = CMatrix::Zero(d, d);
  for (int s = 0; s < d; ++s) {
    for (int t = 0; t < d; ++t) {
      for (int e = 0; e < m; ++e) reduced(s, t) += joint(s * m + e, t * m + e);
    }
  }
  return detail::max_abs_entry(reduced - phi_map(rho, obs).matrix());
}

}  // namespace realism
