#pragma once

// Hermitian eigendecomposition and matrix norms for small dense operators.

#include <cmath>
#include <string>

#include "realism/types.hpp"

namespace realism {

/// Eigenpairs of a Hermitian matrix; eigenvalues descending, eigenvectors as columns.
struct Spectrum {
  RVector eigenvalues;
  CMatrix eigenvectors;

  [[nodiscard]] CMatrix reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  }
};

inline double hermiticity_defect(const CMatrix& h) {
  return detail::max_abs_entry(h - h.adjoint());
}

inline Spectrum eigh(const CMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) {
    throw InvalidArgument("eigh: input must be a non-empty square matrix");
  }
  if (hermiticity_defect(h) > tol::positivity) {
    throw InvalidArgument("eigh: input is not Hermitian");
  }
  const CMatrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigh: eigensolver did not converge");
  }
  // Eigen sorts ascending.
  const Eigen::Index n = herm.rows();
  Spectrum out{RVector(n), CMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = solver.eigenvalues()(n - 1 - k);
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

/// Schatten p-norm for p = 1 (trace norm) or p = 2 (Frobenius).
inline double schatten_norm(const CMatrix& o, int p) {
  if (o.rows() != o.cols()) {
    throw InvalidArgument("schatten_norm: matrix must be square");
  }
  switch (p) {
    case 1: {
      if (o.size() == 0) return 0.0;
      Eigen::JacobiSVD<CMatrix> svd(o);
      return svd.singularValues().sum();
    }
    case 2:
      return std::sqrt(std::max(0.0, (o.adjoint() * o).trace().real()));
    default:
      throw InvalidArgument("schatten_norm: unsupported order p=" + std::to_string(p));
  }
}

inline double trace_distance(const CMatrix& rho, const CMatrix& sigma) {
  return 0.5 * schatten_norm(rho - sigma, 1);
}

/// H(t) = -t ln t - (1-t) ln(1-t), in nats.
inline double binary_entropy(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InvalidArgument("binary_entropy: argument outside [0, 1]");
  }
  auto term = [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; };
  return term(t) + term(1.0 - t);
}

}  // namespace realism
