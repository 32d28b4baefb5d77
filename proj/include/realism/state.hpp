#pragma once

#include <string>

#include "realism/spectrum.hpp"
#include "realism/types.hpp"

namespace realism {

/// A validated qudit state: Hermitian, unit trace, positive semidefinite.
///
/// Construction checks the invariants and stores the Hermitian part of the
/// input so round-off from repeated channel application cannot accumulate
/// anti-Hermitian drift.
class DensityMatrix {
 public:
  explicit DensityMatrix(const CMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 2) {
      throw InvalidDimension("DensityMatrix: expected a square matrix of dimension >= 2");
    }
    if (hermiticity_defect(m) > tol::algebraic) {
      throw NotAState("DensityMatrix: matrix is not Hermitian");
    }
    const Complex tr = m.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > tol::algebraic) {
      throw NotAState("DensityMatrix: trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    m_ = 0.5 * (m + m.adjoint());
    spectrum_ = eigh(m_);
    const double smallest = spectrum_.eigenvalues(spectrum_.eigenvalues.size() - 1);
    if (smallest < -tol::positivity) {
      throw NotAState("DensityMatrix: negative eigenvalue " + std::to_string(smallest));
    }
  }

  /// Maximally mixed state 1/d.
  static DensityMatrix maximally_mixed(int d) {
    if (d < 2) throw InvalidDimension("maximally_mixed: d must be >= 2");
    return DensityMatrix(CMatrix::Identity(d, d) / static_cast<double>(d));
  }

  /// |psi><psi| for a (not necessarily normalized) nonzero vector.
  static DensityMatrix pure(const CVector& psi) {
    const double n = psi.norm();
    if (n == 0.0) throw InvalidArgument("pure: zero vector");
    const CVector u = psi / n;
    return DensityMatrix(u * u.adjoint());
  }

  [[nodiscard]] int dim() const { return static_cast<int>(m_.rows()); }
  [[nodiscard]] const CMatrix& matrix() const { return m_; }
  [[nodiscard]] const Spectrum& spectrum() const { return spectrum_; }

 private:
  CMatrix m_;
  Spectrum spectrum_;
};

}  // namespace realism
