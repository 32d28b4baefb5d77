#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace realism {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Numerical tolerances shared by every module.
namespace tol {
inline constexpr double algebraic = 1e-12;   // identities (trace, hermiticity)
inline constexpr double positivity = 1e-10;  // smallest admissible eigenvalue is -positivity
inline constexpr double projector = 1e-10;   // completeness/orthogonality of projector sets
inline constexpr double degeneracy = 1e-9;   // eigenvalue gap for rank-1 simplex construction
inline constexpr double zero_eigen = 1e-14;  // 0 ln 0 = 0 below this
inline constexpr double zero_norm = 1e-14;   // Bloch vector treated as the ball center
}  // namespace tol

class InvalidDimension : public std::invalid_argument {
 public:
  explicit InvalidDimension(const std::string& what) : std::invalid_argument(what) {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a matrix (or Bloch vector) does not describe a physical state.
class NotAState : public std::domain_error {
 public:
  explicit NotAState(const std::string& what) : std::domain_error(what) {}
};

/// Projector sets that are incomplete, non-orthogonal, not rank-1, or degenerate.
class InvalidObservable : public std::invalid_argument {
 public:
  explicit InvalidObservable(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

inline void require_same_dim(int a, int b, const char* where) {
  if (a != b) {
    throw DimensionMismatch(std::string(where) + ": dimension mismatch (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
  }
}

inline double max_abs_entry(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace detail
}  // namespace realism
