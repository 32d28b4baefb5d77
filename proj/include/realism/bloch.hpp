#pragma once

// Generalized Bloch representation of qudit states and observables.
//
//   rho_r = (1/d) (1 + C_d r . Lambda),   C_d = sqrt(d(d-1)/2),
//
// where Lambda are the d^2-1 generalized Gell-Mann matrices normalized to
// Tr(Lambda_i Lambda_j) = 2 delta_ij.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "realism/spectrum.hpp"
#include "realism/state.hpp"
#include "realism/types.hpp"

namespace realism {

inline double bloch_constant(int d) { return std::sqrt(0.5 * d * (d - 1)); }

/// Generalized Gell-Mann generators of SU(d).
///
/// Ordering: symmetric generators E_jk + E_kj for (j, k), j < k in
/// lexicographic order; then antisymmetric -i E_jk + i E_kj in the same order;
/// then diagonal generators of increasing rank l = 1..d-1,
///   sqrt(2 / (l (l+1))) (sum_{m<l} E_mm - l E_ll).
/// For d = 2 this is (sigma_x, sigma_y, sigma_z).
class GellMannBasis {
 public:
  explicit GellMannBasis(int d) : dim_(d), c_d_(0.0) {
    if (d < 2) throw InvalidDimension("GellMannBasis: d must be >= 2, got " + std::to_string(d));
    c_d_ = bloch_constant(d);
    generators_.reserve(static_cast<std::size_t>(d * d - 1));
    const Complex i_unit(0.0, 1.0);
    for (int j = 0; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        CMatrix m = CMatrix::Zero(d, d);
        m(j, k) = 1.0;
        m(k, j) = 1.0;
        generators_.push_back(std::move(m));
      }
    }
    for (int j = 0; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) {
        CMatrix m = CMatrix::Zero(d, d);
        m(j, k) = -i_unit;
        m(k, j) = i_unit;
        generators_.push_back(std::move(m));
      }
    }
    for (int l = 1; l < d; ++l) {
      CMatrix m = CMatrix::Zero(d, d);
      const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
      for (int k = 0; k < l; ++k) m(k, k) = scale;
      m(l, l) = -scale * l;
      generators_.push_back(std::move(m));
    }
  }

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] int size() const { return static_cast<int>(generators_.size()); }
  [[nodiscard]] double c_d() const { return c_d_; }
  [[nodiscard]] const CMatrix& operator[](int i) const { return generators_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] std::span<const CMatrix> generators() const { return generators_; }

  /// sum_i v_i Lambda_i
  [[nodiscard]] CMatrix contract(const RVector& v) const {
    if (v.size() != size()) throw DimensionMismatch("GellMannBasis::contract: vector length mismatch");
    CMatrix out = CMatrix::Zero(dim_, dim_);
    for (int i = 0; i < size(); ++i) out += v(i) * generators_[static_cast<std::size_t>(i)];
    return out;
  }

  /// (d / (2 C_d)) Tr(M Lambda_j) for each j; the Bloch coordinates of M.
  [[nodiscard]] RVector coordinates(const CMatrix& m, double* max_imag = nullptr) const {
    RVector out(size());
    const double scale = dim_ / (2.0 * c_d_);
    double worst = 0.0;
    for (int j = 0; j < size(); ++j) {
      const Complex t = (m * generators_[static_cast<std::size_t>(j)]).trace();
      worst = std::max(worst, std::abs(t.imag()));
      out(j) = scale * t.real();
    }
    if (max_imag != nullptr) *max_imag = worst;
    return out;
  }

 private:
  int dim_;
  double c_d_;
  std::vector<CMatrix> generators_;
};

inline GellMannBasis build_gellmann(int d) { return GellMannBasis(d); }

/// Real vector of length d^2 - 1. Not every vector in the unit ball is a
/// state for d >= 3; from_bloch certifies positivity.
class BlochVector {
 public:
  BlochVector(int dim, RVector r) : dim_(dim), r_(std::move(r)) {
    if (dim < 2) throw InvalidDimension("BlochVector: d must be >= 2");
    if (r_.size() != dim * dim - 1) {
      throw DimensionMismatch("BlochVector: expected length " + std::to_string(dim * dim - 1));
    }
  }

  static BlochVector zero(int dim) { return {dim, RVector::Zero(dim * dim - 1)}; }

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const RVector& coords() const { return r_; }
  [[nodiscard]] double norm() const { return r_.norm(); }

 private:
  int dim_;
  RVector r_;
};

inline BlochVector to_bloch(const DensityMatrix& rho, const GellMannBasis& basis) {
  detail::require_same_dim(rho.dim(), basis.dim(), "to_bloch");
  double imag = 0.0;
  RVector r = basis.coordinates(rho.matrix(), &imag);
  if (imag > tol::algebraic) throw NotAState("to_bloch: Tr(rho Lambda) has an imaginary part");
  return {basis.dim(), std::move(r)};
}

/// rho = (1/d)(1 + C_d r . Lambda) without the positivity check.
inline CMatrix bloch_operator(const RVector& r, const GellMannBasis& basis) {
  const int d = basis.dim();
  return (CMatrix::Identity(d, d) + basis.c_d() * basis.contract(r)) / static_cast<double>(d);
}

/// Throws NotAState when r lies outside the state body.
inline DensityMatrix from_bloch(const BlochVector& r, const GellMannBasis& basis) {
  detail::require_same_dim(r.dim(), basis.dim(), "from_bloch");
  return DensityMatrix(bloch_operator(r.coords(), basis));
}

/// A nondegenerate observable with rank-1 eigenprojectors and the
/// corresponding regular simplex in Bloch space.
///
/// Vertices satisfy sum_i a_i = 0 and a_i . a_j = (delta_ij d - 1) / (d - 1).
struct ProjectiveObservable {
  int dim = 0;
  std::vector<double> eigenvalues;
  std::vector<CMatrix> projectors;
  std::vector<RVector> vertices;

  [[nodiscard]] CMatrix matrix() const {
    CMatrix out = CMatrix::Zero(dim, dim);
    for (std::size_t i = 0; i < projectors.size(); ++i) out += eigenvalues[i] * projectors[i];
    return out;
  }
};

inline ProjectiveObservable observable_simplex(std::span<const double> eigvals, std::span<const CMatrix> projectors,
                                               const GellMannBasis& basis) {
  const int d = basis.dim();
  if (static_cast<int>(eigvals.size()) != d || static_cast<int>(projectors.size()) != d) {
    throw InvalidObservable("observable_simplex: need exactly d eigenvalues and d rank-1 projectors");
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      if (std::abs(eigvals[static_cast<std::size_t>(i)] - eigvals[static_cast<std::size_t>(j)]) < tol::degeneracy) {
        throw InvalidObservable("observable_simplex: degenerate eigenvalues");
      }
    }
  }
  const CMatrix id = CMatrix::Identity(d, d);
  CMatrix sum = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const CMatrix& ai = projectors[static_cast<std::size_t>(i)];
    if (ai.rows() != d || ai.cols() != d) throw DimensionMismatch("observable_simplex: projector size");
    sum += ai;
    for (int j = 0; j < d; ++j) {
      const CMatrix prod = ai * projectors[static_cast<std::size_t>(j)];
      const CMatrix expected = (i == j) ? ai : CMatrix::Zero(d, d);
      if (detail::max_abs_entry(prod - expected) > tol::projector) {
        throw InvalidObservable("observable_simplex: projectors are not orthogonal idempotents");
      }
    }
    if (std::abs(ai.trace() - Complex(1.0, 0.0)) > tol::projector) {
      throw InvalidObservable("observable_simplex: projector is not rank 1");
    }
  }
  if (detail::max_abs_entry(sum - id) > tol::projector) {
    throw InvalidObservable("observable_simplex: projectors do not sum to the identity");
  }

  ProjectiveObservable obs;
  obs.dim = d;
  obs.eigenvalues.assign(eigvals.begin(), eigvals.end());
  obs.projectors.assign(projectors.begin(), projectors.end());
  obs.vertices.reserve(static_cast<std::size_t>(d));
  for (const CMatrix& ai : obs.projectors) obs.vertices.push_back(basis.coordinates(ai));
  return obs;
}

/// Builds the simplex observable from a Hermitian matrix by eigendecomposition.
inline ProjectiveObservable observable_from_matrix(const CMatrix& h, const GellMannBasis& basis) {
  detail::require_same_dim(static_cast<int>(h.rows()), basis.dim(), "observable_from_matrix");
  const Spectrum spec = eigh(h);
  std::vector<double> vals;
  std::vector<CMatrix> projs;
  for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
    vals.push_back(spec.eigenvalues(k));
    const CVector v = spec.eigenvectors.col(k);
    projs.emplace_back(v * v.adjoint());
  }
  return observable_simplex(vals, projs, basis);
}

/// Observable whose eigenprojectors are |u_k><u_k| for the columns of a unitary.
inline ProjectiveObservable observable_from_basis(const CMatrix& unitary, std::span<const double> eigvals,
                                                  const GellMannBasis& basis) {
  std::vector<CMatrix> projs;
  for (Eigen::Index k = 0; k < unitary.cols(); ++k) {
    const CVector v = unitary.col(k);
    projs.emplace_back(v * v.adjoint());
  }
  return observable_simplex(eigvals, projs, basis);
}

/// Spin observable a . Lambda for a real direction a.
inline ProjectiveObservable spin_observable(const RVector& direction, const GellMannBasis& basis) {
  return observable_from_matrix(basis.contract(direction), basis);
}

/// p_i = (1/d) [1 + (d-1) a_i . r]
inline double outcome_probability(const BlochVector& r, const ProjectiveObservable& obs, int i) {
  detail::require_same_dim(r.dim(), obs.dim, "outcome_probability");
  if (i < 0 || i >= obs.dim) throw InvalidArgument("outcome_probability: outcome index out of range");
  const double d = obs.dim;
  return (1.0 + (d - 1.0) * obs.vertices[static_cast<std::size_t>(i)].dot(r.coords())) / d;
}

}  // namespace realism
