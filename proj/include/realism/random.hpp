#pragma once

// Seeded random states and observables for property tests and validation runs.

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "realism/bloch.hpp"
#include "realism/state.hpp"

namespace realism {

using Rng = std::mt19937_64;

inline CMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

/// rho = G G^dagger / Tr(G G^dagger) with G a d x d Ginibre matrix.
inline DensityMatrix random_state(int d, Rng& rng) {
  const CMatrix g = ginibre(d, d, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal pushed into Q.
inline CMatrix haar_unitary(int d, Rng& rng) {
  const CMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    const Complex diag = r(k, k);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(k) *= diag / mag;
  }
  return q;
}

inline RVector random_unit_vector(int n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RVector v(n);
  do {
    for (int i = 0; i < n; ++i) v(i) = normal(rng);
  } while (v.norm() < 1e-8);
  return v / v.norm();
}

/// Haar-random eigenbasis with standard-normal eigenvalues, redrawn until
/// every gap exceeds 1e-6.
inline ProjectiveObservable random_observable(const GellMannBasis& basis, Rng& rng) {
  const int d = basis.dim();
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> vals(static_cast<std::size_t>(d));
  for (;;) {
    for (double& v : vals) v = normal(rng);
    std::sort(vals.begin(), vals.end(), std::greater<>());
    bool separated = true;
    for (std::size_t i = 1; i < vals.size(); ++i) separated = separated && (vals[i - 1] - vals[i] > 1e-6);
    if (separated) break;
  }
  return observable_from_basis(haar_unitary(d, rng), vals, basis);
}

struct RandomInstance {
  DensityMatrix rho;
  ProjectiveObservable a;
  ProjectiveObservable b;
  ProjectiveObservable x;
};

inline RandomInstance random_instance(int d, std::uint64_t seed) {
  if (d < 2 || d > 16) throw InvalidDimension("random_instance: d must be in [2, 16], got " + std::to_string(d));
  const GellMannBasis basis(d);
  Rng rng(seed);
  DensityMatrix rho = random_state(d, rng);
  ProjectiveObservable a = random_observable(basis, rng);
  ProjectiveObservable b = random_observable(basis, rng);
  ProjectiveObservable x = random_observable(basis, rng);
  return {std::move(rho), std::move(a), std::move(b), std::move(x)};
}

/// Discrete Fourier basis F_jk = omega^{jk} / sqrt d; mutually unbiased with
/// the computational basis.
inline CMatrix fourier_basis(int d) {
  CMatrix f(d, d);
  const double two_pi = 2.0 * std::numbers::pi;
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), two_pi * j * k / d);
  }
  return f;
}

}  // namespace realism
