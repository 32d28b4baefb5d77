#include <cmath>
#include <limits>
#include <numbers>

#include "test_support.hpp"

using namespace realism;
using namespace realism::testing;
using Catch::Approx;

TEST_CASE("eigh spectra", "[state_kernel]") {
  SECTION("identity / 3") {
    const Spectrum s = eigh(CMatrix::Identity(3, 3) / 3.0);
    for (int k = 0; k < 3; ++k) CHECK(s.eigenvalues(k) == Approx(1.0 / 3.0).margin(1e-15));
  }
  SECTION("sigma_x") {
    const Spectrum s = eigh(pauli_x());
    CHECK(s.eigenvalues(0) == Approx(1.0).margin(1e-15));
    CHECK(s.eigenvalues(1) == Approx(-1.0).margin(1e-15));
  }
  SECTION("random 4x4: trace and reconstruction") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const CMatrix h = random_hermitian(4, rng);
      const Spectrum s = eigh(h);
      CHECK(std::abs(h.trace().real() - s.eigenvalues.sum()) < 1e-11);
      CHECK(max_abs_diff(s.reconstruct(), h) < 1e-10);
      CHECK(max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors, CMatrix::Identity(4, 4)) < 1e-10);
      for (int k = 1; k < 4; ++k) CHECK(s.eigenvalues(k - 1) >= s.eigenvalues(k));
    }
  }
  SECTION("non-Hermitian input is rejected") {
    CMatrix m = pauli_x();
    m(0, 1) = 2.0;
    CHECK_THROWS_AS(eigh(m), InvalidArgument);
  }
}

TEST_CASE("von Neumann entropy", "[state_kernel]") {
  CHECK(von_neumann_entropy(DensityMatrix::pure(basis_ket(3, 1))) == Approx(0.0).margin(1e-14));
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) == Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(3)) == Approx(std::log(3.0)).epsilon(1e-14));

  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 0.75;
  m(1, 1) = 0.25;
  const double expected = 0.75 * std::log(4.0 / 3.0) + 0.25 * std::log(4.0);
  CHECK(von_neumann_entropy(DensityMatrix(m)) == Approx(expected).epsilon(1e-14));
  CHECK(expected == Approx(0.5623).margin(5e-5));

  SECTION("bounds 0 <= S <= ln d on random states") {
    Rng rng(5);
    for (int d : {2, 3, 4, 6}) {
      for (int trial = 0; trial < 100; ++trial) {
        const double s = von_neumann_entropy(random_state(d, rng));
        CHECK(s >= 0.0);
        CHECK(s <= std::log(d) + 1e-10);
      }
    }
  }
}

TEST_CASE("relative entropy", "[state_kernel]") {
  Rng rng(21);
  const DensityMatrix rho = random_state(3, rng);
  CHECK(relative_entropy(rho, rho) == Approx(0.0).margin(1e-12));

  const DensityMatrix zero = DensityMatrix::pure(basis_ket(2, 0));
  const DensityMatrix one = DensityMatrix::pure(basis_ket(2, 1));
  CHECK(relative_entropy(zero, one) == std::numeric_limits<double>::infinity());
  CHECK(relative_entropy(zero, DensityMatrix::maximally_mixed(2)) == Approx(std::log(2.0)).epsilon(1e-13));

  SECTION("S(rho || Phi_A rho) = S(Phi_A rho) - S(rho)") {
    for (int d : {2, 3}) {
      const GellMannBasis basis(d);
      for (int trial = 0; trial < 200; ++trial) {
        const DensityMatrix r = random_state(d, rng);
        const ProjectiveObservable a = random_observable(basis, rng);
        const DensityMatrix dephased = phi_map(r, a);
        const double lhs = relative_entropy(r, dephased);
        CHECK(lhs >= -1e-10);
        CHECK(std::abs(lhs - (von_neumann_entropy(dephased) - von_neumann_entropy(r))) < 1e-10);
      }
    }
  }

  CHECK_THROWS_AS(relative_entropy(zero, DensityMatrix::maximally_mixed(3)), DimensionMismatch);
}

TEST_CASE("Schatten norms", "[state_kernel]") {
  CHECK(schatten_norm(CMatrix::Zero(3, 3), 1) == 0.0);
  CHECK(schatten_norm(CMatrix::Zero(3, 3), 2) == 0.0);
  CHECK(schatten_norm(pauli_z(), 1) == Approx(2.0).epsilon(1e-14));
  CHECK(schatten_norm(pauli_z(), 2) == Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(schatten_norm(pauli_z(), 3), InvalidArgument);

  Rng rng(3);
  for (int d : {2, 3, 4}) {
    for (int trial = 0; trial < 200; ++trial) {
      const CMatrix diff = random_state(d, rng).matrix() - random_state(d, rng).matrix();
      CHECK(schatten_norm(diff, 1) <= std::sqrt(static_cast<double>(d)) * schatten_norm(diff, 2) + 1e-12);
    }
  }
}

TEST_CASE("binary entropy", "[state_kernel]") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == Approx(std::numbers::ln2).epsilon(1e-15));
  for (int k = 1; k <= 99; ++k) {
    const double t = k / 100.0;
    CHECK(binary_entropy(t) <= std::sqrt(2.0 * t));
    CHECK(binary_entropy(t) <= std::numbers::ln2 + 1e-15);
  }
  CHECK_THROWS_AS(binary_entropy(-0.1), InvalidArgument);
  CHECK_THROWS_AS(binary_entropy(1.1), InvalidArgument);
}

TEST_CASE("entropy continuity chain", "[state_kernel][property]") {
  Rng rng(99);
  SECTION("Fannes/Audenaert") {
    for (int d : {2, 3, 4}) {
      for (int trial = 0; trial < 300; ++trial) {
        // Mix a random state toward a pure one so both small and large distances show up.
        const DensityMatrix rho = random_state(d, rng);
        const DensityMatrix pure = DensityMatrix::pure(ginibre(d, 1, rng).col(0));
        const double w = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const DensityMatrix sigma(w * pure.matrix() + (1.0 - w) * random_state(d, rng).matrix());
        const double t = trace_distance(rho.matrix(), sigma.matrix());
        const double gap = std::abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma));
        CHECK(gap <= t * std::log(d - 1.0) + binary_entropy(std::min(1.0, t)) + 1e-12);
      }
    }
  }
  SECTION("Bloch-space form with g(d)") {
    for (int d : {2, 3, 4}) {
      const GellMannBasis basis(d);
      for (int trial = 0; trial < 300; ++trial) {
        const DensityMatrix r1 = random_state(d, rng);
        const DensityMatrix r2 = DensityMatrix::pure(ginibre(d, 1, rng).col(0));
        const double dist = (to_bloch(r2, basis).coords() - to_bloch(r1, basis).coords()).norm();
        const double gap = std::abs(von_neumann_entropy(r2) - von_neumann_entropy(r1));
        CHECK(gap <= g_factor(d) * std::sqrt(dist) + 1e-12);
      }
    }
  }
}
