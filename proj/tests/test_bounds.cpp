#include <cmath>
#include <limits>
#include <numbers>

#include "test_support.hpp"

using namespace realism;
using namespace realism::testing;
using Catch::Approx;

namespace {

ProjectiveObservable computational_observable(const GellMannBasis& b) {
  std::vector<double> vals;
  for (int k = 0; k < b.dim(); ++k) vals.push_back(b.dim() - 1.0 - k);
  return observable_from_basis(CMatrix::Identity(b.dim(), b.dim()), vals, b);
}

ProjectiveObservable fourier_observable(const GellMannBasis& b) {
  std::vector<double> vals;
  for (int k = 0; k < b.dim(); ++k) vals.push_back(b.dim() - 1.0 - k);
  return observable_from_basis(fourier_basis(b.dim()), vals, b);
}

}  // namespace

TEST_CASE("irreality", "[bounds]") {
  const GellMannBasis b2(2);
  const ProjectiveObservable z = observable_from_matrix(pauli_z(), b2);
  CHECK(irreality(z, DensityMatrix::pure(basis_ket(2, 1))) == Approx(0.0).margin(1e-14));
  CVector plus(2);
  plus << 1.0, 1.0;
  // S(1/2) - S(|+><+|) = ln 2 - 0
  CHECK(irreality(z, DensityMatrix::pure(plus)) == Approx(std::numbers::ln2).epsilon(1e-13));

  Rng rng(50);
  for (int d : {2, 3, 4}) {
    const GellMannBasis b(d);
    for (int trial = 0; trial < 100; ++trial) {
      const ProjectiveObservable x = random_observable(b, rng);
      CHECK(std::abs(irreality(x, DensityMatrix::maximally_mixed(d))) < 1e-14);
      const DensityMatrix rho = random_state(d, rng);
      const double value = irreality(x, rho);
      CHECK(value >= -1e-10);
      CHECK(std::abs(value - relative_entropy(rho, phi_map(rho, x))) < 1e-10);
      CHECK(max_irreality(rho) >= value - 1e-10);
    }
  }
  CHECK_THROWS_AS(irreality(z, DensityMatrix::maximally_mixed(3)), DimensionMismatch);
}

TEST_CASE("max irreality", "[bounds]") {
  CHECK(max_irreality(DensityMatrix::pure(basis_ket(3, 0))) == Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(max_irreality(DensityMatrix::maximally_mixed(3)) == Approx(0.0).margin(1e-14));

  SECTION("tight when the state's simplex and X are mutually unbiased") {
    const GellMannBasis b(3);
    const ProjectiveObservable x = computational_observable(b);
    const CMatrix f = fourier_basis(3);
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      RVector w(3);
      for (int i = 0; i < 3; ++i) w(i) = unif(rng);
      w /= w.sum();
      const DensityMatrix rho(f * w.cast<Complex>().asDiagonal() * f.adjoint());
      CHECK(std::abs(irreality(x, rho) - max_irreality(rho)) < 1e-10);
    }
  }
}

TEST_CASE("g factor", "[bounds]") {
  CHECK(g_factor(2) == 1.0);
  const double g3 = std::pow(2.0, 0.25) * (1.0 + std::log(2.0) / std::sqrt(2.0));
  CHECK(g_factor(3) == Approx(g3).epsilon(1e-15));
  CHECK(g_factor(3) == Approx(1.772).margin(5e-4));
  for (int d = 3; d <= 16; ++d) CHECK(g_factor(d) > g_factor(d - 1));
  CHECK_THROWS_AS(g_factor(1), InvalidDimension);
}

TEST_CASE("ineq2 right-hand side", "[bounds]") {
  const GellMannBasis b2(2);
  const SimplexProjector pz = simplex_projector(observable_from_matrix(pauli_z(), b2));
  SECTION("zero on X's simplex and at the center") {
    CHECK(ineq2_rhs({2, 0.4 * RVector::Unit(3, 2)}, pz) == 0.0);
    CHECK(ineq2_rhs(BlochVector::zero(2), pz) == 0.0);
  }
  SECTION("qubit scalar oracle g(2) sqrt(||r - P_X r||)") {
    RVector r(3);
    r << 0.3, 0.4, 0.5;
    CHECK(ineq2_rhs({2, r}, pz) == Approx(std::sqrt(0.5)).epsilon(1e-14));
  }
  SECTION("bounds the irreality along random trajectories") {
    Rng rng(52);
    for (int d : {2, 3}) {
      const GellMannBasis b(d);
      for (int trial = 0; trial < 100; ++trial) {
        const BlochVector r0 = to_bloch(random_state(d, rng), b);
        const Trajectory t = monitor(r0, random_observable(b, rng), random_observable(b, rng), 8,
                                     random_observable(b, rng), b);
        for (const TrajectoryStep& s : t.steps) CHECK(s.irreality_x <= s.bound_rhs + 1e-10);
      }
    }
  }
}

TEST_CASE("special cases with zero irreality", "[bounds]") {
  Rng rng(53);
  SECTION("[X, B] = 0 gives zero irreality for n >= 1") {
    for (int d : {2, 3}) {
      const GellMannBasis b(d);
      const ProjectiveObservable bb = random_observable(b, rng);
      std::vector<double> other_vals;
      for (int k = 0; k < d; ++k) other_vals.push_back(std::pow(k + 1.0, 2));
      const ProjectiveObservable x = observable_simplex(other_vals, bb.projectors, b);
      const Trajectory t = monitor(to_bloch(random_state(d, rng), b), random_observable(b, rng), bb, 3, x, b);
      for (const TrajectoryStep& s : t.steps) CHECK(std::abs(s.irreality_x) < 1e-10);
    }
  }
  SECTION("P_A r = 0 gives zero irreality at n = 1") {
    for (int d : {2, 3, 4}) {
      const GellMannBasis b(d);
      const ProjectiveObservable a = computational_observable(b);
      // rho diagonal in the Fourier basis has a flat distribution over A's outcomes.
      const DensityMatrix rho = DensityMatrix::pure(fourier_basis(d).col(1));
      CHECK(simplex_projector(a).apply(to_bloch(rho, b)).norm() < 1e-12);
      const Trajectory t = monitor(to_bloch(rho, b), a, random_observable(b, rng), 1, random_observable(b, rng), b);
      CHECK(std::abs(t.steps[0].irreality_x) < 1e-10);
    }
  }
  SECTION("mutually unbiased A and B erase the state in one step") {
    for (int d : {2, 3, 4, 5}) {
      const GellMannBasis b(d);
      const Trajectory t = monitor(to_bloch(random_state(d, rng), b), computational_observable(b), fourier_observable(b),
                                   2, random_observable(b, rng), b);
      CHECK(t.steps[0].norm < 1e-12);
      CHECK(std::abs(t.steps[0].irreality_x) < 1e-10);
      CHECK(o_epsilon(t) < 1e-12);
    }
  }
}

TEST_CASE("o_epsilon", "[bounds]") {
  const GellMannBasis b(2);
  SECTION("qubit MUB") {
    RVector r(3);
    r << 0.2, 0.1, 0.6;
    const Trajectory t = monitor({2, r}, observable_from_matrix(pauli_z(), b), observable_from_matrix(pauli_x(), b), 4,
                                 observable_from_matrix(pauli_z(), b), b);
    CHECK(t.steps[0].epsilon_valid);
    CHECK(t.steps[0].epsilon == 0.0);
    for (std::size_t k = 1; k < t.steps.size(); ++k) CHECK_FALSE(t.steps[k].epsilon_valid);
    CHECK(o_epsilon(t) == 0.0);
  }
  SECTION("qubit at angle phi: eps_k = cos^2 phi after the first step") {
    const double phi = 0.6;
    RVector a(3), bb(3), r(3);
    a << std::sin(phi), 0.0, std::cos(phi);
    bb << 0.0, 0.0, 1.0;
    r << 0.5, 0.3, -0.2;
    const Trajectory t =
        monitor({2, r}, spin_observable(a, b), spin_observable(bb, b), 6, observable_from_matrix(pauli_x(), b), b);
    const double c2 = std::cos(phi) * std::cos(phi);
    for (std::size_t k = 1; k < t.steps.size(); ++k) CHECK(t.steps[k].epsilon == Approx(c2).epsilon(1e-12));
    CHECK(t.steps[0].epsilon == Approx(std::cos(phi) * std::abs(a.dot(r)) / r.norm()).epsilon(1e-12));
    CHECK(o_epsilon(t) >= c2 - 1e-12);
  }
}

TEST_CASE("n_min", "[bounds]") {
  CHECK(n_min(0.1, 2, 1.0, 1.0, 0.0) == 1.0);
  CHECK(n_min(2.0, 3, 1.0, 1.0, 0.5) == 0.0);  // g(3) < 2
  CHECK(n_min(0.1, 2, 0.0, 1.0, 0.5) == 0.0);
  CHECK(n_min(0.1, 2, 1.0, 1.0, 1.0) == std::numeric_limits<double>::infinity());
  // 2 ln(0.01) / ln(0.25)
  CHECK(n_min(0.01, 2, 1.0, 1.0, 0.25) == Approx(2.0 * std::log(0.01) / std::log(0.25)).epsilon(1e-15));
  CHECK(n_min(0.01, 2, 1.0, 1.0, 0.25) == Approx(6.6439).margin(1e-4));
  CHECK_THROWS_AS(n_min(0.0, 2, 1.0, 1.0, 0.5), InvalidArgument);
  CHECK_THROWS_AS(n_min(-1.0, 2, 1.0, 1.0, 0.5), InvalidArgument);
  CHECK_THROWS_AS(n_min(0.1, 2, 1.0, 1.0, 1.5), InvalidArgument);

  SECTION("qubit at pi/4 reaches delta after ceil(n_min) steps") {
    const GellMannBasis b(2);
    const double phi = std::numbers::pi / 4;
    RVector a(3), bb(3), x(3);
    a << std::sin(phi), 0.0, std::cos(phi);
    bb << 0.0, 0.0, 1.0;
    x << 1.0, 0.0, 0.0;
    const BlochVector r0(2, RVector::Unit(3, 2));
    for (double delta : {0.1, 0.01}) {
      const BoundReport rep =
          nmin_report(r0, spin_observable(a, b), spin_observable(bb, b), spin_observable(x, b), delta, b);
      REQUIRE(rep.n_used.has_value());
      CHECK(rep.o_eps == Approx(0.5).epsilon(1e-12));
      CHECK(rep.irreality <= delta);
      CHECK(rep.ineq2_rhs <= delta + 1e-12);
      CHECK(*rep.n_used == static_cast<int>(std::ceil(rep.n_min)));
    }
  }
  SECTION("commuting configuration never reaches delta") {
    const GellMannBasis b(2);
    const BoundReport rep = nmin_report(BlochVector(2, RVector::Unit(3, 2)), observable_from_matrix(pauli_z(), b),
                                        observable_from_matrix(pauli_z(), b), observable_from_matrix(pauli_x(), b), 0.01, b);
    CHECK(rep.o_eps == 1.0);
    CHECK(std::isinf(rep.n_min));
    CHECK_FALSE(rep.n_used.has_value());
  }
}

TEST_CASE("qubit irreality bound", "[bounds]") {
  CHECK(qubit_irreality_bound(0.7, 0.0, 0.3, 3) == 0.0);
  CHECK(qubit_irreality_bound(0.7, 0.5, 1.0, 2) == 0.0);
  CHECK(qubit_irreality_bound(1.0, 1.0, 0.0, 1) == Approx(std::numbers::ln2));
  CHECK_THROWS_AS(qubit_irreality_bound(0.5, 0.5, 0.5, 0), InvalidArgument);
  CHECK_THROWS_AS(qubit_irreality_bound(1.5, 0.5, 0.5, 1), InvalidArgument);

  SECTION("simulation stays below the bound") {
    const GellMannBasis b(2);
    Rng rng(60);
    std::uniform_int_distribution<int> steps(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
      const RVector a = random_unit_vector(3, rng);
      const RVector bb = random_unit_vector(3, rng);
      const RVector x = random_unit_vector(3, rng);
      const BlochVector r0 = to_bloch(random_state(2, rng), b);
      const int n = steps(rng);
      const Trajectory t = monitor(r0, spin_observable(a, b), spin_observable(bb, b), n, spin_observable(x, b), b);
      const double bound = qubit_irreality_bound(a.dot(r0.coords()), a.dot(bb), x.dot(bb), n);
      CHECK(t.steps.back().irreality_x <= bound + 1e-10);
    }
  }
}

TEST_CASE("binary-entropy bound for the qubit", "[bounds]") {
  SECTION("mu = 1 makes the left side vanish") {
    for (double lambda : {0.0, 0.3, 0.9, 1.0}) CHECK(hbin_bound_check(lambda, 1.0).first == 0.0);
  }
  SECTION("tight at mu = 0, lambda = 1") {
    const auto [lhs, rhs] = hbin_bound_check(1.0, 0.0);
    CHECK(lhs == Approx(std::numbers::ln2).epsilon(1e-15));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
  SECTION("holds on the grid away from lambda = 1, |mu| = 1") {
    for (int i = 0; i <= 49; ++i) {      // lambda in [0, 0.98]
      for (int j = -50; j <= 50; ++j) {  // mu in [-1, 1]
        const auto [lhs, rhs] = hbin_bound_check(0.02 * i, 0.02 * j);
        CHECK(lhs <= rhs + 1e-12);
      }
    }
  }
  SECTION("known counterexample near lambda = 1, mu -> 1") {
    // lhs = H((1+mu)/2) has unbounded slope at mu = 1 while rhs is linear there.
    const auto [lhs, rhs] = hbin_bound_check(1.0, 0.98);
    CHECK(lhs > rhs + 1e-3);
  }
  CHECK_THROWS_AS(hbin_bound_check(1.2, 0.0), InvalidArgument);
  CHECK_THROWS_AS(hbin_bound_check(0.5, -1.2), InvalidArgument);
}
