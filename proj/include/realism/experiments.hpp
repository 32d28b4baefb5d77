#pragma once

// Qubit closed form and the qutrit sweep of I(rho_n) = ln 3 - S((Phi_B Phi_A)^n rho)
// over the angle between the two measured spin directions.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "realism/bounds.hpp"
#include "realism/channels.hpp"

namespace realism {

struct Spin1 {
  CMatrix sx;
  CMatrix sy;
  CMatrix sz;
};

/// Spin-1 matrices (hbar = 1) in the S_z basis ordered m = +1, 0, -1.
inline Spin1 spin1_operators() {
  const double s = 1.0 / std::numbers::sqrt2;
  const Complex i(0.0, 1.0);
  Spin1 out{CMatrix::Zero(3, 3), CMatrix::Zero(3, 3), CMatrix::Zero(3, 3)};
  out.sx(0, 1) = out.sx(1, 0) = out.sx(1, 2) = out.sx(2, 1) = s;
  out.sy(0, 1) = -i * s;
  out.sy(1, 0) = i * s;
  out.sy(1, 2) = -i * s;
  out.sy(2, 1) = i * s;
  out.sz(0, 0) = 1.0;
  out.sz(2, 2) = -1.0;
  return out;
}

/// Qutrit configuration: rho = |m=-1><m=-1|, A = S_z cos phi + S_x sin phi, B = S_z.
struct QutritSetup {
  DensityMatrix rho;
  ProjectiveObservable a;
  ProjectiveObservable b;
};

inline QutritSetup qutrit_setup(double phi, const GellMannBasis& basis) {
  detail::require_same_dim(basis.dim(), 3, "qutrit_setup");
  const Spin1 s = spin1_operators();
  CVector down = CVector::Zero(3);
  down(2) = 1.0;
  return {DensityMatrix::pure(down), observable_from_matrix(s.sz * std::cos(phi) + s.sx * std::sin(phi), basis),
          observable_from_matrix(s.sz, basis)};
}

struct SweepGrid {
  std::vector<double> phi_values;
  std::vector<int> n_values;
  // Row-major |phi| x |n|.
  std::vector<double> results;      // ln d - S(rho_n), nats
  std::vector<double> bloch_norms;  // ||r_n||
  std::string initial_state = "qutrit S_z eigenstate, m = -1";
  std::string observables = "A = S_z cos(phi) + S_x sin(phi), B = S_z";

  [[nodiscard]] std::size_t index(std::size_t phi_index, std::size_t n_index) const {
    return phi_index * n_values.size() + n_index;
  }
  [[nodiscard]] double at(std::size_t phi_index, std::size_t n_index) const { return results[index(phi_index, n_index)]; }
};

/// `points` uniform angles covering [0, pi/2] inclusive.
inline std::vector<double> default_phi_grid(int points) {
  if (points < 1) throw InvalidArgument("default_phi_grid: need at least one point");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) grid[static_cast<std::size_t>(k)] = points == 1 ? 0.0 : (std::numbers::pi / 2) * k / (points - 1);
  return grid;
}

/// Sweep over phi and n = 1..n_max. Cells come from repeated Hilbert-space
/// maps; a sample of 8 cells is recomputed through (P_B P_A)^n and must agree
/// within 1e-10.
inline SweepGrid qutrit_sweep(const std::vector<double>& phi_grid, int n_max) {
  if (n_max < 1) throw InvalidArgument("qutrit_sweep: n_max must be >= 1");
  for (double phi : phi_grid) {
    if (!(phi >= -tol::algebraic && phi <= std::numbers::pi / 2 + tol::algebraic)) {
      throw InvalidArgument("qutrit_sweep: phi outside [0, pi/2]");
    }
  }
  const GellMannBasis basis(3);
  const double ln3 = std::log(3.0);

  SweepGrid grid;
  grid.phi_values = phi_grid;
  for (int n = 1; n <= n_max; ++n) grid.n_values.push_back(n);
  grid.results.resize(phi_grid.size() * grid.n_values.size());
  grid.bloch_norms.resize(grid.results.size());

  for (std::size_t p = 0; p < phi_grid.size(); ++p) {
    const QutritSetup setup = qutrit_setup(phi_grid[p], basis);
    DensityMatrix rho = setup.rho;
    for (std::size_t k = 0; k < grid.n_values.size(); ++k) {
      rho = phi_map(phi_map(rho, setup.a), setup.b);
      grid.results[grid.index(p, k)] = ln3 - von_neumann_entropy(rho);
      grid.bloch_norms[grid.index(p, k)] = to_bloch(rho, basis).norm();
    }
  }

  const std::size_t cells = grid.results.size();
  const std::size_t samples = std::min<std::size_t>(8, cells);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t cell = samples == 1 ? 0 : s * (cells - 1) / (samples - 1);
    const std::size_t p = cell / grid.n_values.size();
    const std::size_t k = cell % grid.n_values.size();
    const QutritSetup setup = qutrit_setup(phi_grid[p], basis);
    const SimplexProjector pa = simplex_projector(setup.a);
    const SimplexProjector pb = simplex_projector(setup.b);
    BlochVector r = to_bloch(setup.rho, basis);
    for (int n = 0; n < grid.n_values[k]; ++n) r = pairwise_step(r, pa, pb);
    const double bloch_value = ln3 - von_neumann_entropy(from_bloch(r, basis));
    if (std::abs(bloch_value - grid.results[cell]) > 1e-10 || std::abs(r.norm() - grid.bloch_norms[cell]) > 1e-10) {
      throw std::runtime_error("qutrit_sweep: Bloch-space cross-check disagrees with the Hilbert-space path");
    }
  }
  return grid;
}

/// r_n = (a.b)^{2n-1} (a.r0) b for a qubit.
inline BlochVector qubit_closed_form(const RVector& r0, const RVector& a_hat, const RVector& b_hat, int n) {
  if (r0.size() != 3 || a_hat.size() != 3 || b_hat.size() != 3) {
    throw DimensionMismatch("qubit_closed_form: expected 3-vectors");
  }
  if (std::abs(a_hat.norm() - 1.0) > 1e-12 || std::abs(b_hat.norm() - 1.0) > 1e-12) {
    throw InvalidArgument("qubit_closed_form: directions must be unit vectors");
  }
  if (n < 1) throw InvalidArgument("qubit_closed_form: n must be >= 1");
  const double scale = std::pow(a_hat.dot(b_hat), 2 * n - 1) * a_hat.dot(r0);
  return {2, scale * b_hat};
}

namespace detail {

inline std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace detail

inline constexpr const char* kSweepCsvHeader = "phi_rad,n,max_irreality_nats,bloch_norm";

inline std::string sweep_csv(const SweepGrid& grid) {
  std::string out = std::string(kSweepCsvHeader) + "\n";
  for (std::size_t p = 0; p < grid.phi_values.size(); ++p) {
    for (std::size_t k = 0; k < grid.n_values.size(); ++k) {
      out += detail::format_g12(grid.phi_values[p]) + "," + std::to_string(grid.n_values[k]) + "," +
             detail::format_g12(grid.results[grid.index(p, k)]) + "," +
             detail::format_g12(grid.bloch_norms[grid.index(p, k)]) + "\n";
    }
  }
  return out;
}

/// Writes `contents` next to `path` and renames it into place, so a failed
/// write never leaves a partial file behind.
inline void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << contents;
    f.flush();
    if (!f) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at " + path.string());
  }
}

inline void emit_sweep_csv(const SweepGrid& grid, const std::filesystem::path& path) {
  write_file_atomically(path, sweep_csv(grid));
}

struct SweepRow {
  double phi_rad = 0.0;
  int n = 0;
  double max_irreality_nats = 0.0;
  double bloch_norm = 0.0;
};

inline std::vector<SweepRow> read_sweep_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(f, line) || line != kSweepCsvHeader) {
    throw std::runtime_error(path.string() + ": unexpected header");
  }
  std::vector<SweepRow> rows;
  int line_no = 1;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream in(line);
    SweepRow row;
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(in >> row.phi_rad >> c1 >> row.n >> c2 >> row.max_irreality_nats >> c3 >> row.bloch_norm) || c1 != ',' ||
        c2 != ',' || c3 != ',') {
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": malformed row");
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace realism
