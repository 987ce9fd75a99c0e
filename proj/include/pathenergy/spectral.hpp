#pragma once

#include <vector>

#include "pathenergy/disjoint_paths.hpp"
#include "pathenergy/graph.hpp"

namespace pathenergy {

/// Dense square matrix of doubles, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}
  /// Throws std::invalid_argument unless `rows` is square.
  explicit Matrix(const std::vector<std::vector<double>>& rows);

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  [[nodiscard]] double max_abs() const;
  [[nodiscard]] double trace() const;
  [[nodiscard]] double frobenius_squared() const;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

Matrix to_matrix(const PathMatrix& pm);
Matrix adjacency_matrix(const Graph& g);

/// Relative tolerance used when none is given. The classification threshold
/// of a spectrum is this times n times the largest absolute entry.
inline constexpr double kDefaultRelTol = 1e-8;

/// Eigenvalues sorted descending with the sign-classification threshold.
struct Spectrum {
  std::vector<double> values;
  /// Values within [-tol, tol] count as zero.
  double tol = 0.0;

  [[nodiscard]] int size() const noexcept { return static_cast<int>(values.size()); }
  [[nodiscard]] double sum() const;
  [[nodiscard]] double sum_squares() const;
  /// Sum of absolute values.
  [[nodiscard]] double energy() const;
  /// Largest absolute value; 0 for an empty spectrum.
  [[nodiscard]] double radius() const;
  /// Some eigenvalue lies in the band tol < |value| <= 10 tol, where its sign
  /// is not trustworthy.
  [[nodiscard]] bool has_borderline() const;
};

/// All eigenvalues of a real symmetric matrix (cyclic Jacobi).
///
/// Rotations continue until the off-diagonal Frobenius norm is below
/// 1e-3 * tol (or machine precision), so every eigenvalue is within
/// tol = rel_tol * n * max|a_ij| of the exact one. Deterministic for
/// identical input. A 0 x 0 matrix yields an empty spectrum.
///
/// Throws std::invalid_argument on non-finite entries or |a_ij - a_ji| > tol.
Spectrum symmetric_eigenvalues(const Matrix& a, double rel_tol = kDefaultRelTol);

struct SignCounts {
  int positive = 0;
  int zero = 0;
  int negative = 0;

  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

SignCounts count_signs(const Spectrum& s);

Spectrum path_spectrum(const Graph& g, double rel_tol = kDefaultRelTol);
double path_energy(const Graph& g);
double path_spectral_radius(const Graph& g);

Spectrum adjacency_spectrum(const Graph& g, double rel_tol = kDefaultRelTol);
double graph_energy(const Graph& g);

struct EnergyReport {
  double path_energy = 0.0;
  double graph_energy = 0.0;
  double path_spectral_radius = 0.0;
  int positive_count = 0;
  int negative_count = 0;
  int zero_count = 0;
};

EnergyReport energy_report(const Spectrum& path, const Spectrum& adjacency);
EnergyReport energy_report(const Graph& g);

/// Residuals of the two cheap consistency checks on a computed spectrum:
/// sum of eigenvalues vs trace and sum of squares vs squared Frobenius norm.
struct SpectrumHygiene {
  double trace_residual = 0.0;
  double frobenius_residual = 0.0;
  bool trace_ok = false;
  bool frobenius_ok = false;

  [[nodiscard]] bool ok() const noexcept { return trace_ok && frobenius_ok; }
};

SpectrumHygiene check_hygiene(const Spectrum& s, const Matrix& source);

/// Outcome of testing "one positive path eigenvalue implies PE = 2 rho".
struct SinglePositiveCheck {
  bool holds_precondition = false;
  /// Only meaningful when holds_precondition.
  bool pe_equals_2rho = false;
  bool positive_is_radius = false;
  double path_energy = 0.0;
  double spectral_radius = 0.0;
  SignCounts signs;
};

/// Throws std::invalid_argument for a disconnected graph.
SinglePositiveCheck verify_single_positive_identity(const Graph& g);
SinglePositiveCheck verify_single_positive_identity(const Spectrum& path);

}  // namespace pathenergy
