#include "pathenergy/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pathenergy {

Matrix::Matrix(const std::vector<std::vector<double>>& rows) : Matrix(static_cast<int>(rows.size())) {
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[i].size()) != n_) throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < n_; ++j) (*this)(i, j) = rows[i][j];
  }
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

double Matrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_squared() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return s;
}

Matrix to_matrix(const PathMatrix& pm) {
  Matrix m(pm.order());
  for (int i = 0; i < pm.order(); ++i)
    for (int j = 0; j < pm.order(); ++j) m(i, j) = pm.at(i, j);
  return m;
}

Matrix adjacency_matrix(const Graph& g) {
  Matrix m(g.order());
  for (const auto& [u, v] : g.edges()) m(u, v) = m(v, u) = 1.0;
  return m;
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

double Spectrum::sum_squares() const {
  double s = 0.0;
  for (double x : values) s += x * x;
  return s;
}

double Spectrum::energy() const {
  double s = 0.0;
  for (double x : values) s += std::abs(x);
  return s;
}

double Spectrum::radius() const {
  double r = 0.0;
  for (double x : values) r = std::max(r, std::abs(x));
  return r;
}

bool Spectrum::has_borderline() const {
  return std::any_of(values.begin(), values.end(), [this](double x) {
    return std::abs(x) > tol && std::abs(x) <= 10.0 * tol;
  });
}

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j) s += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(s);
}

void rotate(Matrix& a, int p, int q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
  for (int r = 0; r < a.order(); ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
    a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
  }
}

constexpr int kMaxSweeps = 100;

}  // namespace

Spectrum symmetric_eigenvalues(const Matrix& input, double rel_tol) {
  const int n = input.order();
  Spectrum out;
  if (n == 0) return out;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!std::isfinite(input(i, j))) {
        throw std::invalid_argument("non-finite matrix entry at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
  const double scale = input.max_abs();
  out.tol = rel_tol * n * scale;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(input(i, j) - input(j, i)) > out.tol) {
        throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }

  Matrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + input(j, i));

  const double target = std::max(1e-3 * out.tol, 4.0 * DBL_EPSILON * std::sqrt(a.frobenius_squared()));
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        // Entries negligible against both diagonal entries are dropped.
        const double g = 100.0 * std::abs(a(p, q));
        if (sweep > 3 && std::abs(a(p, p)) + g == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + g == std::abs(a(q, q))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        rotate(a, p, q);
      }
  }
  if (sweep == kMaxSweeps) throw std::runtime_error("Jacobi iteration did not converge");

  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = a(i, i);
  std::stable_sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

SignCounts count_signs(const Spectrum& s) {
  SignCounts c;
  for (double x : s.values) {
    if (x > s.tol) {
      ++c.positive;
    } else if (x < -s.tol) {
      ++c.negative;
    } else {
      ++c.zero;
    }
  }
  return c;
}

Spectrum path_spectrum(const Graph& g, double rel_tol) {
  return symmetric_eigenvalues(to_matrix(path_matrix(g)), rel_tol);
}

double path_energy(const Graph& g) { return path_spectrum(g).energy(); }

double path_spectral_radius(const Graph& g) { return path_spectrum(g).radius(); }

Spectrum adjacency_spectrum(const Graph& g, double rel_tol) {
  return symmetric_eigenvalues(adjacency_matrix(g), rel_tol);
}

double graph_energy(const Graph& g) { return adjacency_spectrum(g).energy(); }

EnergyReport energy_report(const Spectrum& path, const Spectrum& adjacency) {
  const auto signs = count_signs(path);
  EnergyReport r;
  r.path_energy = path.energy();
  r.graph_energy = adjacency.energy();
  r.path_spectral_radius = path.radius();
  r.positive_count = signs.positive;
  r.negative_count = signs.negative;
  r.zero_count = signs.zero;
  return r;
}

EnergyReport energy_report(const Graph& g) { return energy_report(path_spectrum(g), adjacency_spectrum(g)); }

SpectrumHygiene check_hygiene(const Spectrum& s, const Matrix& source) {
  const double n = s.size();
  const double tol = std::max(s.tol, 1e-12);
  SpectrumHygiene h;
  h.trace_residual = std::abs(s.sum() - source.trace());
  h.frobenius_residual = std::abs(s.sum_squares() - source.frobenius_squared());
  h.trace_ok = h.trace_residual <= n * tol;
  h.frobenius_ok = h.frobenius_residual <= n * tol * (2.0 * std::max(1.0, s.radius()) + tol);
  return h;
}

SinglePositiveCheck verify_single_positive_identity(const Spectrum& path) {
  SinglePositiveCheck c;
  c.signs = count_signs(path);
  c.path_energy = path.energy();
  c.spectral_radius = path.radius();
  c.holds_precondition = c.signs.positive == 1;
  if (c.holds_precondition) {
    const double tol = std::max(path.tol, 1e-12);
    c.pe_equals_2rho = std::abs(c.path_energy - 2.0 * c.spectral_radius) <= path.size() * tol;
    c.positive_is_radius = std::abs(path.values.front() - c.spectral_radius) <= tol;
  }
  return c;
}

SinglePositiveCheck verify_single_positive_identity(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("single-positive identity requires a connected graph");
  return verify_single_positive_identity(path_spectrum(g));
}

}  // namespace pathenergy
