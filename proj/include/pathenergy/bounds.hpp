#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathenergy/disjoint_paths.hpp"
#include "pathenergy/graph.hpp"
#include "pathenergy/spectral.hpp"

namespace pathenergy {

// ---------------------------------------------------------------------------
// Closed-form path spectra
// ---------------------------------------------------------------------------

enum class Family {
  complete,                    // K_p                         params {p}
  regular,                     // r-regular on k vertices     params {r, k}
  tree,                        // any tree on p vertices      params {p}
  complete_bipartite,          // K_{p,q}                     params {p, q}
  hypercube,                   // Q_d                         params {d}
  hypercube_product,           // Q_p x Q_q                   params {p, q}
  wheel,                       // W_p, p vertices in total    params {p}
  line_of_complete,            // L(K_p)                      params {p}
  line_of_complete_bipartite,  // L(K_{p,q})                  params {p, q}
  prism,                       // Y_p                         params {p}
  antiprism,                   // Y'_p                        params {p}
};

inline constexpr Family kAllFamilies[] = {
    Family::complete,          Family::regular,          Family::tree,
    Family::complete_bipartite, Family::hypercube,        Family::hypercube_product,
    Family::wheel,             Family::line_of_complete, Family::line_of_complete_bipartite,
    Family::prism,             Family::antiprism,
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
/// Number of integer parameters the family takes.
int family_arity(Family f);

struct Eigenvalue {
  double value = 0.0;
  int multiplicity = 0;
};

struct ClosedForm {
  Family family = Family::complete;
  std::vector<int> params;
  std::vector<Eigenvalue> spectrum;
  double path_energy = 0.0;
  /// The form comes from the r-regular result and is only valid when every
  /// off-diagonal path-matrix entry equals `uniform_entry`.
  bool requires_uniform_entries = false;
  int uniform_entry = 0;

  [[nodiscard]] int order() const;
  /// Eigenvalues with multiplicity, sorted descending.
  [[nodiscard]] std::vector<double> expanded() const;
};

/// Throws std::invalid_argument for a wrong parameter count or values
/// outside the family's domain. complete_bipartite and
/// line_of_complete_bipartite normalize to p <= q.
ClosedForm closed_form_spectrum(Family family, std::vector<int> params);

/// Representative graph for a family instance. `tree` yields the path P_p
/// and `regular` the Harary graph H_{r,k}; other families are exact.
Graph family_instance(Family family, const std::vector<int>& params);

/// True when every off-diagonal entry equals `r`, the premise of the
/// regular-graph closed form.
bool uniform_entries(const PathMatrix& pm, int r);

struct ClosedFormComparison {
  double max_deviation = 0.0;
  double path_energy_numeric = 0.0;
  /// Premise check; true when the form has no premise.
  bool premise_holds = true;
  bool size_matches = true;
};

/// Compares the closed form with the numerically computed path spectrum of g.
ClosedFormComparison compare_closed_form(const ClosedForm& cf, const Graph& g);

// ---------------------------------------------------------------------------
// Inequality checkers
// ---------------------------------------------------------------------------

enum class BoundId { row_sum, abs_eig_max_degree, pe_edges, pe_degree, energy_relation, pe_lower };

std::string_view bound_name(BoundId id);

struct BoundReport {
  BoundId bound_id = BoundId::row_sum;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  /// |slack| within tolerance.
  bool tight = false;
};

/// Slack tolerance 1e-6 * max(1, rhs).
BoundReport make_report(BoundId id, double lhs, double rhs);

/// Precomputed quantities shared by the checkers.
struct GraphProfile {
  int order = 0;
  int size = 0;
  int max_degree = 0;
  bool connected = false;
  std::vector<int> degrees;
  PathMatrix path;
  Spectrum path_spectrum;
  Spectrum adjacency_spectrum;
};

GraphProfile profile(const Graph& g, double rel_tol = kDefaultRelTol);

/// One report per vertex: sum_j p_ij <= (p-1) d(v_i).
std::vector<BoundReport> check_row_sum_bound(const GraphProfile& gp);
/// max |beta| <= (p-1) Delta.
BoundReport check_eigenvalue_bound(const GraphProfile& gp);
/// PE <= 2 (p-1) m.
BoundReport check_pe_edge_bound(const GraphProfile& gp);
/// PE <= p (p-1) Delta.
BoundReport check_pe_degree_bound(const GraphProfile& gp);
/// E <= (p/2) PE, then (p/2) PE <= p^2 (p-1) Delta / 2. Connected graphs only.
std::vector<BoundReport> check_energy_relation(const GraphProfile& gp);
/// 2 (p-1) <= PE. Connected graphs only.
BoundReport check_pe_lower_bound(const GraphProfile& gp);

std::vector<BoundReport> check_row_sum_bound(const Graph& g);
BoundReport check_eigenvalue_bound(const Graph& g);
BoundReport check_pe_edge_bound(const Graph& g);
BoundReport check_pe_degree_bound(const Graph& g);
std::vector<BoundReport> check_energy_relation(const Graph& g);
BoundReport check_pe_lower_bound(const Graph& g);

/// Every applicable checker; the two connectivity-dependent bounds are
/// skipped for disconnected graphs.
std::vector<BoundReport> check_all_bounds(const GraphProfile& gp);

}  // namespace pathenergy
