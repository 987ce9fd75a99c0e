#include "pathenergy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pathenergy/generators.hpp"

namespace pathenergy {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int arity;
};

constexpr FamilyInfo kFamilyTable[] = {
    {Family::complete, "complete", 1},
    {Family::regular, "regular", 2},
    {Family::tree, "tree", 1},
    {Family::complete_bipartite, "complete_bipartite", 2},
    {Family::hypercube, "hypercube", 1},
    {Family::hypercube_product, "hypercube_product", 2},
    {Family::wheel, "wheel", 1},
    {Family::line_of_complete, "line_of_complete", 1},
    {Family::line_of_complete_bipartite, "line_of_complete_bipartite", 2},
    {Family::prism, "prism", 1},
    {Family::antiprism, "antiprism", 1},
};

const FamilyInfo& info(Family f) {
  for (const auto& row : kFamilyTable)
    if (row.family == f) return row;
  throw std::logic_error("unknown family");
}

void require(bool ok, Family f, const char* what) {
  if (!ok) throw std::invalid_argument(std::string(family_name(f)) + ": " + what);
}

/// {r(k-1) x1, -r x(k-1)}: the path spectrum of r (J - I) on k vertices.
std::vector<Eigenvalue> uniform_spectrum(int r, int k) {
  std::vector<Eigenvalue> s{{static_cast<double>(r) * (k - 1), 1}};
  if (k > 1) s.push_back({-static_cast<double>(r), k - 1});
  return s;
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& row : kFamilyTable)
    if (row.name == name) return row.family;
  return std::nullopt;
}

int family_arity(Family f) { return info(f).arity; }

int ClosedForm::order() const {
  int n = 0;
  for (const auto& e : spectrum) n += e.multiplicity;
  return n;
}

std::vector<double> ClosedForm::expanded() const {
  std::vector<double> out;
  for (const auto& e : spectrum) out.insert(out.end(), e.multiplicity, e.value);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

ClosedForm closed_form_spectrum(Family family, std::vector<int> params) {
  require(static_cast<int>(params.size()) == family_arity(family), family, "wrong number of parameters");
  ClosedForm cf;
  cf.family = family;

  auto regular_derived = [&cf](int r, int k) {
    cf.spectrum = uniform_spectrum(r, k);
    cf.requires_uniform_entries = true;
    cf.uniform_entry = r;
  };

  switch (family) {
    case Family::complete: {
      const int p = params[0];
      require(p >= 1, family, "p >= 1");
      cf.spectrum = uniform_spectrum(p - 1, p);
      break;
    }
    case Family::regular: {
      const int r = params[0], k = params[1];
      require(r >= 1 && k > r && (r * k) % 2 == 0, family, "1 <= r < k with r*k even");
      regular_derived(r, k);
      break;
    }
    case Family::tree: {
      const int p = params[0];
      require(p >= 1, family, "p >= 1");
      cf.spectrum = p == 1 ? std::vector<Eigenvalue>{{0.0, 1}} : uniform_spectrum(1, p);
      break;
    }
    case Family::complete_bipartite: {
      require(params[0] >= 1 && params[1] >= 1, family, "p, q >= 1");
      if (params[0] > params[1]) std::swap(params[0], params[1]);
      // The formula assumes p is the smaller part.
      const double p = params[0], q = params[1];
      const double trace = p * (q - 1) + q * (p - 1);
      const double root = std::sqrt((p - q) * (p - q) + 4.0 * p * p * p * q);
      cf.spectrum = {{(trace + root) / 2.0, 1}, {(trace - root) / 2.0, 1}};
      if (params[0] > 1) cf.spectrum.push_back({-q, params[0] - 1});
      if (params[1] > 1) cf.spectrum.push_back({-p, params[1] - 1});
      break;
    }
    case Family::hypercube: {
      const int d = params[0];
      require(d >= 1 && d <= 20, family, "1 <= d <= 20");
      // Trace-zero form: -d has multiplicity 2^d - 1.
      regular_derived(d, 1 << d);
      break;
    }
    case Family::hypercube_product: {
      const int p = params[0], q = params[1];
      require(p >= 1 && q >= 1 && p + q <= 20, family, "p, q >= 1 and p + q <= 20");
      regular_derived(p + q, 1 << (p + q));
      break;
    }
    case Family::wheel: {
      const int p = params[0];
      require(p >= 4, family, "p >= 4");
      regular_derived(3, p);
      break;
    }
    case Family::line_of_complete: {
      const int p = params[0];
      require(p >= 2, family, "p >= 2");
      regular_derived(2 * (p - 2), p * (p - 1) / 2);
      break;
    }
    case Family::line_of_complete_bipartite: {
      require(params[0] >= 1 && params[1] >= 1, family, "p, q >= 1");
      if (params[0] > params[1]) std::swap(params[0], params[1]);
      regular_derived(params[0] + params[1] - 2, params[0] * params[1]);
      break;
    }
    case Family::prism:
      require(params[0] >= 3, family, "p >= 3");
      regular_derived(3, 2 * params[0]);
      break;
    case Family::antiprism:
      require(params[0] >= 3, family, "p >= 3");
      regular_derived(4, 2 * params[0]);
      break;
  }

  // Zero-degree instances (K_1, L(K_2), L(K_{1,1})) have the single eigenvalue 0.
  cf.spectrum.erase(std::remove_if(cf.spectrum.begin(), cf.spectrum.end(),
                                   [](const Eigenvalue& e) { return e.multiplicity <= 0; }),
                    cf.spectrum.end());
  cf.params = std::move(params);
  cf.path_energy = 0.0;
  for (const auto& e : cf.spectrum) cf.path_energy += std::abs(e.value) * e.multiplicity;
  return cf;
}

Graph family_instance(Family family, const std::vector<int>& params) {
  const auto cf = closed_form_spectrum(family, params);
  const auto& p = cf.params;
  switch (family) {
    case Family::complete:
      return complete_graph(p[0]);
    case Family::regular:
      return harary_graph(p[0], p[1]);
    case Family::tree:
      return path_graph(p[0]);
    case Family::complete_bipartite:
      return complete_bipartite(p[0], p[1]);
    case Family::hypercube:
      return hypercube(p[0]);
    case Family::hypercube_product:
      return cartesian_product(hypercube(p[0]), hypercube(p[1]));
    case Family::wheel:
      return wheel(p[0]);
    case Family::line_of_complete:
      return line_graph(complete_graph(p[0]));
    case Family::line_of_complete_bipartite:
      return line_graph(complete_bipartite(p[0], p[1]));
    case Family::prism:
      return prism(p[0]);
    case Family::antiprism:
      return antiprism(p[0]);
  }
  throw std::logic_error("unknown family");
}

bool uniform_entries(const PathMatrix& pm, int r) {
  for (int i = 0; i < pm.order(); ++i)
    for (int j = 0; j < pm.order(); ++j)
      if (i != j && pm.at(i, j) != r) return false;
  return true;
}

ClosedFormComparison compare_closed_form(const ClosedForm& cf, const Graph& g) {
  ClosedFormComparison out;
  const auto pm = path_matrix(g);
  const auto numeric = symmetric_eigenvalues(to_matrix(pm));
  const auto expected = cf.expanded();
  out.path_energy_numeric = numeric.energy();
  if (cf.requires_uniform_entries) out.premise_holds = uniform_entries(pm, cf.uniform_entry);
  out.size_matches = expected.size() == numeric.values.size();
  if (!out.size_matches) {
    out.max_deviation = INFINITY;
    return out;
  }
  for (std::size_t i = 0; i < expected.size(); ++i)
    out.max_deviation = std::max(out.max_deviation, std::abs(expected[i] - numeric.values[i]));
  return out;
}

// ---------------------------------------------------------------------------

std::string_view bound_name(BoundId id) {
  switch (id) {
    case BoundId::row_sum:
      return "row_sum";
    case BoundId::abs_eig_max_degree:
      return "abs_eig_max_degree";
    case BoundId::pe_edges:
      return "pe_edges";
    case BoundId::pe_degree:
      return "pe_degree";
    case BoundId::energy_relation:
      return "energy_relation";
    case BoundId::pe_lower:
      return "pe_lower";
  }
  return "unknown";
}

BoundReport make_report(BoundId id, double lhs, double rhs) {
  const double eps = 1e-6 * std::max(1.0, rhs);
  BoundReport r{id, lhs, rhs, rhs - lhs, false, false};
  r.holds = r.slack >= -eps;
  r.tight = std::abs(r.slack) <= eps;
  return r;
}

GraphProfile profile(const Graph& g, double rel_tol) {
  GraphProfile gp;
  gp.order = g.order();
  gp.size = g.size();
  gp.max_degree = max_degree(g);
  gp.connected = is_connected(g);
  gp.degrees = degrees(g);
  gp.path = path_matrix(g);
  gp.path_spectrum = symmetric_eigenvalues(to_matrix(gp.path), rel_tol);
  gp.adjacency_spectrum = symmetric_eigenvalues(adjacency_matrix(g), rel_tol);
  return gp;
}

std::vector<BoundReport> check_row_sum_bound(const GraphProfile& gp) {
  std::vector<BoundReport> out;
  const double p = gp.order;
  for (int i = 0; i < gp.order; ++i)
    out.push_back(make_report(BoundId::row_sum, gp.path.row_sum(i), (p - 1) * gp.degrees[i]));
  return out;
}

BoundReport check_eigenvalue_bound(const GraphProfile& gp) {
  return make_report(BoundId::abs_eig_max_degree, gp.path_spectrum.radius(),
                     (gp.order - 1.0) * gp.max_degree);
}

BoundReport check_pe_edge_bound(const GraphProfile& gp) {
  return make_report(BoundId::pe_edges, gp.path_spectrum.energy(), 2.0 * (gp.order - 1.0) * gp.size);
}

BoundReport check_pe_degree_bound(const GraphProfile& gp) {
  const double p = gp.order;
  return make_report(BoundId::pe_degree, gp.path_spectrum.energy(), p * (p - 1) * gp.max_degree);
}

std::vector<BoundReport> check_energy_relation(const GraphProfile& gp) {
  if (!gp.connected) throw std::invalid_argument("energy relation requires a connected graph");
  const double p = gp.order;
  const double half_p_pe = p / 2.0 * gp.path_spectrum.energy();
  return {make_report(BoundId::energy_relation, gp.adjacency_spectrum.energy(), half_p_pe),
          make_report(BoundId::energy_relation, half_p_pe, p * p * (p - 1) * gp.max_degree / 2.0)};
}

BoundReport check_pe_lower_bound(const GraphProfile& gp) {
  if (!gp.connected) throw std::invalid_argument("path-energy lower bound requires a connected graph");
  return make_report(BoundId::pe_lower, 2.0 * (gp.order - 1), gp.path_spectrum.energy());
}

std::vector<BoundReport> check_row_sum_bound(const Graph& g) { return check_row_sum_bound(profile(g)); }
BoundReport check_eigenvalue_bound(const Graph& g) { return check_eigenvalue_bound(profile(g)); }
BoundReport check_pe_edge_bound(const Graph& g) { return check_pe_edge_bound(profile(g)); }
BoundReport check_pe_degree_bound(const Graph& g) { return check_pe_degree_bound(profile(g)); }
std::vector<BoundReport> check_energy_relation(const Graph& g) { return check_energy_relation(profile(g)); }
BoundReport check_pe_lower_bound(const Graph& g) { return check_pe_lower_bound(profile(g)); }

std::vector<BoundReport> check_all_bounds(const GraphProfile& gp) {
  auto out = check_row_sum_bound(gp);
  out.push_back(check_eigenvalue_bound(gp));
  out.push_back(check_pe_edge_bound(gp));
  out.push_back(check_pe_degree_bound(gp));
  if (gp.connected) {
    for (const auto& r : check_energy_relation(gp)) out.push_back(r);
    out.push_back(check_pe_lower_bound(gp));
  }
  return out;
}

}  // namespace pathenergy
