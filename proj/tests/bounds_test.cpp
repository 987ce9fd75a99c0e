#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pathenergy/bounds.hpp"
#include "pathenergy/corpus.hpp"
#include "pathenergy/generators.hpp"

using namespace pathenergy;

namespace {

Graph paw() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}}); }

void check_form_invariants(const ClosedForm& cf) {
  int mult = 0;
  double trace = 0;
  for (const auto& e : cf.spectrum) {
    CHECK(e.multiplicity > 0);
    mult += e.multiplicity;
    trace += e.value * e.multiplicity;
  }
  CHECK(mult == cf.order());
  CHECK(std::abs(trace) <= 1e-9 * std::max(1.0, cf.path_energy));
  double pe = 0;
  for (double x : cf.expanded()) pe += std::abs(x);
  CHECK(pe == doctest::Approx(cf.path_energy));
}

void check_matches(Family f, const std::vector<int>& params) {
  const ClosedForm cf = closed_form_spectrum(f, params);
  check_form_invariants(cf);
  const auto cmp = compare_closed_form(cf, family_instance(f, params));
  INFO(family_name(f), " ", params[0]);
  CHECK(cmp.size_matches);
  CHECK(cmp.premise_holds);
  CHECK(cmp.max_deviation < 1e-6);
}

}  // namespace

TEST_CASE("family names round trip") {
  for (Family f : kAllFamilies) {
    CHECK(family_from_name(family_name(f)) == f);
    CHECK(family_arity(f) >= 1);
  }
  CHECK_FALSE(family_from_name("petersen").has_value());
}

TEST_CASE("closed forms at fixed points") {
  const auto k5 = closed_form_spectrum(Family::complete, {5});
  CHECK(k5.path_energy == doctest::Approx(32));
  CHECK(k5.expanded() == std::vector<double>{16, -4, -4, -4, -4});

  CHECK(closed_form_spectrum(Family::line_of_complete, {4}).path_energy == doctest::Approx(40));

  const auto k22 = closed_form_spectrum(Family::complete_bipartite, {2, 2});
  CHECK(k22.expanded().size() == 4);
  for (double x : k22.expanded()) CHECK((x == doctest::Approx(6) || x == doctest::Approx(-2)));
  CHECK(k22.expanded() == closed_form_spectrum(Family::regular, {2, 4}).expanded());

  CHECK(closed_form_spectrum(Family::complete_bipartite, {5, 2}).params == std::vector<int>{2, 5});
  CHECK(closed_form_spectrum(Family::wheel, {7}).path_energy == doctest::Approx(36));
  CHECK(closed_form_spectrum(Family::tree, {6}).path_energy == doctest::Approx(10));
  CHECK(closed_form_spectrum(Family::regular, {2, 5}).path_energy == doctest::Approx(16));

  // Q_2 = C_4 and Q_3 are r-regular with connectivity r; -d carries multiplicity 2^d - 1.
  const auto q3 = closed_form_spectrum(Family::hypercube, {3});
  CHECK(q3.expanded() == std::vector<double>{21, -3, -3, -3, -3, -3, -3, -3});
  CHECK(q3.path_energy == doctest::Approx(42));
}

TEST_CASE("closed form parameter validation") {
  CHECK_THROWS_AS(closed_form_spectrum(Family::complete, {}), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_spectrum(Family::complete, {0}), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_spectrum(Family::prism, {2}), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_spectrum(Family::complete_bipartite, {3}), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_spectrum(Family::wheel, {3}), std::invalid_argument);
}

TEST_CASE("closed forms match numeric spectra") {
  for (int p = 1; p <= 8; ++p) check_matches(Family::complete, {p});
  for (int p = 1; p <= 9; ++p) check_matches(Family::tree, {p});
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q) check_matches(Family::complete_bipartite, {p, q});
  for (int d = 1; d <= 4; ++d) check_matches(Family::hypercube, {d});
  for (int p = 4; p <= 9; ++p) check_matches(Family::wheel, {p});
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; p + q <= 4; ++q) check_matches(Family::hypercube_product, {p, q});
  for (int p = 2; p <= 6; ++p) check_matches(Family::line_of_complete, {p});
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) check_matches(Family::line_of_complete_bipartite, {p, q});
  for (int p = 3; p <= 6; ++p) {
    check_matches(Family::prism, {p});
    check_matches(Family::antiprism, {p});
  }
  for (int k = 3; k <= 10; ++k)
    for (int r = 2; r < k; ++r)
      if (r * k % 2 == 0) check_matches(Family::regular, {r, k});
}

TEST_CASE("closed form applies to every tree") {
  for (int n = 2; n <= 9; ++n) {
    const auto cf = closed_form_spectrum(Family::tree, {n});
    for (const Graph& t : trees(n)) CHECK(compare_closed_form(cf, t).max_deviation < 1e-6);
  }
}

TEST_CASE("regular premise check") {
  // Two disjoint triangles are 2-regular but their path matrix is not uniform.
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto cmp = compare_closed_form(closed_form_spectrum(Family::regular, {2, 6}), two_triangles);
  CHECK_FALSE(cmp.premise_holds);
  CHECK(uniform_entries(path_matrix(cycle(6)), 2));
  CHECK_FALSE(uniform_entries(path_matrix(path_graph(3)), 2));
}

TEST_CASE("corollary values") {
  for (int p = 4; p <= 6; ++p)
    CHECK(path_energy(line_graph(complete_graph(p))) == doctest::Approx(2.0 * (p + 1) * (p - 2) * (p - 2)));
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q)
      CHECK(path_energy(line_graph(complete_bipartite(p, q))) == doctest::Approx(2.0 * (p + q - 2) * (p * q - 1)));
  for (int p = 3; p <= 6; ++p) {
    CHECK(path_energy(prism(p)) == doctest::Approx(6.0 * (2 * p - 1)));
    CHECK(path_energy(antiprism(p)) == doctest::Approx(8.0 * (2 * p - 1)));
    CHECK(path_energy(prism(p)) / path_energy(antiprism(p)) == doctest::Approx(0.75));
  }
}

TEST_CASE("report tolerance") {
  CHECK(make_report(BoundId::pe_lower, 2.0, 2.0).tight);
  CHECK(make_report(BoundId::pe_lower, 2.0 + 5e-7, 2.0).holds);
  CHECK_FALSE(make_report(BoundId::pe_lower, 2.0 + 5e-6, 2.0).holds);
  CHECK(make_report(BoundId::pe_lower, 1000.0 + 5e-4, 1000.0).holds);
  CHECK_FALSE(make_report(BoundId::pe_lower, 1000.0 + 5e-3, 1000.0).holds);
  const auto loose = make_report(BoundId::pe_edges, 1.0, 3.0);
  CHECK(loose.holds);
  CHECK_FALSE(loose.tight);
  CHECK(loose.slack == doctest::Approx(2.0));
}

TEST_CASE("bound examples") {
  const Graph fig = paw();
  const auto rows = check_row_sum_bound(fig);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].lhs == 5);
  CHECK(rows[1].rhs == 9);
  CHECK(rows[0].lhs == 3);
  CHECK(rows[0].rhs == 3);
  CHECK(rows[0].tight);
  CHECK(check_eigenvalue_bound(fig).lhs == doctest::Approx(4.6457).epsilon(1e-4));
  CHECK(check_eigenvalue_bound(fig).rhs == 9);
  CHECK(check_pe_edge_bound(fig).rhs == 24);
  CHECK(check_pe_lower_bound(fig).lhs == 6);
  CHECK(check_pe_lower_bound(fig).rhs == doctest::Approx(9.2915).epsilon(1e-4));

  const auto isolated = check_row_sum_bound(Graph(3, {{0, 1}}));
  CHECK(isolated[2].lhs == 0);
  CHECK(isolated[2].rhs == 0);
  CHECK(isolated[2].holds);

  for (int p = 2; p <= 8; ++p) {
    const auto r = check_eigenvalue_bound(complete_graph(p));
    CHECK(r.tight);
    CHECK(r.lhs == doctest::Approx((p - 1.0) * (p - 1.0)));
    const auto d = check_pe_degree_bound(complete_graph(p));
    CHECK(d.lhs == doctest::Approx(2.0 * (p - 1) * (p - 1)));
    CHECK(d.rhs == doctest::Approx(1.0 * p * (p - 1) * (p - 1)));
  }
  CHECK(check_eigenvalue_bound(star(5)).lhs == doctest::Approx(4));
  CHECK(check_eigenvalue_bound(star(5)).rhs == 16);

  const Graph k2 = complete_graph(2);
  CHECK(check_pe_edge_bound(k2).tight);
  CHECK(check_pe_degree_bound(k2).tight);
  for (const auto& r : check_energy_relation(k2)) CHECK(r.tight);
  CHECK(check_pe_lower_bound(k2).tight);

  const auto k4 = check_energy_relation(complete_graph(4));
  CHECK(k4[0].lhs == doctest::Approx(6));
  CHECK(k4[0].rhs == doctest::Approx(36));

  const auto c5 = check_energy_relation(cycle(5));
  CHECK(c5[0].lhs == doctest::Approx(6.472).epsilon(1e-3));
  CHECK(c5[0].rhs == doctest::Approx(40));
  CHECK(check_pe_edge_bound(cycle(5)).rhs == 40);
  CHECK(check_pe_degree_bound(prism(3)).lhs == doctest::Approx(30));
  CHECK(check_pe_degree_bound(prism(3)).rhs == 90);

  for (int n = 2; n <= 9; ++n)
    for (const Graph& t : trees(n)) CHECK(check_pe_lower_bound(t).tight);

  CHECK_THROWS_AS(check_pe_lower_bound(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(check_energy_relation(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("disconnected graphs skip connectivity-dependent bounds") {
  const auto reports = check_all_bounds(profile(Graph(4, {{0, 1}, {2, 3}})));
  for (const auto& r : reports) {
    CHECK(r.bound_id != BoundId::pe_lower);
    CHECK(r.bound_id != BoundId::energy_relation);
    CHECK(r.holds);
  }
}

TEST_CASE("all bounds hold on random graphs") {
  Rng rng(1000);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const Graph g = trial % 2 ? random_graph(n, 0.3, rng) : random_connected_graph(n, 0.3, rng);
    for (const auto& r : check_all_bounds(profile(g))) CHECK(r.holds);
  }
}

// rho <= max row sum <= (p-1) Delta, with equality only when every entry
// equals Delta: complete graphs, but also C_4, K_{3,3}, prisms and any other
// regular graph whose connectivity equals its degree.
TEST_CASE("eigenvalue bound is tight exactly on uniform path matrices") {
  int tight = 0;
  int complete = 0;
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : connected_graphs(n)) {
      const bool uniform = uniform_entries(path_matrix(g), max_degree(g));
      CHECK(check_eigenvalue_bound(g).tight == uniform);
      tight += uniform;
      complete += g.size() == n * (n - 1) / 2;
    }
  CHECK(tight > complete);
  CHECK(check_eigenvalue_bound(cycle(4)).tight);
  CHECK_FALSE(check_eigenvalue_bound(path_graph(4)).tight);
}

TEST_CASE("complete bipartite K_{2,q} gains a second positive eigenvalue at q = 6") {
  auto positives = [](const ClosedForm& cf) {
    int count = 0;
    for (double x : cf.expanded()) count += x > 1e-9;
    return count;
  };
  for (int q = 2; q <= 5; ++q) CHECK(positives(closed_form_spectrum(Family::complete_bipartite, {2, q})) == 1);
  for (int q = 6; q <= 9; ++q) {
    const ClosedForm cf = closed_form_spectrum(Family::complete_bipartite, {2, q});
    CHECK(positives(cf) == 2);
    CHECK(count_signs(path_spectrum(complete_bipartite(2, q))).positive == 2);
  }
}
