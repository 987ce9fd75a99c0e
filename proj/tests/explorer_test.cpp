#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "pathenergy/corpus.hpp"
#include "pathenergy/explorer.hpp"
#include "pathenergy/generators.hpp"
#include "pathenergy/graph6.hpp"
#include "pathenergy/json_io.hpp"

using namespace pathenergy;

namespace {

std::vector<std::string> encode(const std::vector<Graph>& graphs) {
  std::vector<std::string> lines;
  for (const Graph& g : graphs) lines.push_back(emit_graph6(g));
  return lines;
}

std::string serialize(const std::vector<ScanRecord>& records, const ScanSummary& summary) {
  std::string out;
  for (const auto& r : records) out += Json(r).dump() + '\n';
  return out + Json(summary).dump();
}

}  // namespace

TEST_CASE("cycles satisfy the single positive eigenvalue pattern") {
  std::vector<Graph> cycles;
  for (int k = 3; k <= 10; ++k) cycles.push_back(cycle(k));
  std::vector<ScanRecord> records;
  const ScanSummary s = scan_lines(encode(cycles), {}, &records);
  CHECK(s.total == 8);
  REQUIRE(records.size() == 8);
  for (const auto& r : records) {
    CHECK(r.conjecture1_applicable);
    CHECK(r.conjecture1_holds);
    CHECK_FALSE(r.conjecture1_counterexample);
    CHECK(r.unicyclic);
    CHECK(r.girth == r.n);
    CHECK(r.bounds_ok);
    CHECK(r.single_positive_checked);
    CHECK(r.single_positive_identity_ok);
  }
  CHECK(s.conjecture1_applicable == 8);
  CHECK(s.conjecture1_holds == 8);
  CHECK(s.conjecture1_counterexamples.empty());
}

TEST_CASE("trees have one positive eigenvalue and many blocks") {
  std::vector<Graph> all;
  for (int n = 1; n <= 8; ++n)
    for (const Graph& t : trees(n)) all.push_back(t);
  std::vector<ScanRecord> records;
  const ScanSummary s = scan_lines(encode(all), {}, &records);
  CHECK(s.total == static_cast<long>(all.size()));
  for (const auto& r : records) {
    CHECK_FALSE(r.conjecture1_applicable);
    if (r.n >= 2) {
      CHECK(r.positive_count == 1);
      CHECK(r.block_count == r.n - 1);
      CHECK(r.nontrivial_block_count == 0);
    }
  }
  CHECK(s.conjecture1_applicable == 0);
  // Trees with at least three vertices disagree with both block readings.
  const long big = std::count_if(records.begin(), records.end(), [](const ScanRecord& r) { return r.n >= 3; });
  CHECK(s.conjecture2_all_blocks.mismatch == big);
  CHECK(s.conjecture2_nontrivial_blocks.mismatch >= big);
}

// In a unicyclic graph with girth g, p_uv = 2 when u and v both lie on the
// cycle and 1 otherwise, so P = J + J_C - D with D = 2 on the cycle and 1
// elsewhere. The rank-two part gives a second positive eigenvalue exactly when
// (g - 2)(n - g - 2) > 2 and a zero eigenvalue when the product is 2.
TEST_CASE("unicyclic positive counts follow the girth formula") {
  for (int n = 3; n <= 10; ++n) {
    std::vector<ScanRecord> records;
    const ScanSummary s = scan_lines(encode(unicyclic_graphs(n)), {}, &records);
    for (const auto& r : records) {
      REQUIRE(r.unicyclic);
      const int product = (r.girth - 2) * (n - r.girth - 2);
      CHECK(r.positive_count == (product > 2 ? 2 : 1));
      CHECK(r.zero_count == (product == 2 ? 1 : 0));
      CHECK_FALSE(r.needs_review);
    }
    long witnesses = 0;
    for (const auto& [girth, list] : s.unicyclic_two_positive) witnesses += static_cast<long>(list.size());
    const long two = std::count_if(records.begin(), records.end(), [](const ScanRecord& r) { return r.positive_count == 2; });
    CHECK(witnesses == two);
    // No unicyclic graph on 7 vertices has two positive eigenvalues; 8 is the first order that does.
    if (n <= 7) CHECK(two == 0);
    if (n >= 8) CHECK(two > 0);
  }
}

TEST_CASE("bowtie block structure") {
  const Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const ScanRecord r = evaluate_graph(bowtie, emit_graph6(bowtie), 1, {});
  CHECK(r.block_count == 2);
  CHECK(r.nontrivial_block_count == 2);
  CHECK_FALSE(r.biconnected);
  CHECK(r.positive_count + r.zero_count + r.negative_count == 5);
}

TEST_CASE("biconnected corpus on six vertices") {
  std::vector<Graph> bic;
  for (const Graph& g : connected_graphs(6))
    if (evaluate_graph(g, "", 0, {}).biconnected) bic.push_back(g);
  CHECK(bic.size() == 56);
  const ScanSummary s = scan_lines(encode(bic), {});
  CHECK(s.conjecture1_applicable + static_cast<long>(s.needs_review.size()) == 56);
  CHECK(s.conjecture1_holds == s.conjecture1_applicable);
  CHECK(s.bound_violations.empty());
}

TEST_CASE("stream handling") {
  std::istringstream in(">>graph6<<A_\n\n  Dhc  \nnot graph6\nCj\r\n");
  std::vector<ScanRecord> records;
  ScanOptions opts;
  const ScanSummary s = scan_stream(in, opts, [&](const ScanRecord& r) { records.push_back(r); });
  CHECK(s.total == 3);
  REQUIRE(s.parse_errors.size() == 1);
  CHECK(s.parse_errors[0].line == 4);
  REQUIRE(records.size() == 3);
  CHECK(records[0].graph6 == "A_");
  CHECK(records[1].line == 3);
  CHECK(records[2].graph6 == "Cj");

  opts.strict = true;
  std::istringstream bad("A_\nnot graph6\n");
  CHECK_THROWS_AS(scan_stream(bad, opts, [](const ScanRecord&) {}), ScanError);
}

TEST_CASE("oversize graphs are skipped") {
  ScanOptions opts;
  opts.max_n = 5;
  const ScanSummary s = scan_lines({emit_graph6(cycle(4)), emit_graph6(cycle(6)), emit_graph6(complete_graph(5))}, opts);
  CHECK(s.total == 2);
  CHECK(s.skipped_oversize == 1);
}

TEST_CASE("determinism and order independence") {
  Rng rng(64);
  std::vector<std::string> lines;
  for (int i = 0; i < 300; ++i) lines.push_back(emit_graph6(random_graph(3 + static_cast<int>(rng() % 9), 0.45, rng)));

  std::vector<ScanRecord> a;
  std::vector<ScanRecord> b;
  const ScanSummary sa = scan_lines(lines, {}, &a);
  ScanOptions parallel;
  parallel.jobs = 4;
  const ScanSummary sb = scan_lines(lines, parallel, &b);
  CHECK(serialize(a, sa) == serialize(b, sb));

  std::vector<std::string> shuffled = lines;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const ScanSummary sc = scan_lines(shuffled, {});
  CHECK(Json(sc).dump() == Json(sa).dump());

  // The report sees records only, not the raw stream.
  ScanSummary from_stream = sa;
  from_stream.lines_read = 0;
  CHECK(Json(stratified_report(a)).dump() == Json(from_stream).dump());
}
