#include "pathenergy/explorer.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <istream>
#include <sstream>

#include "pathenergy/blocks.hpp"
#include "pathenergy/bounds.hpp"
#include "pathenergy/graph6.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pathenergy {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::size_t kBatch = 1024;
constexpr double kRecheckFactor = 10.0;

bool confirms_counterexample(const Graph& g, double rel_tol, int positive_count) {
  const auto tight = path_spectrum(g, rel_tol / kRecheckFactor);
  return !tight.has_borderline() && count_signs(tight).positive == positive_count;
}

}  // namespace

ScanRecord evaluate_graph(const Graph& g, const std::string& graph6, long line, const ScanOptions& options) {
  ScanRecord r;
  r.line = line;
  r.graph6 = graph6;
  r.n = g.order();
  r.m = g.size();
  r.connected = is_connected(g);
  r.unicyclic = r.connected && r.m == r.n;
  r.girth = girth(g);

  const auto blocks = block_decomposition(g);
  r.block_count = blocks.block_count();
  r.nontrivial_block_count = blocks.nontrivial_block_count;
  r.biconnected = r.n >= 3 && r.block_count == 1 && static_cast<int>(blocks.blocks.front().size()) == r.n;

  const auto gp = profile(g, options.rel_tol);
  const auto& spec = gp.path_spectrum;
  const auto signs = count_signs(spec);
  r.positive_count = signs.positive;
  r.zero_count = signs.zero;
  r.negative_count = signs.negative;
  r.pe = spec.energy();
  r.spectral_radius = spec.radius();
  r.spectrum = spec.values;
  r.needs_review = spec.has_borderline();

  r.conjecture1_applicable = r.biconnected;
  r.conjecture1_holds = r.positive_count == 1;
  r.conjecture1_counterexample = r.conjecture1_applicable && !r.conjecture1_holds && !r.needs_review &&
                                 confirms_counterexample(g, options.rel_tol, r.positive_count);
  r.conjecture2_match_all_blocks = r.positive_count == r.block_count;
  r.conjecture2_match_nontrivial_blocks = r.positive_count == r.nontrivial_block_count;

  if (r.connected && r.positive_count == 1) {
    const auto check = verify_single_positive_identity(spec);
    r.single_positive_checked = true;
    r.single_positive_identity_ok = check.pe_equals_2rho && check.positive_is_radius;
  }

  if (options.check_bounds) {
    for (const auto& report : check_all_bounds(gp)) {
      if (report.holds) continue;
      const auto name = std::string(bound_name(report.bound_id));
      if (std::find(r.violated_bounds.begin(), r.violated_bounds.end(), name) == r.violated_bounds.end())
        r.violated_bounds.push_back(name);
    }
    r.bounds_ok = r.violated_bounds.empty();
  }
  return r;
}

void ScanSummary::add(const ScanRecord& r) {
  ++total;
  if (r.needs_review) needs_review.push_back(r.graph6);
  if (r.conjecture1_applicable && !r.needs_review) {
    ++conjecture1_applicable;
    if (r.conjecture1_holds) ++conjecture1_holds;
    if (r.conjecture1_counterexample) conjecture1_counterexamples.push_back(r.graph6);
  }
  (r.conjecture2_match_all_blocks ? conjecture2_all_blocks.match : conjecture2_all_blocks.mismatch)++;
  (r.conjecture2_match_nontrivial_blocks ? conjecture2_nontrivial_blocks.match
                                         : conjecture2_nontrivial_blocks.mismatch)++;
  ++positive_by_block_count[r.block_count][r.positive_count];
  ++positive_by_nontrivial_block_count[r.nontrivial_block_count][r.positive_count];
  ++strata[{r.n, r.biconnected, r.unicyclic}][r.positive_count];
  if (r.unicyclic) {
    ++unicyclic_by_girth[r.girth][r.positive_count];
    if (r.positive_count == 2 && !r.needs_review) unicyclic_two_positive[r.girth].push_back(r.graph6);
  }
  if (r.single_positive_checked) {
    ++single_positive_checked;
    if (!r.single_positive_identity_ok) single_positive_failures.push_back(r.graph6);
  }
  if (!r.bounds_ok) bound_violations.push_back(r.graph6);
}

void ScanSummary::finalize() {
  for (auto* list : {&conjecture1_counterexamples, &needs_review, &single_positive_failures, &bound_violations})
    std::sort(list->begin(), list->end());
  for (auto& [girth, list] : unicyclic_two_positive) std::sort(list.begin(), list.end());
  std::sort(parse_errors.begin(), parse_errors.end(),
            [](const LineError& a, const LineError& b) { return a.line < b.line; });
}

ScanSummary stratified_report(const std::vector<ScanRecord>& records) {
  ScanSummary s;
  for (const auto& r : records) s.add(r);
  s.finalize();
  return s;
}

ScanSummary scan_stream(std::istream& in, const ScanOptions& options,
                        const std::function<void(const ScanRecord&)>& sink) {
  const auto start = std::chrono::steady_clock::now();
  ScanSummary summary;

  struct Item {
    long line;
    std::string text;
    Graph graph;
  };
  std::vector<Item> batch;
  std::vector<ScanRecord> results;

  auto flush = [&] {
    results.assign(batch.size(), {});
    const long count = static_cast<long>(batch.size());
#ifdef _OPENMP
    const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads) if (threads > 1)
#endif
    for (long k = 0; k < count; ++k) {
      results[k] = evaluate_graph(batch[k].graph, batch[k].text, batch[k].line, options);
    }
    for (const auto& r : results) {
      summary.add(r);
      if (sink) sink(r);
    }
    batch.clear();
  };

  std::string raw;
  long line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view text = raw;
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    if (text.empty()) continue;
    ++summary.lines_read;

    Graph g;
    try {
      g = parse_graph6(text);
    } catch (const std::exception& e) {
      if (options.strict) throw ScanError("line " + std::to_string(line_no) + ": " + e.what());
      summary.parse_errors.push_back({line_no, e.what()});
      continue;
    }
    if (g.order() > options.max_n) {
      ++summary.skipped_oversize;
      continue;
    }
    batch.push_back({line_no, std::string(text), std::move(g)});
    if (batch.size() == kBatch) flush();
  }
  if (!batch.empty()) flush();

  summary.finalize();
  summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

ScanSummary scan_lines(const std::vector<std::string>& lines, const ScanOptions& options,
                       std::vector<ScanRecord>* records) {
  std::ostringstream joined;
  for (const auto& l : lines) joined << l << '\n';
  std::istringstream in(joined.str());
  return scan_stream(in, options, [records](const ScanRecord& r) {
    if (records) records->push_back(r);
  });
}

}  // namespace pathenergy
