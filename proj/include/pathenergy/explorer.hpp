#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "pathenergy/graph.hpp"
#include "pathenergy/spectral.hpp"

namespace pathenergy {

struct ScanOptions {
  /// Relative eigensolver/classification tolerance (see Spectrum::tol).
  double rel_tol = kDefaultRelTol;
  /// Larger graphs are skipped and counted.
  int max_n = 40;
  /// Abort on the first unparsable line instead of recording it.
  bool strict = false;
  /// Worker threads; 0 uses the OpenMP default.
  int jobs = 1;
  bool check_bounds = true;
};

/// Per-graph verdict.
struct ScanRecord {
  long line = 0;  // 1-based input line
  std::string graph6;
  int n = 0;
  int m = 0;
  bool connected = false;
  bool biconnected = false;
  /// Connected with m = n.
  bool unicyclic = false;
  int girth = 0;
  int positive_count = 0;
  int zero_count = 0;
  int negative_count = 0;
  int block_count = 0;
  int nontrivial_block_count = 0;
  double pe = 0.0;
  double spectral_radius = 0.0;
  std::vector<double> spectrum;
  /// An eigenvalue sits in the band tol < |x| <= 10 tol.
  bool needs_review = false;

  /// Biconnected (hence n >= 3).
  bool conjecture1_applicable = false;
  /// positive_count == 1; only meaningful when applicable.
  bool conjecture1_holds = false;
  /// Applicable, not under review, positive_count != 1, and confirmed at a
  /// ten times tighter tolerance.
  bool conjecture1_counterexample = false;
  bool conjecture2_match_all_blocks = false;
  bool conjecture2_match_nontrivial_blocks = false;

  /// Connected with exactly one positive eigenvalue; then PE = 2 rho is checked.
  bool single_positive_checked = false;
  bool single_positive_identity_ok = true;
  /// All applicable inequality checkers hold (true when bounds are not run).
  bool bounds_ok = true;
  std::vector<std::string> violated_bounds;
};

/// Evaluates one graph. `line` and `graph6` are echoed into the record.
ScanRecord evaluate_graph(const Graph& g, const std::string& graph6, long line, const ScanOptions& options);

struct LineError {
  long line = 0;
  std::string message;
};

struct AgreementCount {
  long match = 0;
  long mismatch = 0;
};

/// Aggregates over scan records. Counts do not depend on record order and
/// lists are kept sorted, so any permutation of the input gives the same
/// summary.
struct ScanSummary {
  long total = 0;
  long lines_read = 0;
  long skipped_oversize = 0;
  std::vector<LineError> parse_errors;

  long conjecture1_applicable = 0;
  long conjecture1_holds = 0;
  std::vector<std::string> conjecture1_counterexamples;
  std::vector<std::string> needs_review;

  AgreementCount conjecture2_all_blocks;
  AgreementCount conjecture2_nontrivial_blocks;
  /// block count -> positive count -> graphs
  std::map<int, std::map<int, long>> positive_by_block_count;
  std::map<int, std::map<int, long>> positive_by_nontrivial_block_count;

  /// (n, biconnected, unicyclic) -> positive count -> graphs
  std::map<std::tuple<int, bool, bool>, std::map<int, long>> strata;
  /// Unicyclic graphs: girth -> positive count -> graphs.
  std::map<int, std::map<int, long>> unicyclic_by_girth;
  /// Unicyclic graphs with exactly two positive eigenvalues, by girth.
  std::map<int, std::vector<std::string>> unicyclic_two_positive;

  long single_positive_checked = 0;
  std::vector<std::string> single_positive_failures;
  std::vector<std::string> bound_violations;

  double elapsed_seconds = 0.0;

  void add(const ScanRecord& r);
  /// Sorts the graph6 lists.
  void finalize();
};

/// Aggregates a finished record set.
ScanSummary stratified_report(const std::vector<ScanRecord>& records);

class ScanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads graph6 lines (">>graph6<<" headers and blank lines are skipped),
/// evaluates them in parallel batches and hands each record to `sink` in
/// input order. Unparsable lines are recorded in the summary, or raise
/// ScanError under options.strict.
ScanSummary scan_stream(std::istream& in, const ScanOptions& options,
                        const std::function<void(const ScanRecord&)>& sink);

/// Convenience overload collecting every record.
ScanSummary scan_lines(const std::vector<std::string>& lines, const ScanOptions& options,
                       std::vector<ScanRecord>* records = nullptr);

}  // namespace pathenergy
