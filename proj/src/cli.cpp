#include "pathenergy/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathenergy/blocks.hpp"
#include "pathenergy/bounds.hpp"
#include "pathenergy/corpus.hpp"
#include "pathenergy/disjoint_paths.hpp"
#include "pathenergy/explorer.hpp"
#include "pathenergy/generators.hpp"
#include "pathenergy/graph6.hpp"
#include "pathenergy/json_io.hpp"
#include "pathenergy/spectral.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pathenergy::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string graph6;
  std::string file;
  std::string family;
  std::string params;
  double rel_tol = kDefaultRelTol;
  std::string format = "json";
};

void add_source_options(CLI::App* cmd, GraphSource& src) {
  auto* g6 = cmd->add_option("--graph6", src.graph6, "Graph as a graph6 string");
  auto* file = cmd->add_option("--file", src.file, "Read the graph from the first graph6 line of a file");
  auto* fam = cmd->add_option("--family", src.family,
                              "Generated family: complete, complete_bipartite, cycle, path, star, tree-path, "
                              "tree-star, hypercube, hypercube_product, wheel, prism, antiprism, "
                              "line_of_complete, line_of_complete_bipartite, regular, tree");
  cmd->add_option("--params", src.params, "Family parameters, e.g. 5 or 2,3")->needs(fam);
  g6->excludes(file)->excludes(fam);
  file->excludes(fam);
  cmd->add_option("--tol", src.rel_tol, "Relative eigenvalue tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--format", src.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

std::vector<int> parse_params(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad --params entry '" + item + "'");
    }
  }
  return out;
}

Graph generate(const std::string& name, const std::vector<int>& params) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k) {
      throw InputError("family " + name + " takes " + std::to_string(k) + " parameter(s), got " +
                       std::to_string(params.size()));
    }
  };
  try {
    if (name == "cycle") return arity(1), cycle(params[0]);
    if (name == "path" || name == "tree-path") return arity(1), path_graph(params[0]);
    if (name == "star" || name == "tree-star") return arity(1), star(params[0]);
    if (auto fam = family_from_name(name)) {
      arity(family_arity(*fam));
      return family_instance(*fam, params);
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("unknown family '" + name + "'");
}

std::pair<Graph, Json> resolve(const GraphSource& src) {
  try {
    if (!src.graph6.empty()) return {parse_graph6(src.graph6), Json{{"graph6", src.graph6}}};
    if (!src.file.empty()) {
      std::ifstream in(src.file);
      if (!in) throw InputError("cannot open " + src.file);
      std::string line;
      while (std::getline(in, line)) {
        if (line.starts_with(">>graph6<<")) line.erase(0, 10);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        if (!line.empty()) return {parse_graph6(line), Json{{"file", src.file}, {"graph6", line}}};
      }
      throw InputError("no graph in " + src.file);
    }
    if (!src.family.empty()) {
      const auto params = parse_params(src.params);
      return {generate(src.family, params), Json{{"family", src.family}, {"params", params}}};
    }
  } catch (const Graph6Error& e) {
    throw InputError(e.what());
  }
  throw InputError("one of --graph6, --file or --family is required");
}

void echo_graph(Json& inputs, const Graph& g, double rel_tol) {
  inputs["n"] = g.order();
  inputs["m"] = g.size();
  if (g.order() <= kGraph6MaxOrder && !inputs.contains("graph6")) inputs["graph6"] = emit_graph6(g);
  inputs["tol"] = rel_tol;
}

int cmd_compute(const GraphSource& src, std::ostream& out) {
  auto [g, inputs] = resolve(src);
  echo_graph(inputs, g, src.rel_tol);
  const auto pm = path_matrix(g);
  if (src.format == "csv") {
    out << path_matrix_csv(pm);
    return kSuccess;
  }
  const auto path = symmetric_eigenvalues(to_matrix(pm), src.rel_tol);
  const auto adj = symmetric_eigenvalues(adjacency_matrix(g), src.rel_tol);
  const auto report = energy_report(path, adj);
  Json results{{"path_matrix", pm},
               {"path_spectrum", path.values},
               {"path_energy", report.path_energy},
               {"path_spectral_radius", report.path_spectral_radius},
               {"adjacency_spectrum", adj.values},
               {"graph_energy", report.graph_energy},
               {"sign_counts", count_signs(path)},
               {"classification_tol", path.tol}};
  out << make_document("compute", inputs, results).dump(2) << '\n';
  return kSuccess;
}

int cmd_verify(const GraphSource& src, std::ostream& out) {
  auto [g, inputs] = resolve(src);
  echo_graph(inputs, g, src.rel_tol);
  const auto gp = profile(g, src.rel_tol);

  std::vector<BoundReport> all;
  Json bounds = Json::object();
  auto record = [&](const std::string& key, const auto& value) {
    bounds[key] = value;
    if constexpr (std::is_same_v<std::decay_t<decltype(value)>, BoundReport>) {
      all.push_back(value);
    } else {
      all.insert(all.end(), value.begin(), value.end());
    }
  };
  record("row_sum", check_row_sum_bound(gp));
  record("abs_eig_max_degree", check_eigenvalue_bound(gp));
  record("pe_edges", check_pe_edge_bound(gp));
  record("pe_degree", check_pe_degree_bound(gp));
  Json single = Json{{"applicable", false}};
  if (gp.connected) {
    record("energy_relation", check_energy_relation(gp));
    record("pe_lower", check_pe_lower_bound(gp));
    single = verify_single_positive_identity(gp.path_spectrum);
    single["applicable"] = true;
  } else {
    bounds["energy_relation"] = Json{{"applicable", false}, {"reason", "graph is disconnected"}};
    bounds["pe_lower"] = Json{{"applicable", false}, {"reason", "graph is disconnected"}};
  }

  const bool all_hold = std::all_of(all.begin(), all.end(), [](const BoundReport& r) { return r.holds; });
  std::vector<std::string> tight;
  for (const auto& [key, value] : bounds.items()) {
    auto is_tight = [](const Json& r) { return r.contains("tight") && r["tight"].get<bool>(); };
    const bool t = value.is_array() ? !value.empty() && std::all_of(value.begin(), value.end(), is_tight)
                                    : is_tight(value);
    if (t) tight.push_back(key);
  }
  Json results{{"connected", gp.connected},
               {"bounds", bounds},
               {"all_hold", all_hold},
               {"tight", tight},
               {"single_positive_identity", single}};
  out << make_document("verify", inputs, results).dump(2) << '\n';
  return all_hold ? kSuccess : kViolation;
}

// --- families ----------------------------------------------------------------

std::vector<std::vector<int>> default_params(Family f, std::optional<int> cap) {
  std::vector<std::vector<int>> out;
  auto upto = [&](int lo, int hi, auto&& emit) {
    const int top = cap ? *cap : hi;
    for (int p = lo; p <= top; ++p) emit(p);
  };
  switch (f) {
    case Family::complete:
      upto(1, 8, [&](int p) { out.push_back({p}); });
      break;
    case Family::regular:
      upto(3, 10, [&](int k) {
        for (int r = 2; r < k && r <= 4; ++r)
          if ((r * k) % 2 == 0) out.push_back({r, k});
      });
      break;
    case Family::tree:
      upto(1, 9, [&](int p) { out.push_back({p}); });
      break;
    case Family::complete_bipartite:
      upto(1, 5, [&](int q) {
        for (int p = 1; p <= q; ++p) out.push_back({p, q});
      });
      break;
    case Family::hypercube:
      upto(1, 4, [&](int d) { out.push_back({d}); });
      break;
    case Family::hypercube_product:
      upto(2, 4, [&](int s) {
        for (int p = 1; p < s; ++p) out.push_back({p, s - p});
      });
      break;
    case Family::wheel:
      upto(4, 9, [&](int p) { out.push_back({p}); });
      break;
    case Family::line_of_complete:
      upto(2, 6, [&](int p) { out.push_back({p}); });
      break;
    case Family::line_of_complete_bipartite:
      upto(1, 4, [&](int q) {
        for (int p = 1; p <= q; ++p) out.push_back({p, q});
      });
      break;
    case Family::prism:
    case Family::antiprism:
      upto(3, 6, [&](int p) { out.push_back({p}); });
      break;
  }
  return out;
}

constexpr double kFamilyTolerance = 1e-6;

int cmd_families(const std::string& only, std::optional<int> cap, std::ostream& out) {
  std::vector<Family> selected;
  if (only.empty()) {
    selected.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
  } else if (auto f = family_from_name(only)) {
    selected.push_back(*f);
  } else {
    throw InputError("unknown family '" + only + "'");
  }

  double worst = 0.0;
  bool premises = true;
  Json families = Json::array();
  for (Family f : selected) {
    Json rows = Json::array();
    double family_worst = 0.0;
    for (const auto& params : default_params(f, cap)) {
      const auto cf = closed_form_spectrum(f, params);
      const Graph g = family_instance(f, params);
      const auto cmp = compare_closed_form(cf, g);
      family_worst = std::max(family_worst, cmp.max_deviation);
      premises = premises && cmp.premise_holds;
      rows.push_back({{"params", cf.params},
                      {"n", g.order()},
                      {"closed_form", Json(cf)["spectrum"]},
                      {"pe_closed_form", cf.path_energy},
                      {"pe_numeric", cmp.path_energy_numeric},
                      {"max_deviation", cmp.max_deviation},
                      {"premise_holds", cmp.premise_holds}});
    }
    worst = std::max(worst, family_worst);
    Json entry{{"family", family_name(f)}, {"instances", rows}, {"max_deviation", family_worst}};
    if (f == Family::hypercube) {
      entry["note"] =
          "erratum: corrected row, eigenvalue -d with multiplicity 2^d-1 (trace zero); a -1 entry in this row "
          "would not sum to zero";
    }
    if (f == Family::tree) entry["instance"] = "path graph P_p";
    if (f == Family::regular) entry["instance"] = "Harary graph H_{r,k}";
    families.push_back(std::move(entry));
  }
  const bool ok = worst < kFamilyTolerance && premises;
  Json inputs{{"family", only.empty() ? Json() : Json(only)}, {"max_params", cap ? Json(*cap) : Json()}};
  Json results{{"families", families}, {"max_deviation", worst}, {"tolerance", kFamilyTolerance}, {"all_match", ok}};
  out << make_document("families", inputs, results).dump(2) << '\n';
  return ok ? kSuccess : kViolation;
}

// --- oracle-check ----------------------------------------------------------------

constexpr int kOracleExhaustiveMax = 7;

int cmd_oracle_check(int max_n, int samples, std::uint64_t seed, [[maybe_unused]] int jobs, std::ostream& out) {
  if (max_n < 2 || max_n > 10) throw InputError("--max-n must be in [2, 10]");
  if (samples < 0) throw InputError("--samples must be nonnegative");

  std::vector<Graph> graphs;
  for (int n = 2; n <= std::min(max_n, kOracleExhaustiveMax); ++n) {
    auto level = connected_graphs(n);
    graphs.insert(graphs.end(), level.begin(), level.end());
  }
  const auto exhaustive = static_cast<long>(graphs.size());
  Rng rng(seed);
  const int lo = max_n >= 8 ? 8 : 2;
  std::uniform_int_distribution<int> pick_n(lo, max_n);
  std::uniform_real_distribution<double> pick_p(0.1, 0.9);
  for (int s = 0; s < samples; ++s) {
    const int n = pick_n(rng);
    graphs.push_back(random_connected_graph(n, pick_p(rng), rng));
  }

  const long count = static_cast<long>(graphs.size());
  std::vector<std::vector<Json>> found(count);
  std::vector<long> pairs(count, 0);
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
#endif
  for (long k = 0; k < count; ++k) {
    const auto& g = graphs[k];
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        ++pairs[k];
        const int flow = max_disjoint_paths(g, u, v);
        const int brute = brute_force_disjoint_paths(g, u, v);
        if (flow != brute) {
          found[k].push_back({{"graph6", emit_graph6(g)}, {"u", u}, {"v", v}, {"max_flow", flow}, {"brute_force", brute}});
        }
      }
  }
  Json disagreements = Json::array();
  long total_pairs = 0;
  for (long k = 0; k < count; ++k) {
    total_pairs += pairs[k];
    for (auto& d : found[k]) disagreements.push_back(std::move(d));
  }
  Json inputs{{"max_n", max_n}, {"samples", samples}, {"seed", seed}};
  Json results{{"exhaustive_graphs", exhaustive},
               {"random_graphs", samples},
               {"pairs_checked", total_pairs},
               {"disagreements", disagreements}};
  out << make_document("oracle-check", inputs, results).dump(2) << '\n';
  return disagreements.empty() ? kSuccess : kViolation;
}

// --- scan ----------------------------------------------------------------------

struct ScanArgs {
  std::string input;
  std::string output;
  std::string summary;
  std::string format = "json";
  bool fail_on_counterexample = false;
  bool timing = false;
  bool no_bounds = false;
  ScanOptions options;
};

int cmd_scan(const ScanArgs& args, std::istream& stdin_stream, std::ostream& out) {
  std::ifstream file;
  std::istream* in = &stdin_stream;
  if (args.input != "-") {
    file.open(args.input);
    if (!file) throw InputError("cannot open input " + args.input);
    in = &file;
  }
  std::ofstream record_file;
  std::ostream* records = &out;
  if (!args.output.empty()) {
    record_file.open(args.output);
    if (!record_file) throw InputError("cannot open output " + args.output);
    records = &record_file;
  }

  auto options = args.options;
  options.check_bounds = !args.no_bounds;
  const bool csv = args.format == "csv";
  if (csv) *records << scan_record_csv_header() << '\n';

  ScanSummary summary;
  try {
    summary = scan_stream(*in, options, [&](const ScanRecord& r) {
      if (csv) {
        *records << scan_record_csv_row(r) << '\n';
      } else {
        *records << Json(r).dump() << '\n';
      }
    });
  } catch (const ScanError& e) {
    throw InputError(e.what());
  }
  if (in->bad()) throw InputError("read error on " + args.input);

  Json inputs{{"input", args.input},
              {"max_n", options.max_n},
              {"tol", options.rel_tol},
              {"strict", options.strict},
              {"bounds", options.check_bounds}};
  Json results = summary;
  if (args.timing) {
    results["runtime"] = {{"elapsed_seconds", summary.elapsed_seconds},
                          {"graphs_per_second",
                           summary.elapsed_seconds > 0 ? summary.total / summary.elapsed_seconds : 0.0}};
  }
  const auto doc = make_document("scan", inputs, results);
  if (!args.summary.empty()) {
    std::ofstream s(args.summary);
    if (!s) throw InputError("cannot open summary " + args.summary);
    s << doc.dump(2) << '\n';
  } else {
    // Final line of the record stream; tell it apart by "schema_version".
    out << doc.dump() << '\n';
  }

  if (!summary.bound_violations.empty() || !summary.single_positive_failures.empty()) return kViolation;
  if (args.fail_on_counterexample && !summary.conjecture1_counterexamples.empty()) return kCounterexample;
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path matrices, path spectra and path energies of simple graphs"};
  app.require_subcommand(1);

  GraphSource compute_src, verify_src;
  auto* compute = app.add_subcommand("compute", "Path matrix, path and adjacency spectra, energies");
  add_source_options(compute, compute_src);
  auto* verify = app.add_subcommand("verify", "Check every path-energy inequality on one graph (exit 1 on violation)");
  add_source_options(verify, verify_src);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Scan a graph6 stream for positive-eigenvalue statistics");
  scan->add_option("--input", scan_args.input, "graph6 file, or - for standard input")->required();
  scan->add_option("--output", scan_args.output, "Record output file (default: standard output)");
  scan->add_option("--summary", scan_args.summary,
                   "Summary document file (default: last line of standard output)");
  scan->add_option("--format", scan_args.format, "Record format")->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--jobs", scan_args.options.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  scan->add_option("--max-n", scan_args.options.max_n, "Skip graphs with more vertices")->check(CLI::Range(1, 62));
  scan->add_option("--tol", scan_args.options.rel_tol, "Relative eigenvalue tolerance")
      ->check(CLI::PositiveNumber);
  scan->add_flag("--strict", scan_args.options.strict, "Abort on the first unparsable line");
  scan->add_flag("--fail-on-counterexample", scan_args.fail_on_counterexample,
                 "Exit 3 when a confirmed counterexample is found");
  scan->add_flag("--no-bounds", scan_args.no_bounds, "Skip the inequality checks");
  scan->add_flag("--timing", scan_args.timing, "Add runtime statistics to the summary");

  std::string family_only;
  std::optional<int> family_cap;
  auto* families = app.add_subcommand("families", "Closed-form spectra next to computed ones for each family");
  families->add_option("--family", family_only, "Only this family");
  families->add_option("--max-params", family_cap,
                       "Upper limit for the size parameter (k for regular, p+q for hypercube_product)")
      ->check(CLI::PositiveNumber);

  int oracle_max_n = 7;
  int oracle_samples = 0;
  std::uint64_t oracle_seed = 42;
  int oracle_jobs = 1;
  auto* oracle = app.add_subcommand("oracle-check", "Compare max-flow path counts with exhaustive search");
  oracle->add_option("--max-n", oracle_max_n, "Largest order (<= 10); exhaustive up to 7");
  oracle->add_option("--samples", oracle_samples, "Random connected graphs to add");
  oracle->add_option("--seed", oracle_seed, "Random seed");
  oracle->add_option("--jobs", oracle_jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*compute) return cmd_compute(compute_src, out);
    if (*verify) return cmd_verify(verify_src, out);
    if (*scan) return cmd_scan(scan_args, in, out);
    if (*families) return cmd_families(family_only, family_cap, out);
    if (*oracle) return cmd_oracle_check(oracle_max_n, oracle_samples, oracle_seed, oracle_jobs, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace pathenergy::cli
