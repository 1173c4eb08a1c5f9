// Command-line surface: scalar mean queries, index evaluation on edge lists,
// ensemble sweeps and scaling tables, and the verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spindex/analysis.hpp"
#include "spindex/ensemble.hpp"
#include "spindex/format.hpp"
#include "spindex/graph.hpp"
#include "spindex/indices.hpp"
#include "spindex/kernels.hpp"
#include "spindex/means.hpp"
#include "spindex/random_models.hpp"
#include "spindex/run_config.hpp"

namespace {

using nlohmann::ordered_json;
using namespace spindex;

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) throw IoError("failed writing output file: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------
// mean

int cmd_mean(const std::string& x_text, const std::string& y_text,
             const std::string& alpha_label) {
  const double x = parse_double(x_text);
  const double y = parse_double(y_text);
  const AlphaParam alpha = AlphaParam::parse(alpha_label);
  std::printf("%s\n", format_sig12(stolarsky_mean(x, y, alpha)).c_str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// index

int cmd_index(const std::string& path, const std::vector<std::string>& labels) {
  std::vector<IndexKind> kinds;
  for (const auto& csv : labels)
    for (const auto& kind : parse_index_list(csv)) kinds.push_back(kind);

  Graph g = [&] {
    if (path == "-") return load_edge_list(std::cin);
    return load_edge_list_file(path);
  }();

  std::string out;
  for (const IndexKind& kind : kinds)
    out += kind.label() + " " + format_sig12(evaluate_index(g, kind)) + "\n";
  std::fwrite(out.data(), 1, out.size(), stdout);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep / scaling

struct SweepOverrides {
  std::string config_path;
  std::string model;
  std::vector<std::int64_t> sizes;
  std::string grid;
  std::int64_t replicates = -1;
  std::int64_t seed = -1;
  bool seed_set = false;
  std::string indices;
  std::string output;
  std::string format;
  int threads = 0;
  bool dump_config = false;
};

RunConfig assemble_config(const SweepOverrides& o, const std::string& subcommand) {
  RunConfig config;
  if (!o.config_path.empty()) config = RunConfig::parse_text(read_file(o.config_path));
  config.subcommand = subcommand;
  if (!o.model.empty()) config.model = parse_model(o.model);
  if (!o.sizes.empty()) {
    config.sizes.clear();
    for (const auto n : o.sizes) {
      if (n < 1 || n > INT32_MAX) throw std::invalid_argument("network size out of range");
      config.sizes.push_back(static_cast<std::int32_t>(n));
    }
  }
  if (!o.grid.empty()) config.grid = o.grid;
  if (o.replicates >= 0) config.replicates = o.replicates;
  if (o.seed_set) config.seed = static_cast<std::uint64_t>(o.seed);
  if (!o.indices.empty()) config.indices = parse_index_list(o.indices);
  if (!o.output.empty()) config.output = o.output;
  if (!o.format.empty()) config.format = o.format;
  if (o.threads > 0) config.threads = o.threads;
  config.validate();
  return config;
}

std::vector<EnsembleResult> run_config_ensembles(const RunConfig& config) {
  std::vector<EnsembleResult> results;
  results.reserve(config.sizes.size());
  for (const std::int32_t n : config.sizes) {
    EnsembleSpec spec;
    spec.model = config.model;
    spec.n = n;
    spec.param_grid = expand_grid(config, n);
    spec.replicates = config.replicates;
    spec.master_seed = config.seed;
    spec.indices = config.indices;
    results.push_back(run_ensemble(spec, config.threads));
  }
  return results;
}

std::string sweep_csv(const RunConfig& config, const std::vector<EnsembleResult>& results) {
  std::string out = "model,n,param,mean_degree,index,mean,std_err,replicates,seed,prediction\n";
  for (const EnsembleResult& result : results) {
    const EnsembleSpec& spec = result.spec;
    for (const GridPointStats& row : result.rows) {
      const double prediction = dense_prediction(spec.model, spec.n, row.param);
      for (std::size_t k = 0; k < spec.indices.size(); ++k) {
        out += model_name(spec.model) + "," + std::to_string(spec.n) + "," +
               format_sig12(row.param) + "," + format_sig12(row.mean_degree) + "," +
               spec.indices[k].label() + "," + format_sig12(row.index_stats[k].mean) + "," +
               format_sig12(row.index_stats[k].std_err) + "," + std::to_string(row.replicates) +
               "," + std::to_string(config.seed) + "," + format_sig12(prediction) + "\n";
      }
    }
  }
  return out;
}

std::string sweep_json(const RunConfig& config, const std::vector<EnsembleResult>& results) {
  ordered_json rows = ordered_json::array();
  for (const EnsembleResult& result : results) {
    const EnsembleSpec& spec = result.spec;
    for (const GridPointStats& row : result.rows) {
      const double prediction = dense_prediction(spec.model, spec.n, row.param);
      for (std::size_t k = 0; k < spec.indices.size(); ++k) {
        rows.push_back({{"model", model_name(spec.model)},
                        {"n", spec.n},
                        {"param", row.param},
                        {"mean_degree", row.mean_degree},
                        {"index", spec.indices[k].label()},
                        {"mean", row.index_stats[k].mean},
                        {"std_err", row.index_stats[k].std_err},
                        {"replicates", row.replicates},
                        {"seed", config.seed},
                        {"prediction", prediction}});
      }
    }
  }
  return rows.dump(2) + "\n";
}

std::string scaling_csv(const std::vector<EnsembleResult>& results) {
  std::string out = "model,n,mean_degree,index,normalized_mean,prediction\n";
  for (const EnsembleResult& result : results) {
    const EnsembleSpec& spec = result.spec;
    for (const IndexKind& kind : spec.indices) {
      for (const ScalingPoint& pt : scaling_transform(result, kind)) {
        out += model_name(spec.model) + "," + std::to_string(spec.n) + "," +
               format_sig12(pt.mean_degree) + "," + kind.label() + "," +
               format_sig12(pt.normalized_mean) + "," + format_sig12(pt.prediction) + "\n";
      }
    }
  }
  return out;
}

std::string scaling_json(const std::vector<EnsembleResult>& results) {
  ordered_json rows = ordered_json::array();
  for (const EnsembleResult& result : results) {
    const EnsembleSpec& spec = result.spec;
    for (const IndexKind& kind : spec.indices) {
      for (const ScalingPoint& pt : scaling_transform(result, kind)) {
        rows.push_back({{"model", model_name(spec.model)},
                        {"n", spec.n},
                        {"mean_degree", pt.mean_degree},
                        {"index", kind.label()},
                        {"normalized_mean", pt.normalized_mean},
                        {"prediction", pt.prediction}});
      }
    }
  }
  return rows.dump(2) + "\n";
}

int cmd_sweep(const SweepOverrides& overrides, bool scaling) {
  const RunConfig config = assemble_config(overrides, scaling ? "scaling" : "sweep");
  if (overrides.dump_config) {
    std::fputs(config.to_text().c_str(), stdout);
    return kExitOk;
  }
  const auto results = run_config_ensembles(config);
  std::string payload;
  if (scaling)
    payload = config.format == "csv" ? scaling_csv(results) : scaling_json(results);
  else
    payload = config.format == "csv" ? sweep_csv(config, results) : sweep_json(config, results);
  write_output(config.output, payload);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check

struct CheckOptions {
  std::int64_t n = 125;
  std::string grid = "dlog:1:100:12";
  std::int64_t replicates = 400;
  std::uint64_t seed = 42;
  std::int64_t seed_raw = 42;
  int threads = 1;
  std::string chain = "all";
  std::int64_t pairs_max = 1000;
  std::int64_t stride = 1;
  std::int64_t graphs = 1000;
  std::int64_t mc_pairs = 10'000'000;
  std::string report_path;
  bool inject_broken_mean = false;
};

bool chain_selected(const CheckOptions& opt, std::string_view name, std::string_view alias) {
  return opt.chain == "all" || opt.chain == name || opt.chain == alias;
}

ordered_json term_json(const InequalityReport& report) {
  ordered_json terms = ordered_json::object();
  for (const ChainTerm& term : report.terms) terms[term.label] = term.value;
  return terms;
}

// Scalar chain over the integer pair grid. The broken-mean hook inflates the
// logarithmic-mean term so the negative path of the verifier is testable.
ordered_json run_scalar_chain_suite(const CheckOptions& opt, bool& all_ok) {
  std::int64_t checked = 0;
  std::vector<ordered_json> violations;
  for (std::int64_t x = 1; x <= opt.pairs_max; x += opt.stride) {
    for (std::int64_t y = x; y <= opt.pairs_max; y += opt.stride) {
      ++checked;
      InequalityReport report = check_scalar_chain(static_cast<double>(x),
                                                   static_cast<double>(y));
      if (opt.inject_broken_mean) {
        report.terms[1].value *= 1.05;
        report = make_chain_report(report.chain_id, report.terms);
      }
      if (!report.holds && violations.size() < 5) {
        violations.push_back({{"x", x},
                              {"y", y},
                              {"terms", term_json(report)},
                              {"max_violation", report.max_violation}});
      }
    }
  }
  const bool ok = violations.empty();
  all_ok = all_ok && ok;
  return {{"name", "scalar-chain"},
          {"passed", ok},
          {"pairs", checked},
          {"violations", violations}};
}

ordered_json run_graph_chain_suite(const CheckOptions& opt, bool& all_ok) {
  const std::int32_t sizes[] = {25, 50, 100, 200};
  const double er_ps[] = {0.05, 0.2, 0.8};
  const double rg_rs[] = {0.08, 0.2, 0.6};

  std::int64_t checked = 0;
  std::vector<ordered_json> violations;
  auto run_sample = [&](Model model, std::uint64_t master) {
    for (std::int64_t k = 0; k < opt.graphs; ++k) {
      const std::int32_t n = sizes[k % 4];
      const double param = model == Model::er ? er_ps[(k / 4) % 3] : rg_rs[(k / 4) % 3];
      const SeededStream stream{master, static_cast<std::uint64_t>(k)};
      const Graph g = model == Model::er ? gen_er(ErParams{n, param}, stream)
                                         : gen_rg(RgParams{n, param}, stream);
      const InequalityReport report = check_graph_chain(g);
      ++checked;
      if (!report.holds && violations.size() < 5) {
        violations.push_back({{"model", model_name(model)},
                              {"n", n},
                              {"param", param},
                              {"replicate", k},
                              {"terms", term_json(report)},
                              {"max_violation", report.max_violation}});
      }
    }
  };
  run_sample(Model::er, opt.seed);
  run_sample(Model::rg, opt.seed + 1);

  const bool ok = violations.empty();
  all_ok = all_ok && ok;
  return {{"name", "graph-chain"},
          {"passed", ok},
          {"graphs", checked},
          {"violations", violations}};
}

ordered_json average_suites(const CheckOptions& opt, bool run_averages, bool run_idlog,
                            bool& all_ok, ordered_json& idlog_suite) {
  // One ensemble per model feeds both the average chain and the idlog bound.
  std::vector<IndexKind> indices = {
      IndexKind::sp(AlphaParam::neg_infinity()),  IndexKind::sp(AlphaParam::finite(-1.0)),
      IndexKind::sp(AlphaParam::limit_zero()),    IndexKind::sp(AlphaParam::finite(0.5)),
      IndexKind::sp(AlphaParam::finite(2.0)),     IndexKind::sp(AlphaParam::pos_infinity()),
      IndexKind::mso(AlphaParam::finite(1.0 / 3.0)), IndexKind::sp(AlphaParam::limit_one())};

  ordered_json avg_suite{{"name", "mean-index-chain"}, {"passed", true}};
  idlog_suite = ordered_json{{"name", "idlog-bound"}, {"passed", true}};
  ordered_json avg_rows = ordered_json::array();
  ordered_json idlog_rows = ordered_json::array();
  bool avg_ok = true;
  bool idlog_ok = true;

  for (const Model model : {Model::er, Model::rg}) {
    RunConfig grid_config;
    grid_config.model = model;
    grid_config.grid = opt.grid;

    EnsembleSpec spec;
    spec.model = model;
    spec.n = static_cast<std::int32_t>(opt.n);
    spec.param_grid = expand_grid(grid_config, spec.n);
    spec.replicates = opt.replicates;
    spec.master_seed = opt.seed;
    spec.indices = indices;
    const EnsembleResult result = run_ensemble(spec, opt.threads);

    if (run_averages) {
      for (const GridChainReport& row : check_average_chain(result)) {
        avg_ok = avg_ok && row.report.holds;
        avg_rows.push_back({{"model", model_name(model)},
                            {"param", row.param},
                            {"mean_degree", row.mean_degree},
                            {"holds", row.report.holds},
                            {"equal", chain_equality(row.report)},
                            {"max_violation", row.report.max_violation},
                            {"terms", term_json(row.report)}});
      }
    }
    if (run_idlog) {
      for (const GridChainReport& row : check_idlog_bound(result)) {
        idlog_ok = idlog_ok && row.report.holds;
        idlog_rows.push_back({{"model", model_name(model)},
                              {"param", row.param},
                              {"mean_degree", row.mean_degree},
                              {"chain", row.report.chain_id},
                              {"holds", row.report.holds},
                              {"equal", chain_equality(row.report)},
                              {"max_violation", row.report.max_violation},
                              {"terms", term_json(row.report)}});
      }
    }
  }

  avg_suite["passed"] = avg_ok;
  avg_suite["rows"] = avg_rows;
  idlog_suite["passed"] = idlog_ok;
  idlog_suite["rows"] = idlog_rows;
  if (run_averages) all_ok = all_ok && avg_ok;
  if (run_idlog) all_ok = all_ok && idlog_ok;
  return avg_suite;
}

ordered_json run_limits_suite(const CheckOptions& opt, bool& all_ok) {
  const LimitConsistencyReport report =
      limit_consistency_suite(static_cast<std::int32_t>(opt.pairs_max),
                              static_cast<std::int32_t>(opt.stride));
  ordered_json failures = ordered_json::array();
  for (std::size_t i = 0; i < report.failures.size() && i < 5; ++i) {
    const LimitFailure& f = report.failures[i];
    failures.push_back({{"x", f.x},
                        {"y", f.y},
                        {"check", f.check},
                        {"got", f.got},
                        {"want", f.want},
                        {"rel_err", f.rel_err}});
  }
  all_ok = all_ok && report.passed;
  return {{"name", "limit-consistency"},
          {"passed", report.passed},
          {"pairs", report.pairs_checked},
          {"checks", report.checks_run},
          {"failures", failures}};
}

ordered_json run_gofr_suite(const CheckOptions& opt, bool& all_ok) {
  const double continuity = std::abs(g_of_r_low(1.0) - g_of_r_high(1.0));
  const double at_diag = std::abs(g_of_r(std::sqrt(2.0)) - 1.0);
  bool ok = continuity <= 1e-12 && at_diag <= 1e-12;

  const double radii[] = {0.1, 0.3, 0.5, 0.9, 1.1, 1.3};
  ordered_json rows = ordered_json::array();
  for (const GofrOracleRow& row : gofr_oracle(radii, opt.mc_pairs, opt.seed)) {
    const bool row_ok = std::abs(row.z) <= 3.0;
    ok = ok && row_ok;
    rows.push_back({{"r", row.r},
                    {"analytic", row.analytic},
                    {"estimate", row.estimate},
                    {"sigma", row.std_dev},
                    {"z", row.z},
                    {"passed", row_ok}});
  }
  all_ok = all_ok && ok;
  return {{"name", "gofr-oracle"},
          {"passed", ok},
          {"branch_gap_at_1", continuity},
          {"gap_at_sqrt2", at_diag},
          {"mc_pairs", opt.mc_pairs},
          {"rows", rows}};
}

int cmd_check(const CheckOptions& opt) {
  ordered_json suites = ordered_json::array();
  bool all_ok = true;

  if (chain_selected(opt, "scalar", "ineq"))
    suites.push_back(run_scalar_chain_suite(opt, all_ok));
  if (chain_selected(opt, "graph", "ineq22"))
    suites.push_back(run_graph_chain_suite(opt, all_ok));

  const bool run_averages = chain_selected(opt, "averages", "ineq21av");
  const bool run_idlog = chain_selected(opt, "idlog", "ineq3");
  if (run_averages || run_idlog) {
    ordered_json idlog_suite;
    ordered_json avg_suite = average_suites(opt, run_averages, run_idlog, all_ok, idlog_suite);
    if (run_averages) suites.push_back(avg_suite);
    if (run_idlog) suites.push_back(idlog_suite);
  }

  if (chain_selected(opt, "limits", "limits"))
    suites.push_back(run_limits_suite(opt, all_ok));
  if (chain_selected(opt, "gofr", "gofr"))
    suites.push_back(run_gofr_suite(opt, all_ok));

  if (suites.empty())
    throw std::invalid_argument("unknown chain selector '" + opt.chain + "'");

  for (const auto& suite : suites) {
    std::printf("[%s] %s\n", suite["passed"].get<bool>() ? "ok" : "FAIL",
                suite["name"].get<std::string>().c_str());
  }

  ordered_json report{{"passed", all_ok}, {"suites", suites}};
  if (!opt.report_path.empty()) write_output(opt.report_path, report.dump(2) + "\n");

  if (!all_ok) {
    std::printf("verification failed\n");
    return kExitVerification;
  }
  std::printf("all suites passed\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stolarsky mean topological indices on random graphs"};
  app.require_subcommand(1);
  std::string kernels = "auto";
  app.add_option("--kernels", kernels, "Kernel backend: auto, scalar, avx2, neon")
      ->default_str("auto");

  // mean
  auto* mean_cmd = app.add_subcommand("mean", "Stolarsky mean of two positive reals");
  mean_cmd->fallthrough();
  std::string mean_x, mean_y, mean_alpha;
  mean_cmd->add_option("x", mean_x, "first argument")->required();
  mean_cmd->add_option("y", mean_y, "second argument")->required();
  mean_cmd->add_option("alpha", mean_alpha, "exponent label (-inf, lim0, lim1, +inf, decimal)")
      ->required();

  // index
  auto* index_cmd = app.add_subcommand("index", "Evaluate indices on an edge-list file");
  index_cmd->fallthrough();
  std::string index_path;
  std::vector<std::string> index_labels;
  index_cmd->add_option("edge-list", index_path, "path to edge list ('-' for stdin)")->required();
  index_cmd->add_option("--index", index_labels,
                        "index labels (sp:<a>, mso:<a>, rr, m1, ka:<a>:<b>, logmean, idlogmean)")
      ->required();

  // sweep / scaling
  SweepOverrides sweep_opt;
  auto add_sweep_options = [&](CLI::App* cmd) {
    cmd->fallthrough();
    cmd->add_option("--config", sweep_opt.config_path, "key=value config file");
    cmd->add_option("--model", sweep_opt.model, "er or rg");
    cmd->add_option("--n", sweep_opt.sizes, "network sizes")->delimiter(',');
    cmd->add_option("--grid", sweep_opt.grid,
                    "grid spec: list | lin:a:b:k | log:a:b:k | dlin:a:b:k | dlog:a:b:k");
    cmd->add_option("--replicates", sweep_opt.replicates, "replicates (0 = ceil(1e7/n))");
    cmd->add_option("--seed", sweep_opt.seed, "master seed")
        ->check(CLI::NonNegativeNumber)
        ->each([&](const std::string&) { sweep_opt.seed_set = true; });
    cmd->add_option("--indices", sweep_opt.indices, "comma-separated index labels");
    cmd->add_option("--output", sweep_opt.output, "output path ('-' = stdout)");
    cmd->add_option("--format", sweep_opt.format, "csv or json");
    cmd->add_option("--threads", sweep_opt.threads, "worker threads");
    cmd->add_flag("--dump-config", sweep_opt.dump_config,
                  "print the canonical config and exit");
  };
  auto* sweep_cmd = app.add_subcommand("sweep", "Ensemble means over a parameter grid (CSV)");
  add_sweep_options(sweep_cmd);
  auto* scaling_cmd =
      app.add_subcommand("scaling", "Normalized means vs mean degree (CSV)");
  add_sweep_options(scaling_cmd);

  // check
  CheckOptions check_opt;
  auto* check_cmd = app.add_subcommand("check", "Run the verification suites");
  check_cmd->fallthrough();
  check_cmd->add_option("--n", check_opt.n, "ensemble network size");
  check_cmd->add_option("--grid", check_opt.grid, "ensemble grid spec");
  check_cmd->add_option("--replicates", check_opt.replicates, "ensemble replicates");
  check_cmd->add_option("--seed", check_opt.seed_raw, "master seed");
  check_cmd->add_option("--threads", check_opt.threads, "worker threads");
  check_cmd->add_option("--chain", check_opt.chain,
                        "suite selector: all, scalar, graph, averages, idlog, limits, gofr "
                        "(aliases: ineq, ineq22, ineq21av, ineq3)");
  check_cmd->add_option("--pairs-max", check_opt.pairs_max, "scalar/limit pair grid upper bound");
  check_cmd->add_option("--stride", check_opt.stride, "pair grid stride");
  check_cmd->add_option("--graphs", check_opt.graphs, "random graphs per model");
  check_cmd->add_option("--mc-pairs", check_opt.mc_pairs, "Monte Carlo pairs for the g(r) oracle");
  check_cmd->add_option("--report", check_opt.report_path, "write the JSON report to this path");
  check_cmd->add_flag("--inject-broken-mean", check_opt.inject_broken_mean,
                      "negative-path test hook")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    kernels::select_backend(kernels);
    if (mean_cmd->parsed()) return cmd_mean(mean_x, mean_y, mean_alpha);
    if (index_cmd->parsed()) return cmd_index(index_path, index_labels);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opt, false);
    if (scaling_cmd->parsed()) return cmd_sweep(sweep_opt, true);
    if (check_cmd->parsed()) {
      check_opt.seed = static_cast<std::uint64_t>(check_opt.seed_raw);
      if (check_opt.chain != "all" && check_opt.chain != "scalar" && check_opt.chain != "ineq" &&
          check_opt.chain != "graph" && check_opt.chain != "ineq22" &&
          check_opt.chain != "averages" && check_opt.chain != "ineq21av" &&
          check_opt.chain != "idlog" && check_opt.chain != "ineq3" &&
          check_opt.chain != "limits" && check_opt.chain != "gofr")
        throw std::invalid_argument("unknown chain selector '" + check_opt.chain + "'");
      return cmd_check(check_opt);
    }
  } catch (const EdgeListParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  }
  return kExitUsage;
}
