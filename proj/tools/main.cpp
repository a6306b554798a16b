// d2dsim: analytics and seeded Monte Carlo for SIR-aware opportunistic access
// control in a D2D underlaid cell. Subcommands: analyze, simulate, search,
// reproduce.
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "d2d/access.hpp"
#include "d2d/analytic.hpp"
#include "d2d/harness.hpp"
#include "d2d/io.hpp"
#include "d2d/version.hpp"

namespace {

using namespace d2d;

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  std::vector<std::string> schemes;
  double lambda = 0.0;
  double beta_db = 0.0;
  std::uint64_t seed = 0;
  int realizations = 0;
  int threads = -1;
  bool lambda_set = false, beta_set = false, seed_set = false, realizations_set = false,
       threads_set = false;
};

void add_common_flags(CLI::App* cmd, CommonOpts& opts, bool with_output) {
  cmd->add_option("--config", opts.config_path, "Configuration file (key = value lines)");
  cmd->add_option_function<double>(
         "--lambda",
         [&](const double& v) {
           opts.lambda = v;
           opts.lambda_set = true;
         },
         "D2D transmitter density per m^2");
  cmd->add_option_function<double>(
         "--beta-db",
         [&](const double& v) {
           opts.beta_db = v;
           opts.beta_set = true;
         },
         "Target SIR in dB");
  cmd->add_option_function<std::uint64_t>(
         "--seed",
         [&](const std::uint64_t& v) {
           opts.seed = v;
           opts.seed_set = true;
         },
         "Master seed");
  cmd->add_option_function<int>(
         "--realizations",
         [&](const int& v) {
           opts.realizations = v;
           opts.realizations_set = true;
         },
         "Monte Carlo realizations per point");
  cmd->add_option_function<int>(
         "--threads",
         [&](const int& v) {
           opts.threads = v;
           opts.threads_set = true;
         },
         "Worker threads (0 = all cores)");
  if (with_output) {
    cmd->add_option("--scheme", opts.schemes,
                    "Scheme id (repeatable): no_ac, channel_aware, sir_fixed, "
                    "sir_unconditional, sir_conditional, exhaustive");
    cmd->add_option("--out", opts.out_path, "Output file path");
    cmd->add_option("--format", opts.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }
}

ConfigOverrides overrides_from(const CommonOpts& opts) {
  ConfigOverrides ov;
  if (opts.lambda_set) {
    const std::string v = format_full(opts.lambda);
    ov.emplace_back("network.d2d_density_per_m2", v);
    ov.emplace_back("sweep.density_per_m2", v);
  }
  if (opts.beta_set) ov.emplace_back("sweep.beta_db", format_full(opts.beta_db));
  if (opts.seed_set) ov.emplace_back("sim.master_seed", std::to_string(opts.seed));
  if (opts.realizations_set)
    ov.emplace_back("sim.realizations", std::to_string(opts.realizations));
  if (opts.threads_set) ov.emplace_back("sim.threads", std::to_string(opts.threads));
  if (!opts.schemes.empty()) {
    std::string joined;
    for (const std::string& s : opts.schemes) {
      if (!joined.empty()) joined += ",";
      joined += s;
    }
    ov.emplace_back("schemes", joined);
  }
  return ov;
}

ExportFormat format_from(const CommonOpts& opts) {
  return opts.format == "json" ? ExportFormat::json : ExportFormat::csv;
}

void print_threshold_solution(const char* name, const ThresholdSolution& sol,
                              const NetworkConfig& cfg, double lambda) {
  std::printf("%s:\n", name);
  std::printf("  ps_star          = %s\n", format_full(sol.ps_star).c_str());
  if (sol.active) {
    std::printf("  g_star_linear    = %s\n", format_full(sol.g_star).c_str());
    std::printf("  g_star_db        = %s\n", format_full(linear_to_db(sol.g_star)).c_str());
    std::printf("  ps_at_g_star     = %s\n",
                format_full(access_probability(sol.g_star, cfg, lambda)).c_str());
  } else {
    std::printf("  g_star_linear    = 0 (selection off, every link admitted)\n");
  }
}

int run_analyze(const CommonOpts& opts) {
  const ExperimentPlan plan = parse_config_file(opts.config_path, overrides_from(opts));
  const double lambda = plan.density_sweep.front();
  const double beta_db = plan.beta_sweep_db.front();
  const double beta = db_to_linear(beta_db);
  NetworkConfig cfg = plan.cfg;
  cfg.d2d_density_per_m2 = lambda;
  const DerivedConstants dc = derive_constants(cfg);

  std::printf("scenario: R=%g m  d_kk=%g m  p_c=%g mW  p_d=%g mW  alpha=%g\n",
              cfg.cell_radius_m, cfg.d2d_link_distance_m, cfg.cellular_power_mw,
              cfg.d2d_power_mw, cfg.pathloss_exponent);
  std::printf("point: lambda=%s /m^2  beta=%s dB\n", format_full(lambda).c_str(),
              format_full(beta_db).c_str());
  std::printf("k_alpha            = %s\n", format_full(dc.k_alpha).c_str());
  std::printf("c_alpha_m2         = %s\n", format_full(dc.c_alpha).c_str());
  std::printf("beta_activation    = %s (%s dB)\n", format_full(dc.beta_activation).c_str(),
              format_full(linear_to_db(dc.beta_activation)).c_str());
  std::printf("coverage_exact     = %s\n",
              format_full(coverage_prob_exact(beta, cfg, lambda)).c_str());
  std::printf("coverage_approx    = %s\n",
              format_full(coverage_prob_approx(beta, cfg, lambda)).c_str());
  std::printf("ase_no_ac          = %s\n",
              format_full(ase_unconditional(1.0, beta, cfg, lambda)).c_str());
  std::printf("avg_sum_rate       = %s\n", format_full(sum_rate_analytic(cfg, lambda)).c_str());
  const ThresholdSolution uncond = optimal_unconditional(beta, cfg, lambda);
  print_threshold_solution("unconditional", uncond, cfg, lambda);
  std::printf("  ase_at_optimum   = %s\n",
              format_full(ase_unconditional(uncond.ps_star, beta, cfg, lambda)).c_str());
  print_threshold_solution("conditional", optimal_conditional(beta, cfg, lambda), cfg,
                           lambda);
  return 0;
}

int export_sweep(const ExperimentPlan& plan, const CommonOpts& opts,
                 const std::string& default_out) {
  const SweepResult result = run_sweep(plan);
  for (const PointFailure& f : result.failures)
    std::fprintf(stderr, "warning: %s at lambda=%g beta=%g dB: %s\n", f.scheme_id.c_str(),
                 f.lambda, f.beta_db, f.message.c_str());
  if (result.reports.empty()) {
    std::fprintf(stderr, "error: every sweep point failed\n");
    return 2;
  }
  const std::string out = opts.out_path.empty() ? default_out : opts.out_path;
  export_reports(result.reports, format_from(opts), out, make_manifest(plan, {out}));
  std::printf("wrote %s (%zu rows, %zu failed points)\n", out.c_str(),
              result.reports.size(), result.failures.size());
  return 0;
}

int run_simulate(const CommonOpts& opts) {
  const ExperimentPlan plan = parse_config_file(opts.config_path, overrides_from(opts));
  return export_sweep(plan, opts, opts.format == "json" ? "results.json" : "results.csv");
}

int run_search(const CommonOpts& opts, const std::vector<double>& grid_db) {
  const ExperimentPlan plan = parse_config_file(opts.config_path, overrides_from(opts));
  const double lambda = plan.density_sweep.front();
  const double beta = db_to_linear(plan.beta_sweep_db.front());
  std::vector<double> grid;
  if (grid_db.empty()) {
    grid = default_search_grid(beta);
  } else {
    for (const double db : grid_db) grid.push_back(db_to_linear(db));
  }
  const SearchResult sr = search_threshold(grid, plan.cfg, lambda, beta, plan.n_realizations,
                                           plan.master_seed, plan.n_threads);
  std::printf("g_db,ase,ase_stderr\n");
  for (const SearchCandidate& c : sr.curve) {
    std::printf("%s,%s,%s\n",
                c.g_linear > 0.0 ? format_full(linear_to_db(c.g_linear)).c_str() : "",
                format_full(c.ase).c_str(), format_full(c.ase_stderr).c_str());
  }
  std::printf("best: g=%s linear", format_full(sr.g_best).c_str());
  if (sr.g_best > 0.0) std::printf(" (%s dB)", format_full(linear_to_db(sr.g_best)).c_str());
  std::printf("  ase=%s\n", format_full(sr.ase_best).c_str());
  return 0;
}

ExperimentPlan figure_plan(const std::string& figure, const CommonOpts& opts) {
  const ConfigOverrides ov = overrides_from(opts);
  ExperimentPlan plan = parse_config_file(opts.config_path, ov);
  const auto beta_grid = [] {
    std::vector<double> v;
    for (double b = -10.0; b <= 20.0; b += 2.0) v.push_back(b);
    return v;
  };
  const std::vector<SchemeSpec> four = {SchemeSpec::no_ac(), SchemeSpec::channel_aware(),
                                        SchemeSpec::sir_unconditional(),
                                        SchemeSpec::sir_conditional()};
  std::vector<SchemeSpec> five = four;
  five.push_back(SchemeSpec::exhaustive());

  bool lambda_overridden = opts.lambda_set;
  bool beta_overridden = opts.beta_set;
  if (figure == "fig2" || figure == "fig3") {
    // ASE (fig2) and average sum rate (fig3) vs density at beta = 5 dB.
    if (!lambda_overridden) plan.density_sweep = {2e-5, 4e-5, 6e-5, 8e-5, 1e-4};
    if (!beta_overridden) plan.beta_sweep_db = {5.0};
    if (opts.schemes.empty()) plan.schemes = five;
  } else if (figure == "fig4" || figure == "fig5") {
    // ASE vs target SIR, sparse (fig4) and dense (fig5).
    if (!lambda_overridden) plan.density_sweep = {figure == "fig4" ? 2e-5 : 6e-5};
    if (!beta_overridden) plan.beta_sweep_db = beta_grid();
    if (opts.schemes.empty()) plan.schemes = four;
  } else if (figure == "fig6") {
    // Coverage probability vs target SIR in the sparse and dense settings.
    if (!lambda_overridden) plan.density_sweep = {2e-5, 6e-5};
    if (!beta_overridden) plan.beta_sweep_db = beta_grid();
    if (opts.schemes.empty()) plan.schemes = four;
  } else {
    throw std::invalid_argument("reproduce: unknown figure '" + figure +
                                "' (expected fig2..fig6)");
  }
  return plan;
}

int run_reproduce(const std::string& figure, const CommonOpts& opts) {
  const ExperimentPlan plan = figure_plan(figure, opts);
  return export_sweep(plan, opts, figure + (opts.format == "json" ? ".json" : ".csv"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"d2dsim: SIR-aware opportunistic access control for D2D underlay cells"};
  app.set_version_flag("--version", std::string(d2d::kVersion));
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<double> grid_db;
  std::string figure;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Closed-form constants, optimal thresholds, and analytic metrics");
  add_common_flags(analyze, opts, false);

  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a Monte Carlo sweep plan and export reports");
  add_common_flags(simulate, opts, true);

  CLI::App* search = app.add_subcommand(
      "search", "Exhaustive SIR-threshold search on a candidate grid (common random numbers)");
  add_common_flags(search, opts, false);
  search->add_option("--grid-db", grid_db,
                     "Candidate thresholds in dB (default grid if omitted)");

  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "Emit the data behind a reference figure: fig2|fig3|fig4|fig5|fig6");
  reproduce->add_option("figure", figure, "fig2|fig3|fig4|fig5|fig6")->required();
  add_common_flags(reproduce, opts, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(opts);
    if (simulate->parsed()) return run_simulate(opts);
    if (search->parsed()) return run_search(opts, grid_db);
    if (reproduce->parsed()) return run_reproduce(figure, opts);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
