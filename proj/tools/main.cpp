#include <cstdio>
#include <exception>

#include <CLI11.hpp>
#include <tsbm/tsbm.h>

#include "commands.hpp"

namespace {

void add_fit_flags(CLI::App* app, cli::FitFlags& flags, bool with_strategy = true) {
  if (with_strategy)
    app->add_option("--strategy", flags.strategy, "search strategy: A, B, C or best")
        ->check(CLI::IsMember({"A", "B", "C", "best"}));
  app->add_option("--restarts", flags.restarts, "independent restarts, best ICL wins")
      ->check(CLI::PositiveNumber);
  app->add_option("--init", flags.init, "initial labeling: singletons, random or hier")
      ->check(CLI::IsMember({"singletons", "random", "hier"}));
  app->add_option("--kmax", flags.k_max, "starting node cluster count (0 = N/2)");
  app->add_option("--dmax", flags.d_max, "starting interval cluster count (0 = U/2)");
  app->add_option("--alpha", flags.alpha, "Dirichlet concentration for node clusters");
  app->add_option("--gamma-prior", flags.gamma_prior,
                  "Dirichlet concentration for interval clusters");
  app->add_option("--a", flags.a, "Gamma shape of the intensity prior");
  app->add_option("--b", flags.b, "Gamma rate of the intensity prior");
  app->add_option("--seed", flags.seed, "base seed");
  app->add_option("--jobs", flags.jobs, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--min-improvement", flags.min_improvement,
                  "smallest ICL gain a move may commit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tsbm - co-clustering of nodes and time intervals in dynamic networks "
               "by exact ICL maximization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tsbm_version());

  cli::FitCommand fit_cmd;
  CLI::App* fit = app.add_subcommand("fit", "cluster an interaction record");
  fit->add_option("input", fit_cmd.input, "input CSV")->required();
  fit->add_option("--format", fit_cmd.format, "aggregated or stream")
      ->check(CLI::IsMember({"aggregated", "stream"}));
  fit->add_option("--delta", fit_cmd.delta, "interval width in seconds (stream format)");
  fit->add_option("--horizon", fit_cmd.horizon, "observation horizon in seconds (stream)");
  fit->add_option("--nodes", fit_cmd.n_nodes, "node count (0 = infer)");
  fit->add_option("--intervals", fit_cmd.n_intervals, "interval count (0 = infer)");
  fit->add_option("--out", fit_cmd.out, "partition JSON path")->required();
  add_fit_flags(fit, fit_cmd.fit);

  cli::SimulateCommand sim_cmd;
  CLI::App* simulate = app.add_subcommand("simulate", "sample synthetic dynamic graphs");
  simulate->add_option("--scenario", sim_cmd.scenario, "1, 2 or custom")
      ->check(CLI::IsMember({"1", "2", "custom"}));
  simulate->add_option("--psi", sim_cmd.psi, "within-community intensity (scenario 1)");
  simulate->add_option("--gamma-contrast", sim_cmd.gamma_contrast,
                       "time contrast (scenario 1)");
  simulate->add_option("--gamma-grid", sim_cmd.gamma_grid,
                       "comma list of contrasts; one subdirectory per value");
  simulate->add_option("--nodes", sim_cmd.n_nodes, "node count (0 = scenario default)");
  simulate->add_option("--intervals", sim_cmd.n_intervals,
                       "interval count (0 = scenario default)");
  simulate->add_flag("--fixed-balanced-y", sim_cmd.fixed_balanced_y,
                     "scenario 2: exactly U/2 intervals per time cluster");
  simulate->add_option("--model", sim_cmd.model_path, "model JSON (scenario custom)");
  simulate->add_option("--n-graphs", sim_cmd.n_graphs, "graphs per cell")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_cmd.seed, "base seed");
  simulate->add_option("--out", sim_cmd.out_dir, "output directory")->required();

  cli::EvalCommand eval_cmd;
  CLI::App* eval = app.add_subcommand("eval", "score a fit against reference labels");
  eval->add_option("--pred", eval_cmd.pred, "fitted partition JSON")->required();
  eval->add_option("--truth", eval_cmd.truth, "reference partition/truth JSON")->required();

  cli::BenchCommand bench_cmd;
  bench_cmd.fit.restarts = 10;
  CLI::App* bench = app.add_subcommand("bench", "replicated experiment suites");
  bench->add_option("--suite", bench_cmd.suite,
                    "scenario1-time, scenario1-nodes, scenario2, strategies or scaling")
      ->required()
      ->check(CLI::IsMember(
          {"scenario1-time", "scenario1-nodes", "scenario2", "strategies", "scaling"}));
  bench->add_option("--replicates", bench_cmd.replicates, "replicates per cell")
      ->check(CLI::PositiveNumber);
  bench->add_option("--nodes", bench_cmd.n_nodes, "node count (0 = suite default)");
  bench->add_option("--intervals", bench_cmd.n_intervals,
                    "interval count (0 = suite default)");
  bench->add_option("--psi", bench_cmd.psi, "community contrast (0 = suite default)");
  bench->add_option("--gamma-contrast", bench_cmd.gamma_contrast,
                    "time contrast (0 = suite default)");
  bench->add_option("--gamma-grid", bench_cmd.gamma_grid, "scenario1-time cells");
  bench->add_option("--psi-grid", bench_cmd.psi_grid, "scenario1-nodes cells");
  bench->add_option("--sizes", bench_cmd.sizes, "scaling suite sizes (N = U)");
  bench->add_flag("--fixed-balanced-y", bench_cmd.fixed_balanced_y,
                  "scenario 2: exactly U/2 intervals per time cluster");
  bench->add_option("--out", bench_cmd.out, "results CSV path")->required();
  add_fit_flags(bench, bench_cmd.fit);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fit) return fit_cmd.run();
    if (*simulate) return sim_cmd.run();
    if (*eval) return eval_cmd.run();
    if (*bench) return bench_cmd.run();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
