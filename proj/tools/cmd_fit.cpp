#include <chrono>
#include <cstdio>
#include <fstream>

#include "commands.hpp"

namespace cli {

namespace {

long long elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

int FitCommand::run() const {
  Manifest manifest;
  manifest.command = "fit";
  manifest.seed = fit.seed;
  manifest.flags = {{"input", input},
                    {"format", format},
                    {"delta", delta},
                    {"horizon", horizon},
                    {"nodes", n_nodes},
                    {"intervals", n_intervals},
                    {"strategy", fit.strategy},
                    {"init", fit.init},
                    {"kmax", fit.k_max},
                    {"dmax", fit.d_max},
                    {"restarts", fit.restarts},
                    {"seed", fit.seed},
                    {"min_improvement", fit.min_improvement},
                    {"jobs", fit.jobs},
                    {"a", fit.a},
                    {"b", fit.b},
                    {"alpha", fit.alpha},
                    {"gamma_prior", fit.gamma_prior},
                    {"out", out}};
  manifest.add_input(input);

  auto t0 = std::chrono::steady_clock::now();
  TensorPtr tensor;
  {
    tsbm_tensor* raw = nullptr;
    if (format == "aggregated") {
      check(tsbm_tensor_from_aggregated_csv(input.c_str(), n_nodes, n_intervals, &raw),
            "read " + input);
    } else if (format == "stream") {
      if (delta <= 0.0 || horizon <= 0.0)
        throw std::runtime_error("stream format needs --delta and --horizon");
      check(tsbm_tensor_from_stream_csv(input.c_str(), delta, horizon, n_nodes, &raw),
            "read " + input);
    } else {
      throw std::runtime_error("format must be aggregated or stream");
    }
    tensor.reset(raw);
  }
  manifest.wall_ms["read"] = elapsed_ms(t0);

  t0 = std::chrono::steady_clock::now();
  const FitOutcome outcome = run_fit(tensor.get(), fit);
  manifest.wall_ms["fit"] = elapsed_ms(t0);

  t0 = std::chrono::steady_clock::now();
  const tsbm_result* result = outcome.result.get();
  check(tsbm_result_write_partition_json(result, out.c_str()), "write " + out);

  nlohmann::ordered_json icl_json;
  icl_json["icl"] = tsbm_result_icl(result);
  icl_json["block_term"] = tsbm_result_icl_block_term(result);
  icl_json["label_term"] = tsbm_result_icl_label_term(result);
  icl_json["K"] = tsbm_result_k(result);
  icl_json["D"] = tsbm_result_d(result);
  icl_json["strategy"] = outcome.selected_strategy;
  icl_json["best_restart"] = tsbm_result_best_restart(result);
  nlohmann::ordered_json restart_icls = nlohmann::ordered_json::array();
  for (int r = 0; r < tsbm_result_n_restarts(result); ++r)
    restart_icls.push_back(tsbm_result_restart_icl(result, r));
  icl_json["restart_icls"] = restart_icls;
  icl_json["n_moves"] = tsbm_result_trace_length(result);
  if (!outcome.strategy_icls.empty()) {
    nlohmann::ordered_json by_strategy = nlohmann::ordered_json::object();
    for (const auto& [name, icl] : outcome.strategy_icls) by_strategy[name] = icl;
    icl_json["strategy_icls"] = by_strategy;
  }
  const std::string icl_path = sibling_path(out, ".icl.json");
  {
    std::ofstream stream(icl_path, std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot write " + icl_path);
    stream << icl_json.dump(2) << '\n';
  }

  // interval -> cluster table, one row per interval, for plotting the
  // daily/temporal profile of the fitted time clusters
  const std::string intervals_path = sibling_path(out, ".intervals.csv");
  {
    const auto labels = result_interval_labels(result, tensor.get());
    std::ofstream stream(intervals_path, std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot write " + intervals_path);
    stream << "interval,cluster\n";
    for (std::size_t u = 0; u < labels.size(); ++u)
      stream << u << ',' << labels[u] << '\n';
  }
  manifest.wall_ms["write"] = elapsed_ms(t0);

  manifest.outputs = {out, icl_path, intervals_path};
  manifest.write(sibling_path(out, ".manifest.json"));

  std::printf("icl %s\n", fmt(tsbm_result_icl(result)).c_str());
  std::printf("K %lld\nD %lld\n", static_cast<long long>(tsbm_result_k(result)),
              static_cast<long long>(tsbm_result_d(result)));
  std::printf("strategy %s\n", outcome.selected_strategy.c_str());
  std::printf("wrote %s\n", out.c_str());
  return 0;
}

}  // namespace cli
