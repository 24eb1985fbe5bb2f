#include <cstdio>
#include <filesystem>

#include "commands.hpp"

namespace cli {

namespace {

std::string trim_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%g", value);
  return buffer;
}

}  // namespace

int SimulateCommand::run() const {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  Manifest manifest;
  manifest.command = "simulate";
  manifest.seed = seed;
  manifest.flags = {{"scenario", scenario},
                    {"psi", psi},
                    {"gamma_contrast", gamma_contrast},
                    {"gamma_grid", gamma_grid},
                    {"nodes", n_nodes},
                    {"intervals", n_intervals},
                    {"fixed_balanced_y", fixed_balanced_y},
                    {"model", model_path},
                    {"n_graphs", n_graphs},
                    {"seed", seed},
                    {"out", out_dir}};

  struct Cell {
    std::string dir;
    double gamma = 1.0;
  };
  std::vector<Cell> cells;
  if (scenario == "1" && !gamma_grid.empty()) {
    for (double value : parse_grid(gamma_grid))
      cells.push_back({out_dir + "/gamma_" + trim_number(value), value});
  } else {
    cells.push_back({out_dir, gamma_contrast});
  }

  for (std::size_t cell_index = 0; cell_index < cells.size(); ++cell_index) {
    const Cell& cell = cells[cell_index];
    fs::create_directories(cell.dir);
    const std::uint64_t cell_seed = cells.size() == 1
                                        ? seed
                                        : tsbm_derive_seed(seed, cell_index);
    for (int graph = 0; graph < n_graphs; ++graph) {
      const std::uint64_t graph_seed =
          tsbm_derive_seed(cell_seed, static_cast<std::uint64_t>(graph));
      tsbm_dataset* raw = nullptr;
      if (scenario == "1") {
        check(tsbm_simulate_scenario1(psi, cell.gamma, n_nodes == 0 ? 50 : n_nodes,
                                      n_intervals == 0 ? 50 : n_intervals, graph_seed,
                                      &raw),
              "simulate");
      } else if (scenario == "2") {
        check(tsbm_simulate_scenario2(n_nodes == 0 ? 50 : n_nodes,
                                      n_intervals == 0 ? 100 : n_intervals, graph_seed,
                                      fixed_balanced_y ? 1 : 0, &raw),
              "simulate");
      } else if (scenario == "custom") {
        if (model_path.empty()) throw std::runtime_error("custom scenario needs --model");
        check(tsbm_simulate_model_json(model_path.c_str(), graph_seed, &raw), "simulate");
      } else {
        throw std::runtime_error("scenario must be 1, 2 or custom");
      }
      DatasetPtr dataset(raw);

      char name[32];
      std::snprintf(name, sizeof name, "graph_%03d", graph);
      const std::string csv_path = cell.dir + "/" + name + ".csv";
      const std::string truth_path = cell.dir + "/" + name + ".truth.json";
      check(tsbm_tensor_write_aggregated_csv(tsbm_dataset_tensor(dataset.get()),
                                             csv_path.c_str()),
            "write " + csv_path);
      check(tsbm_dataset_write_truth_json(dataset.get(), truth_path.c_str()),
            "write " + truth_path);
      manifest.outputs.push_back(csv_path);
      manifest.outputs.push_back(truth_path);
    }
  }

  if (scenario == "custom") manifest.add_input(model_path);
  manifest.write(out_dir + "/manifest.json");
  std::printf("wrote %zu graphs to %s\n",
              static_cast<std::size_t>(n_graphs) * cells.size(), out_dir.c_str());
  return 0;
}

}  // namespace cli
