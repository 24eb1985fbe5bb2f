#pragma once

#include <cstdint>
#include <string>

#include "util.hpp"

namespace cli {

struct FitCommand {
  std::string input;
  std::string format = "aggregated";
  double delta = 0.0;
  double horizon = 0.0;
  std::int64_t n_nodes = 0;
  std::int64_t n_intervals = 0;
  FitFlags fit;
  std::string out;

  int run() const;
};

struct SimulateCommand {
  std::string scenario = "1";
  double psi = 2.0;
  double gamma_contrast = 1.0;
  std::string gamma_grid;  // optional list for scenario 1
  std::int64_t n_nodes = 0;   // 0 = scenario default
  std::int64_t n_intervals = 0;
  bool fixed_balanced_y = false;
  std::string model_path;  // scenario = custom
  int n_graphs = 1;
  std::uint64_t seed = 0;
  std::string out_dir;

  int run() const;
};

struct EvalCommand {
  std::string pred;
  std::string truth;

  int run() const;
};

struct BenchCommand {
  std::string suite;
  int replicates = 20;
  std::int64_t n_nodes = 0;
  std::int64_t n_intervals = 0;
  double psi = 0.0;           // 0 = suite default
  double gamma_contrast = 0.0;
  std::string gamma_grid;
  std::string psi_grid;
  std::string sizes;
  bool fixed_balanced_y = false;
  FitFlags fit;  // fit.jobs is repurposed as the replicate-level pool size
  std::string out;

  int run() const;
};

}  // namespace cli
