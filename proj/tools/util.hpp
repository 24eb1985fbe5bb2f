#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>
#include <tsbm/tsbm.h>

namespace cli {

// throws std::runtime_error carrying the library's last error message
void check(tsbm_status status, const std::string& what);

struct TensorDeleter {
  void operator()(tsbm_tensor* p) const { tsbm_tensor_free(p); }
};
struct ResultDeleter {
  void operator()(tsbm_result* p) const { tsbm_result_free(p); }
};
struct DatasetDeleter {
  void operator()(tsbm_dataset* p) const { tsbm_dataset_free(p); }
};
using TensorPtr = std::unique_ptr<tsbm_tensor, TensorDeleter>;
using ResultPtr = std::unique_ptr<tsbm_result, ResultDeleter>;
using DatasetPtr = std::unique_ptr<tsbm_dataset, DatasetDeleter>;

std::string file_digest(const std::string& path);

// "out.json" -> "out.icl.json" for suffix ".icl.json"
std::string sibling_path(const std::string& out, const std::string& suffix);

// fixed-format double, deterministic across runs
std::string fmt(double value, int precision = 6);

std::vector<double> parse_grid(const std::string& csv_list);

// run manifest written next to every command's outputs
struct Manifest {
  std::string command;
  nlohmann::ordered_json flags = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
  std::vector<std::string> outputs;
  nlohmann::ordered_json wall_ms = nlohmann::ordered_json::object();

  void add_input(const std::string& path);
  void write(const std::string& path) const;
};

// shared fit/priors flags; strategy may be "A"/"B"/"C"/"best"
struct FitFlags {
  std::string strategy = "A";
  std::string init = "hier";
  std::int64_t k_max = 0;
  std::int64_t d_max = 0;
  int restarts = 1;
  std::uint64_t seed = 0;
  double min_improvement = 1e-10;
  int jobs = 1;
  double a = 1.0, b = 1.0, alpha = 1.0, gamma_prior = 1.0;

  tsbm_fit_options to_options() const;  // strategy field assumes A/B/C (not best)
};

struct FitOutcome {
  ResultPtr result;
  std::string selected_strategy;
  // per-strategy final ICLs when strategy == "best"
  std::vector<std::pair<std::string, double>> strategy_icls;
};

// single fit honoring the best-of-three selection of the strategy flag
FitOutcome run_fit(const tsbm_tensor* tensor, const FitFlags& flags);

std::vector<std::int32_t> result_node_labels(const tsbm_result* result,
                                             const tsbm_tensor* tensor);
std::vector<std::int32_t> result_interval_labels(const tsbm_result* result,
                                                 const tsbm_tensor* tensor);
std::vector<std::int32_t> dataset_node_labels(const tsbm_dataset* dataset);
std::vector<std::int32_t> dataset_interval_labels(const tsbm_dataset* dataset);

double ari_of(const std::vector<std::int32_t>& x, const std::vector<std::int32_t>& y);

}  // namespace cli
