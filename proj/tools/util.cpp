#include "util.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cli {

void check(tsbm_status status, const std::string& what) {
  if (status != TSBM_OK)
    throw std::runtime_error(what + ": " + tsbm_last_error());
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::uint64_t h = 0xCBF29CE484222325ull;
  char buffer[1 << 14];
  while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
    for (std::streamsize idx = 0; idx < in.gcount(); ++idx) {
      h ^= static_cast<unsigned char>(buffer[idx]);
      h *= 0x100000001B3ull;
    }
    if (!in) break;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

std::string sibling_path(const std::string& out, const std::string& suffix) {
  const std::string json_ext = ".json";
  if (out.size() > json_ext.size() &&
      out.compare(out.size() - json_ext.size(), json_ext.size(), json_ext) == 0)
    return out.substr(0, out.size() - json_ext.size()) + suffix;
  return out + suffix;
}

std::string fmt(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", precision, value);
  return buffer;
}

std::vector<double> parse_grid(const std::string& csv_list) {
  std::vector<double> values;
  std::stringstream stream(csv_list);
  std::string field;
  while (std::getline(stream, field, ',')) {
    if (field.empty()) continue;
    std::size_t used = 0;
    const double value = std::stod(field, &used);
    if (used != field.size()) throw std::runtime_error("invalid grid value '" + field + "'");
    values.push_back(value);
  }
  if (values.empty()) throw std::runtime_error("empty grid");
  return values;
}

void Manifest::add_input(const std::string& path) {
  inputs.push_back({{"path", path}, {"digest", file_digest(path)}});
}

void Manifest::write(const std::string& path) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["flags"] = flags;
  j["seed"] = seed;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["wall_ms"] = wall_ms;
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

tsbm_fit_options FitFlags::to_options() const {
  tsbm_fit_options options;
  tsbm_fit_options_defaults(&options);
  if (strategy == "A")
    options.strategy = TSBM_STRATEGY_A;
  else if (strategy == "B")
    options.strategy = TSBM_STRATEGY_B;
  else if (strategy == "C")
    options.strategy = TSBM_STRATEGY_C;
  else
    throw std::runtime_error("strategy must be A, B, C or best");
  if (init == "singletons")
    options.init = TSBM_INIT_SINGLETONS;
  else if (init == "random")
    options.init = TSBM_INIT_RANDOM;
  else if (init == "hier")
    options.init = TSBM_INIT_HIERARCHICAL;
  else
    throw std::runtime_error("init must be singletons, random or hier");
  options.k_max = k_max;
  options.d_max = d_max;
  options.restarts = restarts;
  options.seed = seed;
  options.min_improvement = min_improvement;
  options.jobs = jobs;
  options.prior_a = a;
  options.prior_b = b;
  options.prior_alpha = alpha;
  options.prior_gamma = gamma_prior;
  return options;
}

FitOutcome run_fit(const tsbm_tensor* tensor, const FitFlags& flags) {
  FitOutcome outcome;
  if (flags.strategy != "best") {
    tsbm_result* raw = nullptr;
    const tsbm_fit_options options = flags.to_options();
    check(tsbm_fit(tensor, &options, &raw), "fit");
    outcome.result.reset(raw);
    outcome.selected_strategy = flags.strategy;
    return outcome;
  }
  // the three strategies compete on final ICL; ties keep the earliest
  for (const char* name : {"A", "B", "C"}) {
    FitFlags single = flags;
    single.strategy = name;
    tsbm_result* raw = nullptr;
    const tsbm_fit_options options = single.to_options();
    check(tsbm_fit(tensor, &options, &raw), std::string("fit strategy ") + name);
    ResultPtr candidate(raw);
    const double icl = tsbm_result_icl(candidate.get());
    outcome.strategy_icls.emplace_back(name, icl);
    if (!outcome.result || icl > tsbm_result_icl(outcome.result.get())) {
      outcome.result = std::move(candidate);
      outcome.selected_strategy = name;
    }
  }
  return outcome;
}

namespace {

std::vector<std::int32_t> copy_out(size_t n,
                                   tsbm_status (*getter)(const tsbm_result*, int32_t*, size_t),
                                   const tsbm_result* result, const char* what) {
  std::vector<std::int32_t> labels(n);
  check(getter(result, labels.data(), labels.size()), what);
  return labels;
}

}  // namespace

std::vector<std::int32_t> result_node_labels(const tsbm_result* result,
                                             const tsbm_tensor* tensor) {
  return copy_out(static_cast<size_t>(tsbm_tensor_n_nodes(tensor)),
                  &tsbm_result_node_labels, result, "node labels");
}

std::vector<std::int32_t> result_interval_labels(const tsbm_result* result,
                                                 const tsbm_tensor* tensor) {
  return copy_out(static_cast<size_t>(tsbm_tensor_n_intervals(tensor)),
                  &tsbm_result_interval_labels, result, "interval labels");
}

std::vector<std::int32_t> dataset_node_labels(const tsbm_dataset* dataset) {
  std::vector<std::int32_t> labels(
      static_cast<size_t>(tsbm_tensor_n_nodes(tsbm_dataset_tensor(dataset))));
  check(tsbm_dataset_node_labels(dataset, labels.data(), labels.size()), "truth labels");
  return labels;
}

std::vector<std::int32_t> dataset_interval_labels(const tsbm_dataset* dataset) {
  std::vector<std::int32_t> labels(
      static_cast<size_t>(tsbm_tensor_n_intervals(tsbm_dataset_tensor(dataset))));
  check(tsbm_dataset_interval_labels(dataset, labels.data(), labels.size()), "truth labels");
  return labels;
}

double ari_of(const std::vector<std::int32_t>& x, const std::vector<std::int32_t>& y) {
  double value = 0.0;
  check(tsbm_ari(x.data(), y.data(), x.size(), &value), "ari");
  return value;
}

}  // namespace cli
