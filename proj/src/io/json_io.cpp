#include "io/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace tsbm {

namespace {

nlohmann::ordered_json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

void dump(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

nlohmann::ordered_json partition_body(const Partition& p) {
  nlohmann::ordered_json j;
  j["node_labels"] = p.node_labels;
  j["interval_labels"] = p.interval_labels;
  j["K"] = p.K;
  j["D"] = p.D;
  return j;
}

nlohmann::ordered_json model_body(const PlantedModel& m) {
  nlohmann::ordered_json j;
  j["n_nodes"] = m.n_nodes;
  j["n_intervals"] = m.n_intervals;
  j["node_weights"] = m.node_weights;
  j["time_weights"] = m.time_weights;
  nlohmann::ordered_json rates = nlohmann::ordered_json::array();
  for (int k = 0; k < m.K(); ++k) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int g = 0; g < m.K(); ++g) {
      nlohmann::ordered_json cell = nlohmann::ordered_json::array();
      for (int d = 0; d < m.D(); ++d) cell.push_back(m.rate(k, g, d));
      row.push_back(cell);
    }
    rates.push_back(row);
  }
  j["rates"] = rates;
  return j;
}

}  // namespace

void write_partition_json(const std::string& path, const Partition& partition) {
  dump(path, partition_body(partition));
}

Partition read_partition_json(const std::string& path) {
  const auto j = load(path);
  Partition p;
  try {
    p.node_labels = j.at("node_labels").get<std::vector<std::int32_t>>();
    p.interval_labels = j.at("interval_labels").get<std::vector<std::int32_t>>();
    p.K = j.at("K").get<std::int32_t>();
    p.D = j.at("D").get<std::int32_t>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  p.validate();
  return p;
}

void write_truth_json(const std::string& path, const SampledGraph& graph) {
  // A planted cluster can stay empty by chance; the file reports the
  // effective clustering with contiguous ids.
  Partition p{graph.node_labels, graph.interval_labels, 0, 0};
  p.K = compact_labels(p.node_labels);
  p.D = compact_labels(p.interval_labels);
  auto j = partition_body(p);
  j["model"] = model_body(graph.model);
  dump(path, j);
}

void write_model_json(const std::string& path, const PlantedModel& model) {
  dump(path, model_body(model));
}

PlantedModel read_model_json(const std::string& path) {
  const auto j = load(path);
  PlantedModel m;
  try {
    m.n_nodes = j.at("n_nodes").get<int>();
    m.n_intervals = j.at("n_intervals").get<int>();
    m.node_weights = j.at("node_weights").get<std::vector<double>>();
    m.time_weights = j.at("time_weights").get<std::vector<double>>();
    const auto& rates = j.at("rates");
    m.rates.reserve(m.node_weights.size() * m.node_weights.size() * m.time_weights.size());
    for (const auto& row : rates)
      for (const auto& cell : row)
        for (const auto& value : cell) m.rates.push_back(value.get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  m.validate();
  return m;
}

}  // namespace tsbm
