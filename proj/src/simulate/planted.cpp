#include "simulate/planted.hpp"

#include <cmath>
#include <stdexcept>

#include "core/rng.hpp"

namespace tsbm {

void PlantedModel::validate() const {
  if (n_nodes < 1 || n_intervals < 1)
    throw std::invalid_argument("model dimensions must be positive");
  if (node_weights.empty() || time_weights.empty())
    throw std::invalid_argument("weight vectors must be non-empty");
  for (const auto* weights : {&node_weights, &time_weights}) {
    double total = 0.0;
    for (double w : *weights) {
      if (!(w >= 0.0) || !std::isfinite(w))
        throw std::invalid_argument("weights must be non-negative and finite");
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw std::invalid_argument("weights must sum to 1");
  }
  if (rates.size() != static_cast<std::size_t>(K()) * static_cast<std::size_t>(K()) *
                          static_cast<std::size_t>(D()))
    throw std::invalid_argument("rate array must be K*K*D");
  for (double r : rates)
    if (!(r >= 0.0) || !std::isfinite(r))
      throw std::invalid_argument("rates must be non-negative and finite");
}

namespace {

SampledGraph sample_with_labels(const PlantedModel& model, Rng& rng,
                                std::vector<std::int32_t> interval_labels) {
  const int n = model.n_nodes;
  const int u = model.n_intervals;

  std::vector<std::int32_t> node_labels(static_cast<std::size_t>(n));
  for (auto& c : node_labels)
    c = static_cast<std::int32_t>(rng.multinomial(model.node_weights));
  if (interval_labels.empty()) {
    interval_labels.resize(static_cast<std::size_t>(u));
    for (auto& y : interval_labels)
      y = static_cast<std::int32_t>(rng.multinomial(model.time_weights));
  }

  std::vector<EdgeRecord> records;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int k = node_labels[static_cast<std::size_t>(i)];
      const int g = node_labels[static_cast<std::size_t>(j)];
      for (int t = 0; t < u; ++t) {
        const double lambda =
            model.rate(k, g, interval_labels[static_cast<std::size_t>(t)]);
        const std::int64_t count = rng.poisson(lambda);
        if (count > 0)
          records.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j),
                             static_cast<std::int32_t>(t), count});
      }
    }

  SampledGraph out;
  out.tensor = InteractionTensor::from_records(records, n, u);
  out.node_labels = std::move(node_labels);
  out.interval_labels = std::move(interval_labels);
  out.model = model;
  return out;
}

}  // namespace

SampledGraph sample_planted(const PlantedModel& model, std::uint64_t seed) {
  model.validate();
  Rng rng(seed);
  return sample_with_labels(model, rng, {});
}

PlantedModel scenario1_model(double psi, double gamma_contrast, int n_nodes,
                             int n_intervals) {
  if (!(psi >= 2.0)) throw std::invalid_argument("psi must be >= 2");
  if (!(gamma_contrast >= 1.0)) throw std::invalid_argument("contrast must be >= 1");
  PlantedModel model;
  model.n_nodes = n_nodes;
  model.n_intervals = n_intervals;
  model.node_weights.assign(3, 1.0 / 3.0);
  model.time_weights.assign(3, 1.0 / 3.0);
  const double scale[3] = {1.0, std::sqrt(gamma_contrast), gamma_contrast};
  model.rates.resize(27);
  for (int k = 0; k < 3; ++k)
    for (int g = 0; g < 3; ++g)
      for (int d = 0; d < 3; ++d)
        model.rates[static_cast<std::size_t>((k * 3 + g) * 3 + d)] =
            (k == g ? psi : 2.0) * scale[d];
  return model;
}

SampledGraph scenario1(double psi, double gamma_contrast, int n_nodes, int n_intervals,
                       std::uint64_t seed) {
  return sample_planted(scenario1_model(psi, gamma_contrast, n_nodes, n_intervals), seed);
}

PlantedModel scenario2_model(int n_nodes, int n_intervals) {
  if (n_nodes < 4 || n_intervals < 4)
    throw std::invalid_argument("second scenario needs at least 4 nodes and 4 intervals");
  PlantedModel model;
  model.n_nodes = n_nodes;
  model.n_intervals = n_intervals;
  model.node_weights.assign(2, 0.5);
  model.time_weights.assign(2, 0.5);
  // d = 0: community pattern, d = 1: bipartite pattern
  model.rates.resize(8);
  for (int k = 0; k < 2; ++k)
    for (int g = 0; g < 2; ++g) {
      model.rates[static_cast<std::size_t>((k * 2 + g) * 2 + 0)] = k == g ? 2.0 : 1.0;
      model.rates[static_cast<std::size_t>((k * 2 + g) * 2 + 1)] = k == g ? 1.0 : 2.0;
    }
  return model;
}

SampledGraph scenario2(int n_nodes, int n_intervals, std::uint64_t seed,
                       bool fixed_balanced_y) {
  const PlantedModel model = scenario2_model(n_nodes, n_intervals);
  model.validate();
  Rng rng(seed);
  std::vector<std::int32_t> interval_labels;
  if (fixed_balanced_y) {
    if (n_intervals % 2 != 0)
      throw std::invalid_argument("balanced interval labels need an even interval count");
    interval_labels.resize(static_cast<std::size_t>(n_intervals));
    for (int u = 0; u < n_intervals; ++u)
      interval_labels[static_cast<std::size_t>(u)] = u < n_intervals / 2 ? 0 : 1;
  }
  return sample_with_labels(model, rng, std::move(interval_labels));
}

}  // namespace tsbm
