#pragma once

#include <cstdint>
#include <vector>

#include "core/tensor.hpp"

namespace tsbm {

// Generative model: node labels drawn from node_weights, interval labels
// from time_weights, and each directed (pair, interval) cell Poisson with
// the rate of its block. Interval width is fixed to 1, so rates are
// per-interval intensities.
struct PlantedModel {
  int n_nodes = 0;
  int n_intervals = 0;
  std::vector<double> node_weights;   // length K
  std::vector<double> time_weights;   // length D
  std::vector<double> rates;          // K * K * D, indexed [k][g][d]

  int K() const { return static_cast<int>(node_weights.size()); }
  int D() const { return static_cast<int>(time_weights.size()); }
  double rate(int k, int g, int d) const {
    return rates[(static_cast<std::size_t>(k) * static_cast<std::size_t>(K()) +
                  static_cast<std::size_t>(g)) * static_cast<std::size_t>(D()) +
                 static_cast<std::size_t>(d)];
  }

  // weights must sum to 1 (within 1e-12), rates must be finite and >= 0
  void validate() const;
};

struct SampledGraph {
  InteractionTensor tensor;
  std::vector<std::int32_t> node_labels;
  std::vector<std::int32_t> interval_labels;
  PlantedModel model;
};

SampledGraph sample_planted(const PlantedModel& model, std::uint64_t seed);

// Three balanced communities whose intensity matrix has psi on the diagonal
// and 2 elsewhere, scaled by (1, sqrt(g), g) across three balanced time
// clusters. psi >= 2, contrast >= 1.
PlantedModel scenario1_model(double psi, double gamma_contrast, int n_nodes,
                             int n_intervals);
SampledGraph scenario1(double psi, double gamma_contrast, int n_nodes, int n_intervals,
                       std::uint64_t seed);

// Two node clusters switching between a community pattern [[2,1],[1,2]] and
// a bipartite pattern [[1,2],[2,1]] across two time clusters. With
// fixed_balanced_y the interval labeling is not sampled: the first U/2
// intervals form one cluster and the rest the other (U must be even).
PlantedModel scenario2_model(int n_nodes, int n_intervals);
SampledGraph scenario2(int n_nodes, int n_intervals, std::uint64_t seed,
                       bool fixed_balanced_y);

}  // namespace tsbm
