#pragma once

// Independent oracles used by the test suites. Everything here recomputes
// from first principles (direct summation over tensor cells, explicit pair
// counting) and deliberately shares no code with the library's incremental
// paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "core/partition.hpp"
#include "core/priors.hpp"
#include "core/rng.hpp"
#include "core/tensor.hpp"

namespace tsbm::testing {

// Literal evaluation of the integrated complete-data log-likelihood: block
// sums and factorial products by direct triple loops over every (i, j, u)
// cell, then the Gamma marginal per block and the Dirichlet label marginal.
inline double reference_icl(const InteractionTensor& tensor, const Partition& p,
                            const Priors& pr) {
  const int n = tensor.n_nodes();
  const int u = tensor.n_intervals();
  const int K = p.K, D = p.D;

  std::vector<std::int64_t> node_count(static_cast<std::size_t>(K), 0);
  std::vector<std::int64_t> interval_count(static_cast<std::size_t>(D), 0);
  for (std::int32_t c : p.node_labels) ++node_count[static_cast<std::size_t>(c)];
  for (std::int32_t y : p.interval_labels) ++interval_count[static_cast<std::size_t>(y)];

  double block_term = 0.0;
  for (int k = 0; k < K; ++k)
    for (int g = 0; g < K; ++g)
      for (int d = 0; d < D; ++d) {
        std::int64_t s = 0;
        double logp = 0.0;
        std::int64_t cells = 0;
        for (int i = 0; i < n; ++i) {
          if (p.node_labels[static_cast<std::size_t>(i)] != k) continue;
          for (int j = 0; j < n; ++j) {
            if (i == j || p.node_labels[static_cast<std::size_t>(j)] != g) continue;
            for (int t = 0; t < u; ++t) {
              if (p.interval_labels[static_cast<std::size_t>(t)] != d) continue;
              const std::int64_t count = tensor.count(i, j, t);
              s += count;
              logp += std::lgamma(static_cast<double>(count) + 1.0);
              ++cells;
            }
          }
        }
        block_term += pr.a * std::log(pr.b) - std::lgamma(pr.a) - logp +
                      std::lgamma(static_cast<double>(s) + pr.a) -
                      (static_cast<double>(s) + pr.a) *
                          std::log(static_cast<double>(cells) + pr.b);
      }

  double label_term = std::lgamma(pr.alpha * K) - K * std::lgamma(pr.alpha) -
                      std::lgamma(n + pr.alpha * K) + std::lgamma(pr.gamma * D) -
                      D * std::lgamma(pr.gamma) - std::lgamma(u + pr.gamma * D);
  for (std::int64_t size : node_count)
    label_term += std::lgamma(static_cast<double>(size) + pr.alpha);
  for (std::int64_t size : interval_count)
    label_term += std::lgamma(static_cast<double>(size) + pr.gamma);

  return block_term + label_term;
}

// Adjusted Rand index by explicit enumeration of all element pairs.
inline double brute_force_ari(std::span<const std::int32_t> x,
                              std::span<const std::int32_t> y) {
  const std::size_t n = x.size();
  std::int64_t both = 0, x_only = 0, y_only = 0, neither = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool same_x = x[a] == x[b];
      const bool same_y = y[a] == y[b];
      if (same_x && same_y)
        ++both;
      else if (same_x)
        ++x_only;
      else if (same_y)
        ++y_only;
      else
        ++neither;
    }
  const double num = 2.0 * (static_cast<double>(both) * static_cast<double>(neither) -
                            static_cast<double>(x_only) * static_cast<double>(y_only));
  const double den =
      static_cast<double>(both + x_only) * static_cast<double>(x_only + neither) +
      static_cast<double>(both + y_only) * static_cast<double>(y_only + neither);
  if (den == 0.0) {
    // both labelings trivial: agree iff the pair relations coincide
    return (x_only == 0 && y_only == 0) ? 1.0 : 0.0;
  }
  return num / den;
}

struct RandomInstance {
  InteractionTensor tensor;
  Partition partition;
  Priors priors;
};

inline std::vector<std::int32_t> random_labels(Rng& rng, int n, int max_clusters) {
  std::vector<std::int32_t> labels(static_cast<std::size_t>(n));
  for (auto& c : labels)
    c = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(max_clusters)));
  compact_labels(labels);
  return labels;
}

inline RandomInstance random_instance(Rng& rng, int max_nodes = 12, int max_intervals = 10,
                                      std::int64_t max_count = 20) {
  RandomInstance inst;
  const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_nodes - 1)));
  const int u = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_intervals)));

  std::vector<EdgeRecord> records;
  const int cells = static_cast<int>(rng.below(static_cast<std::uint64_t>(n * n * u / 2 + 2)));
  for (int c = 0; c < cells; ++c) {
    const auto i = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(n)));
    const auto j = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(n)));
    if (i == j) continue;
    const auto t = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(u)));
    const auto count = static_cast<std::int64_t>(
        1 + rng.below(static_cast<std::uint64_t>(max_count)));
    records.push_back({i, j, t, count});
  }
  inst.tensor = InteractionTensor::from_records(records, n, u);

  inst.partition.node_labels = random_labels(rng, n, 1 + static_cast<int>(rng.below(4)));
  inst.partition.interval_labels = random_labels(rng, u, 1 + static_cast<int>(rng.below(3)));
  inst.partition.K =
      1 + *std::max_element(inst.partition.node_labels.begin(), inst.partition.node_labels.end());
  inst.partition.D = 1 + *std::max_element(inst.partition.interval_labels.begin(),
                                           inst.partition.interval_labels.end());

  const double choices[3] = {0.5, 1.0, 2.0};
  inst.priors.a = choices[rng.below(3)];
  inst.priors.b = choices[rng.below(3)];
  inst.priors.alpha = choices[rng.below(3)];
  inst.priors.gamma = choices[rng.below(3)];
  return inst;
}

}  // namespace tsbm::testing
