#pragma once

#include <cstdint>
#include <span>

#include "core/partition.hpp"
#include "core/priors.hpp"
#include "core/suffstats.hpp"
#include "icl/block_likelihood.hpp"

namespace tsbm {

// Integrated complete-data log-likelihood, split into the block part
// log p(counts | c, y, K, D) and the label part log p(c, y | K, D).
struct IclValue {
  double value = 0.0;
  double block_term = 0.0;
  double label_term = 0.0;
};

// log p(c, y | K, D): product of two symmetric Dirichlet-multinomial
// marginals over the cluster size vectors.
double log_label_prior(std::span<const std::int32_t> node_sizes,
                       std::span<const std::int32_t> interval_sizes, int n_nodes,
                       int n_intervals, const Priors& priors);

IclValue icl_full(const SuffStats& stats, const Partition& partition);

// Incremental ICL changes for candidate moves, computed from the cached
// block likelihoods and the marginal aggregates without touching any other
// slice. None of these mutates the state; each equals
// icl_full(after) - icl_full(before) for the corresponding committed move.
//
// Exchanges require a non-singleton source cluster (moving the last member
// is a merge and is priced differently because K or D drops).
double delta_exchange_interval(const SuffStats& stats, const Partition& p, int u,
                               int d_src, int d_dst);
double delta_exchange_node(const SuffStats& stats, const Partition& p, int node,
                           int k_src, int k_dst);
double delta_merge_interval(const SuffStats& stats, const Partition& p, int d_a, int d_b);
double delta_merge_node(const SuffStats& stats, const Partition& p, int k_a, int k_b);

namespace detail {
// Exchange deltas without the singleton / distinctness guards; used by the
// guarded entry points and by sanity tests.
double exchange_interval_terms(const SuffStats& stats, const Partition& p, int u,
                               int d_src, int d_dst);
double exchange_node_terms(const SuffStats& stats, const Partition& p, int node,
                           int k_src, int k_dst);
}  // namespace detail

}  // namespace tsbm
