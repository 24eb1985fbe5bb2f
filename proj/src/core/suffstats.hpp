#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/partition.hpp"
#include "core/priors.hpp"
#include "core/tensor.hpp"

namespace tsbm {

struct Move {
  enum class Kind {
    node_exchange,      // element = node, src -> dst cluster
    interval_exchange,  // element = interval, src -> dst cluster
    node_merge,         // fold cluster src into dst
    interval_merge,
  };
  Kind kind{};
  std::int32_t element = -1;
  std::int32_t src = -1;
  std::int32_t dst = -1;
};

// Block sufficient statistics plus the marginal aggregates that make move
// deltas cheap:
//
//   S[k][g][d]      count sum of block (k, g, d)
//   logP[k][g][d]   sum of log(count!) over the block's cells
//   R[k][g][d]      number of (ordered pair, interval) cells in the block
//   logL[k][g][d]   cached integrated block log-likelihood
//   S_time[k][g][u] per-interval slice of S (independent of the interval
//                   labeling), used when an interval changes cluster
//   S_out[i][g][d]  counts from node i into cluster g during time cluster d
//   S_in[i][g][d]   counts from cluster g into node i during time cluster d
//
// All arrays are allocated once at k_max / d_max and never resized; dead
// slices are kept at zero. Mutation is single-threaded within one fit run.
class SuffStats {
 public:
  SuffStats(const InteractionTensor& tensor, const Partition& partition,
            const Priors& priors, int k_max, int d_max);

  int k_max() const { return k_max_; }
  int d_max() const { return d_max_; }
  int n_nodes() const { return n_nodes_; }
  int n_intervals() const { return n_intervals_; }
  const Priors& priors() const { return priors_; }

  std::int64_t S(int k, int g, int d) const { return s_[block_index(k, g, d)]; }
  double logP(int k, int g, int d) const { return logp_[block_index(k, g, d)]; }
  std::int64_t R(int k, int g, int d) const { return r_[block_index(k, g, d)]; }
  double logL(int k, int g, int d) const { return logl_[block_index(k, g, d)]; }

  std::int64_t S_time(int k, int g, int u) const { return s_time_[time_index(k, g, u)]; }
  double logP_time(int k, int g, int u) const { return logp_time_[time_index(k, g, u)]; }
  std::int64_t S_out(int i, int g, int d) const { return s_out_[node_index(i, g, d)]; }
  double logP_out(int i, int g, int d) const { return logp_out_[node_index(i, g, d)]; }
  std::int64_t S_in(int i, int g, int d) const { return s_in_[node_index(i, g, d)]; }
  double logP_in(int i, int g, int d) const { return logp_in_[node_index(i, g, d)]; }

  std::int32_t node_cluster_size(int k) const { return node_size_[static_cast<std::size_t>(k)]; }
  std::int32_t interval_cluster_size(int d) const { return interval_size_[static_cast<std::size_t>(d)]; }
  std::span<const std::int32_t> node_sizes(int live_k) const {
    return {node_size_.data(), static_cast<std::size_t>(live_k)};
  }
  std::span<const std::int32_t> interval_sizes(int live_d) const {
    return {interval_size_.data(), static_cast<std::size_t>(live_d)};
  }

  // |A_k||A_g| off the diagonal, |A_k|(|A_k| - 1) on it
  std::int64_t pair_cells(int k, int g) const {
    const auto a = static_cast<std::int64_t>(node_size_[static_cast<std::size_t>(k)]);
    if (k == g) return a * (a - 1);
    return a * static_cast<std::int64_t>(node_size_[static_cast<std::size_t>(g)]);
  }

  // Committed moves. Labels, sizes, blocks, marginals and the logL cache are
  // updated together; an exchange that empties its source cluster triggers
  // the same contiguous renumbering as a merge (the vacated id is filled by
  // the last live cluster).
  void move_node(const InteractionTensor& tensor, Partition& p, int node, int dst);
  void move_interval(const InteractionTensor& tensor, Partition& p, int u, int dst);
  void merge_node_clusters(const InteractionTensor& tensor, Partition& p, int src, int dst);
  void merge_interval_clusters(const InteractionTensor& tensor, Partition& p, int src, int dst);

 private:
  std::size_t block_index(int k, int g, int d) const {
    return (static_cast<std::size_t>(k) * static_cast<std::size_t>(k_max_) +
            static_cast<std::size_t>(g)) * static_cast<std::size_t>(d_max_) +
           static_cast<std::size_t>(d);
  }
  std::size_t time_index(int k, int g, int u) const {
    return (static_cast<std::size_t>(k) * static_cast<std::size_t>(k_max_) +
            static_cast<std::size_t>(g)) * static_cast<std::size_t>(n_intervals_) +
           static_cast<std::size_t>(u);
  }
  std::size_t node_index(int i, int g, int d) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(k_max_) +
            static_cast<std::size_t>(g)) * static_cast<std::size_t>(d_max_) +
           static_cast<std::size_t>(d);
  }

  void refresh_block(int k, int g, int d);
  void refresh_interval_slice(int live_k, int d);
  void refresh_node_row_col(int live_k, int live_d, int k);
  void remove_node_cluster(Partition& p, int dead);
  void remove_interval_cluster(Partition& p, int dead);
  void zero_node_cluster(int k);
  void zero_interval_cluster(int d);

  int k_max_ = 0, d_max_ = 0;
  int n_nodes_ = 0, n_intervals_ = 0;
  Priors priors_;

  std::vector<std::int64_t> s_, r_;
  std::vector<double> logp_, logl_;
  std::vector<std::int64_t> s_time_;
  std::vector<double> logp_time_;
  std::vector<std::int64_t> s_out_, s_in_;
  std::vector<double> logp_out_, logp_in_;
  std::vector<std::int32_t> node_size_, interval_size_;
};

// Applies one move, keeping stats and partition consistent.
void apply_move(SuffStats& stats, Partition& partition, const InteractionTensor& tensor,
                const Move& move);

}  // namespace tsbm
