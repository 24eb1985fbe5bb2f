#pragma once

#include <cstdint>
#include <vector>

namespace tsbm {

// Joint labeling of nodes and time intervals. Cluster ids are contiguous,
// node labels live in [0, K), interval labels in [0, D), and every live
// cluster has at least one member.
struct Partition {
  std::vector<std::int32_t> node_labels;
  std::vector<std::int32_t> interval_labels;
  std::int32_t K = 0;
  std::int32_t D = 0;

  int n_nodes() const { return static_cast<int>(node_labels.size()); }
  int n_intervals() const { return static_cast<int>(interval_labels.size()); }

  static Partition single_cluster(int n_nodes, int n_intervals);

  // Throws std::invalid_argument on out-of-range labels, empty clusters or
  // non-contiguous ids.
  void validate() const;

  bool operator==(const Partition&) const = default;
};

// Renumbers arbitrary labels to contiguous ids (ascending by original id)
// and returns the number of distinct clusters.
std::int32_t compact_labels(std::vector<std::int32_t>& labels);

}  // namespace tsbm
