#include "core/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace tsbm {

Partition Partition::single_cluster(int n_nodes, int n_intervals) {
  Partition p;
  p.node_labels.assign(static_cast<std::size_t>(n_nodes), 0);
  p.interval_labels.assign(static_cast<std::size_t>(n_intervals), 0);
  p.K = n_nodes > 0 ? 1 : 0;
  p.D = n_intervals > 0 ? 1 : 0;
  return p;
}

namespace {

void check_side(const std::vector<std::int32_t>& labels, std::int32_t n_clusters,
                const char* what) {
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(n_clusters), 0);
  for (std::int32_t c : labels) {
    if (c < 0 || c >= n_clusters)
      throw std::invalid_argument(std::string(what) + " label " + std::to_string(c) +
                                  " outside [0, " + std::to_string(n_clusters) + ")");
    ++sizes[static_cast<std::size_t>(c)];
  }
  for (std::int32_t c = 0; c < n_clusters; ++c)
    if (sizes[static_cast<std::size_t>(c)] == 0)
      throw std::invalid_argument(std::string(what) + " cluster " + std::to_string(c) +
                                  " is empty");
}

}  // namespace

void Partition::validate() const {
  check_side(node_labels, K, "node");
  check_side(interval_labels, D, "interval");
}

std::int32_t compact_labels(std::vector<std::int32_t>& labels) {
  std::map<std::int32_t, std::int32_t> remap;
  for (std::int32_t c : labels) remap.emplace(c, 0);
  std::int32_t next = 0;
  for (auto& [old_id, new_id] : remap) new_id = next++;
  for (std::int32_t& c : labels) c = remap.at(c);
  return next;
}

}  // namespace tsbm
