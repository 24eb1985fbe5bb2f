#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tsbm {

// One aggregated record: `count` directed interactions from node i to node j
// during interval u.
struct EdgeRecord {
  std::int32_t i = 0;
  std::int32_t j = 0;
  std::int32_t u = 0;
  std::int64_t count = 0;

  bool operator==(const EdgeRecord&) const = default;
};

// One time-stamped contact from a raw event stream.
struct Contact {
  double t = 0.0;
  std::int32_t i = 0;
  std::int32_t j = 0;
};

// Immutable directed interaction-count tensor over U equal-width intervals.
// Only non-zero cells are stored. Per-interval and per-node views are built
// once at construction so statistics updates can stream over exactly the
// cells a move touches. Safe to share across threads after construction.
class InteractionTensor {
 public:
  InteractionTensor() = default;  // empty 0 x 0 x 0 tensor

  struct IntervalCell {
    std::int32_t i, j;
    std::int64_t count;
  };
  // `other` is the opposite endpoint: the target for out-cells, the source
  // for in-cells.
  struct NodeCell {
    std::int32_t other, u;
    std::int64_t count;
  };

  // Sums duplicate (i, j, u) keys, drops zero counts. n_nodes / n_intervals
  // of 0 means "infer as max index + 1".
  static InteractionTensor from_records(std::span<const EdgeRecord> records,
                                        int n_nodes, int n_intervals);

  // Bins contacts into U = horizon / delta equal intervals, each interval
  // left-open right-closed. delta must divide the horizon; contacts must
  // satisfy 0 < t <= horizon.
  static InteractionTensor from_stream(std::span<const Contact> contacts,
                                       double delta, double horizon,
                                       int n_nodes = 0);

  int n_nodes() const { return n_nodes_; }
  int n_intervals() const { return n_intervals_; }
  std::int64_t total() const { return total_; }
  std::int64_t max_count() const { return max_count_; }

  // all non-zero cells, sorted by (i, j, u)
  std::span<const EdgeRecord> cells() const { return cells_; }
  std::size_t n_cells() const { return cells_.size(); }
  // 0 when the cell is absent
  std::int64_t count(int i, int j, int u) const;

  std::span<const IntervalCell> interval_cells(int u) const;
  std::span<const NodeCell> out_cells(int i) const;  // edges i -> other
  std::span<const NodeCell> in_cells(int i) const;   // edges other -> i

  // U = 1 tensor with counts summed over all intervals (static-graph view)
  InteractionTensor aggregated_over_intervals() const;

  bool operator==(const InteractionTensor& rhs) const {
    return n_nodes_ == rhs.n_nodes_ && n_intervals_ == rhs.n_intervals_ &&
           cells_ == rhs.cells_;
  }

 private:
  void build_indexes();

  int n_nodes_ = 0;
  int n_intervals_ = 0;
  std::int64_t total_ = 0;
  std::int64_t max_count_ = 0;
  std::vector<EdgeRecord> cells_;

  std::vector<IntervalCell> by_interval_;
  std::vector<std::size_t> interval_offsets_;
  std::vector<NodeCell> out_cells_;
  std::vector<std::size_t> out_offsets_;
  std::vector<NodeCell> in_cells_;
  std::vector<std::size_t> in_offsets_;
};

}  // namespace tsbm
