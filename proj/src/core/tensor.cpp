#include "core/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tsbm {

namespace {

[[noreturn]] void record_error(std::size_t index, const std::string& what) {
  throw std::invalid_argument("record " + std::to_string(index) + ": " + what);
}

}  // namespace

InteractionTensor InteractionTensor::from_records(std::span<const EdgeRecord> records,
                                                  int n_nodes, int n_intervals) {
  if (n_nodes < 0 || n_intervals < 0)
    throw std::invalid_argument("dimensions must be non-negative");
  if (n_nodes == 0 || n_intervals == 0) {
    std::int32_t max_node = -1, max_interval = -1;
    for (const EdgeRecord& r : records) {
      max_node = std::max({max_node, r.i, r.j});
      max_interval = std::max(max_interval, r.u);
    }
    if (n_nodes == 0) n_nodes = max_node + 1;
    if (n_intervals == 0) n_intervals = max_interval + 1;
    if (n_nodes == 0 || n_intervals == 0)
      throw std::invalid_argument("cannot infer dimensions from an empty record list");
  }

  InteractionTensor t;
  t.n_nodes_ = n_nodes;
  t.n_intervals_ = n_intervals;
  t.cells_.reserve(records.size());
  for (std::size_t idx = 0; idx < records.size(); ++idx) {
    const EdgeRecord& r = records[idx];
    if (r.i < 0 || r.i >= n_nodes || r.j < 0 || r.j >= n_nodes)
      record_error(idx, "node index outside [0, " + std::to_string(n_nodes) + ")");
    if (r.u < 0 || r.u >= n_intervals)
      record_error(idx, "interval index outside [0, " + std::to_string(n_intervals) + ")");
    if (r.i == r.j) record_error(idx, "self loop on node " + std::to_string(r.i));
    if (r.count < 0) record_error(idx, "negative count " + std::to_string(r.count));
    if (r.count > 0) t.cells_.push_back(r);
  }

  std::sort(t.cells_.begin(), t.cells_.end(), [](const EdgeRecord& a, const EdgeRecord& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.u < b.u;
  });
  // fold duplicate keys
  std::size_t out = 0;
  for (std::size_t idx = 0; idx < t.cells_.size(); ++idx) {
    if (out > 0 && t.cells_[out - 1].i == t.cells_[idx].i &&
        t.cells_[out - 1].j == t.cells_[idx].j && t.cells_[out - 1].u == t.cells_[idx].u) {
      t.cells_[out - 1].count += t.cells_[idx].count;
    } else {
      t.cells_[out++] = t.cells_[idx];
    }
  }
  t.cells_.resize(out);

  for (const EdgeRecord& c : t.cells_) {
    t.total_ += c.count;
    t.max_count_ = std::max(t.max_count_, c.count);
  }
  t.build_indexes();
  return t;
}

InteractionTensor InteractionTensor::from_stream(std::span<const Contact> contacts,
                                                 double delta, double horizon,
                                                 int n_nodes) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("interval width must be positive");
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    throw std::invalid_argument("horizon must be positive");
  const double ratio = horizon / delta;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
    throw std::invalid_argument("interval width does not divide the horizon");
  const int n_intervals = static_cast<int>(rounded);

  std::vector<EdgeRecord> records;
  records.reserve(contacts.size());
  for (std::size_t idx = 0; idx < contacts.size(); ++idx) {
    const Contact& c = contacts[idx];
    if (!(c.t > 0.0) || c.t > horizon)
      record_error(idx, "contact time " + std::to_string(c.t) + " outside (0, " +
                            std::to_string(horizon) + "]");
    int u = static_cast<int>(std::ceil(c.t / delta)) - 1;
    u = std::clamp(u, 0, n_intervals - 1);
    records.push_back({c.i, c.j, u, 1});
  }
  if (records.empty() && n_nodes == 0)
    throw std::invalid_argument("cannot infer node count from an empty stream");
  InteractionTensor t = from_records(records, n_nodes, n_intervals);
  return t;
}

std::int64_t InteractionTensor::count(int i, int j, int u) const {
  const EdgeRecord key{static_cast<std::int32_t>(i), static_cast<std::int32_t>(j),
                       static_cast<std::int32_t>(u), 0};
  auto it = std::lower_bound(cells_.begin(), cells_.end(), key,
                             [](const EdgeRecord& a, const EdgeRecord& b) {
                               if (a.i != b.i) return a.i < b.i;
                               if (a.j != b.j) return a.j < b.j;
                               return a.u < b.u;
                             });
  if (it != cells_.end() && it->i == key.i && it->j == key.j && it->u == key.u)
    return it->count;
  return 0;
}

void InteractionTensor::build_indexes() {
  const auto nu = static_cast<std::size_t>(n_intervals_);
  const auto nn = static_cast<std::size_t>(n_nodes_);

  std::vector<std::size_t> interval_counts(nu, 0), out_counts(nn, 0), in_counts(nn, 0);
  for (const EdgeRecord& c : cells_) {
    ++interval_counts[static_cast<std::size_t>(c.u)];
    ++out_counts[static_cast<std::size_t>(c.i)];
    ++in_counts[static_cast<std::size_t>(c.j)];
  }

  auto prefix = [](const std::vector<std::size_t>& counts) {
    std::vector<std::size_t> offsets(counts.size() + 1, 0);
    for (std::size_t idx = 0; idx < counts.size(); ++idx)
      offsets[idx + 1] = offsets[idx] + counts[idx];
    return offsets;
  };
  interval_offsets_ = prefix(interval_counts);
  out_offsets_ = prefix(out_counts);
  in_offsets_ = prefix(in_counts);

  by_interval_.resize(cells_.size());
  out_cells_.resize(cells_.size());
  in_cells_.resize(cells_.size());
  std::vector<std::size_t> ipos(interval_offsets_.begin(), interval_offsets_.end() - 1);
  std::vector<std::size_t> opos(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> npos(in_offsets_.begin(), in_offsets_.end() - 1);
  for (const EdgeRecord& c : cells_) {
    by_interval_[ipos[static_cast<std::size_t>(c.u)]++] = {c.i, c.j, c.count};
    out_cells_[opos[static_cast<std::size_t>(c.i)]++] = {c.j, c.u, c.count};
    in_cells_[npos[static_cast<std::size_t>(c.j)]++] = {c.i, c.u, c.count};
  }
}

std::span<const InteractionTensor::IntervalCell> InteractionTensor::interval_cells(int u) const {
  const auto lo = interval_offsets_[static_cast<std::size_t>(u)];
  const auto hi = interval_offsets_[static_cast<std::size_t>(u) + 1];
  return {by_interval_.data() + lo, hi - lo};
}

std::span<const InteractionTensor::NodeCell> InteractionTensor::out_cells(int i) const {
  const auto lo = out_offsets_[static_cast<std::size_t>(i)];
  const auto hi = out_offsets_[static_cast<std::size_t>(i) + 1];
  return {out_cells_.data() + lo, hi - lo};
}

std::span<const InteractionTensor::NodeCell> InteractionTensor::in_cells(int i) const {
  const auto lo = in_offsets_[static_cast<std::size_t>(i)];
  const auto hi = in_offsets_[static_cast<std::size_t>(i) + 1];
  return {in_cells_.data() + lo, hi - lo};
}

InteractionTensor InteractionTensor::aggregated_over_intervals() const {
  std::vector<EdgeRecord> folded;
  folded.reserve(cells_.size());
  for (const EdgeRecord& c : cells_) folded.push_back({c.i, c.j, 0, c.count});
  return from_records(folded, n_nodes_, 1);
}

}  // namespace tsbm
