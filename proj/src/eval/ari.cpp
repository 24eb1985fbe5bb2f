#include "eval/ari.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tsbm {

namespace {

std::vector<std::int32_t> distinct_sorted(std::span<const std::int32_t> labels) {
  std::vector<std::int32_t> out(labels.begin(), labels.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

Contingency confusion(std::span<const std::int32_t> x, std::span<const std::int32_t> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("label vectors must have equal length");
  Contingency c;
  c.row_labels = distinct_sorted(x);
  c.col_labels = distinct_sorted(y);
  c.n_rows = static_cast<int>(c.row_labels.size());
  c.n_cols = static_cast<int>(c.col_labels.size());
  std::map<std::int32_t, int> row_of, col_of;
  for (int r = 0; r < c.n_rows; ++r) row_of[c.row_labels[static_cast<std::size_t>(r)]] = r;
  for (int k = 0; k < c.n_cols; ++k) col_of[c.col_labels[static_cast<std::size_t>(k)]] = k;
  c.table.assign(static_cast<std::size_t>(c.n_rows) * static_cast<std::size_t>(c.n_cols), 0);
  for (std::size_t idx = 0; idx < x.size(); ++idx)
    ++c.table[static_cast<std::size_t>(row_of[x[idx]]) * static_cast<std::size_t>(c.n_cols) +
              static_cast<std::size_t>(col_of[y[idx]])];
  return c;
}

double ari(std::span<const std::int32_t> x, std::span<const std::int32_t> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("label vectors must have equal length");
  if (x.size() < 2) throw std::invalid_argument("need at least two elements");

  const Contingency c = confusion(x, y);
  const auto n = static_cast<std::int64_t>(x.size());

  std::int64_t index = 0;
  for (std::int64_t cell : c.table) index += choose2(cell);
  std::int64_t sum_rows = 0, sum_cols = 0;
  for (int r = 0; r < c.n_rows; ++r) {
    std::int64_t a = 0;
    for (int k = 0; k < c.n_cols; ++k) a += c.at(r, k);
    sum_rows += choose2(a);
  }
  for (int k = 0; k < c.n_cols; ++k) {
    std::int64_t b = 0;
    for (int r = 0; r < c.n_rows; ++r) b += c.at(r, k);
    sum_cols += choose2(b);
  }
  const std::int64_t pairs = choose2(n);

  // exact test for a vanishing denominator: (sum_rows + sum_cols) / 2 ==
  // sum_rows * sum_cols / pairs
  using wide = unsigned __int128;
  const bool degenerate = static_cast<wide>(sum_rows + sum_cols) * static_cast<wide>(pairs) ==
                          static_cast<wide>(2) * static_cast<wide>(sum_rows) *
                              static_cast<wide>(sum_cols);
  if (degenerate) {
    // both labelings trivial; 1 iff they induce the same partition
    bool same = c.n_rows == c.n_cols;
    if (same)
      for (int r = 0; r < c.n_rows && same; ++r) {
        int nonzero = 0;
        for (int k = 0; k < c.n_cols; ++k)
          if (c.at(r, k) > 0) ++nonzero;
        same = nonzero == 1;
      }
    return same ? 1.0 : 0.0;
  }

  const double expected = static_cast<double>(sum_rows) * static_cast<double>(sum_cols) /
                          static_cast<double>(pairs);
  const double max_index = 0.5 * static_cast<double>(sum_rows + sum_cols);
  return (static_cast<double>(index) - expected) / (max_index - expected);
}

}  // namespace tsbm
