#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tsbm {

// Contingency table between two labelings of the same elements. Rows follow
// the distinct labels of x in ascending order, columns those of y.
struct Contingency {
  int n_rows = 0;
  int n_cols = 0;
  std::vector<std::int32_t> row_labels;
  std::vector<std::int32_t> col_labels;
  std::vector<std::int64_t> table;  // row-major

  std::int64_t at(int r, int c) const {
    return table[static_cast<std::size_t>(r) * static_cast<std::size_t>(n_cols) +
                 static_cast<std::size_t>(c)];
  }
};

Contingency confusion(std::span<const std::int32_t> x, std::span<const std::int32_t> y);

// Hubert-Arabie adjusted Rand index. When the chance-correction denominator
// vanishes (both labelings trivial) the result is 1 for identical partitions
// and 0 otherwise. Requires equal lengths >= 2.
double ari(std::span<const std::int32_t> x, std::span<const std::int32_t> y);

}  // namespace tsbm
