#pragma once

#include <cstdint>
#include <vector>

#include "core/tensor.hpp"

namespace tsbm {

// Average-linkage (UPGMA) agglomeration on Euclidean distances, stopped when
// `max_clusters` clusters remain. Labels are contiguous and ordered by each
// cluster's smallest member index, so the output is a pure function of the
// input.
std::vector<std::int32_t> average_linkage_labels(const std::vector<std::vector<double>>& points,
                                                 int max_clusters);

// Feature vectors driving the hierarchical initialization: per-interval
// out/in activity series for nodes, per-node total activity for intervals.
std::vector<std::vector<double>> node_features(const InteractionTensor& tensor);
std::vector<std::vector<double>> interval_features(const InteractionTensor& tensor);

}  // namespace tsbm
