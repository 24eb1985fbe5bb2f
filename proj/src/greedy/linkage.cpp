#include "greedy/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tsbm {

std::vector<std::int32_t> average_linkage_labels(const std::vector<std::vector<double>>& points,
                                                 int max_clusters) {
  const int n = static_cast<int>(points.size());
  if (max_clusters < 1) throw std::invalid_argument("max_clusters must be positive");
  if (n == 0) return {};

  // member list per active cluster; distances kept under Lance-Williams
  std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) members[static_cast<std::size_t>(i)] = {i};
  std::vector<bool> active(static_cast<std::size_t>(n), true);

  std::vector<double> dist(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  auto at = [&](int a, int b) -> double& {
    return dist[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(b)];
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      double sq = 0.0;
      const auto& pa = points[static_cast<std::size_t>(a)];
      const auto& pb = points[static_cast<std::size_t>(b)];
      for (std::size_t f = 0; f < pa.size(); ++f) {
        const double diff = pa[f] - pb[f];
        sq += diff * diff;
      }
      at(a, b) = at(b, a) = std::sqrt(sq);
    }

  int clusters = n;
  while (clusters > max_clusters) {
    int best_a = -1, best_b = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < n; ++a) {
      if (!active[static_cast<std::size_t>(a)]) continue;
      for (int b = a + 1; b < n; ++b) {
        if (!active[static_cast<std::size_t>(b)]) continue;
        if (at(a, b) < best) {
          best = at(a, b);
          best_a = a;
          best_b = b;
        }
      }
    }
    const auto na = static_cast<double>(members[static_cast<std::size_t>(best_a)].size());
    const auto nb = static_cast<double>(members[static_cast<std::size_t>(best_b)].size());
    for (int x = 0; x < n; ++x) {
      if (!active[static_cast<std::size_t>(x)] || x == best_a || x == best_b) continue;
      at(best_a, x) = at(x, best_a) = (na * at(best_a, x) + nb * at(best_b, x)) / (na + nb);
    }
    auto& ma = members[static_cast<std::size_t>(best_a)];
    auto& mb = members[static_cast<std::size_t>(best_b)];
    ma.insert(ma.end(), mb.begin(), mb.end());
    mb.clear();
    active[static_cast<std::size_t>(best_b)] = false;
    --clusters;
  }

  // contiguous ids ordered by smallest member
  std::vector<int> roots;
  for (int a = 0; a < n; ++a)
    if (active[static_cast<std::size_t>(a)]) roots.push_back(a);
  std::sort(roots.begin(), roots.end(), [&](int a, int b) {
    return *std::min_element(members[static_cast<std::size_t>(a)].begin(),
                             members[static_cast<std::size_t>(a)].end()) <
           *std::min_element(members[static_cast<std::size_t>(b)].begin(),
                             members[static_cast<std::size_t>(b)].end());
  });
  std::vector<std::int32_t> labels(static_cast<std::size_t>(n), 0);
  for (std::size_t id = 0; id < roots.size(); ++id)
    for (int member : members[static_cast<std::size_t>(roots[id])])
      labels[static_cast<std::size_t>(member)] = static_cast<std::int32_t>(id);
  return labels;
}

std::vector<std::vector<double>> node_features(const InteractionTensor& tensor) {
  const auto n = static_cast<std::size_t>(tensor.n_nodes());
  const auto u = static_cast<std::size_t>(tensor.n_intervals());
  std::vector<std::vector<double>> features(n, std::vector<double>(2 * u, 0.0));
  for (const EdgeRecord& cell : tensor.cells()) {
    features[static_cast<std::size_t>(cell.i)][static_cast<std::size_t>(cell.u)] +=
        static_cast<double>(cell.count);
    features[static_cast<std::size_t>(cell.j)][u + static_cast<std::size_t>(cell.u)] +=
        static_cast<double>(cell.count);
  }
  return features;
}

std::vector<std::vector<double>> interval_features(const InteractionTensor& tensor) {
  const auto n = static_cast<std::size_t>(tensor.n_nodes());
  const auto u = static_cast<std::size_t>(tensor.n_intervals());
  std::vector<std::vector<double>> features(u, std::vector<double>(n, 0.0));
  for (const EdgeRecord& cell : tensor.cells()) {
    auto& f = features[static_cast<std::size_t>(cell.u)];
    f[static_cast<std::size_t>(cell.i)] += static_cast<double>(cell.count);
    f[static_cast<std::size_t>(cell.j)] += static_cast<double>(cell.count);
  }
  return features;
}

}  // namespace tsbm
