#include "icl/icl.hpp"

#include <cmath>
#include <stdexcept>

namespace tsbm {

double log_label_prior(std::span<const std::int32_t> node_sizes,
                       std::span<const std::int32_t> interval_sizes, int n_nodes,
                       int n_intervals, const Priors& priors) {
  const auto side = [](std::span<const std::int32_t> sizes, int total, double conc) {
    const double m = static_cast<double>(sizes.size());
    double value = std::lgamma(conc * m) - m * std::lgamma(conc) -
                   std::lgamma(static_cast<double>(total) + conc * m);
    for (std::int32_t size : sizes) value += std::lgamma(static_cast<double>(size) + conc);
    return value;
  };
  return side(node_sizes, n_nodes, priors.alpha) +
         side(interval_sizes, n_intervals, priors.gamma);
}

IclValue icl_full(const SuffStats& stats, const Partition& partition) {
  IclValue out;
  for (int k = 0; k < partition.K; ++k)
    for (int g = 0; g < partition.K; ++g)
      for (int d = 0; d < partition.D; ++d) out.block_term += stats.logL(k, g, d);
  out.label_term = log_label_prior(stats.node_sizes(partition.K),
                                   stats.interval_sizes(partition.D),
                                   partition.n_nodes(), partition.n_intervals(),
                                   stats.priors());
  out.value = out.block_term + out.label_term;
  return out;
}

namespace detail {

double exchange_interval_terms(const SuffStats& stats, const Partition& p, int u,
                               int d_src, int d_dst) {
  if (d_src == d_dst) return 0.0;  // no-op move
  const Priors& pr = stats.priors();
  const int K = p.K;
  const auto c_src = static_cast<double>(stats.interval_cluster_size(d_src));
  const auto c_dst = static_cast<double>(stats.interval_cluster_size(d_dst));
  double delta = std::lgamma(c_src - 1.0 + pr.gamma) + std::lgamma(c_dst + 1.0 + pr.gamma) -
                 std::lgamma(c_src + pr.gamma) - std::lgamma(c_dst + pr.gamma);
  const auto new_src = stats.interval_cluster_size(d_src) - 1;
  const auto new_dst = stats.interval_cluster_size(d_dst) + 1;
  for (int k = 0; k < K; ++k)
    for (int g = 0; g < K; ++g) {
      const std::int64_t su = stats.S_time(k, g, u);
      const double lpu = stats.logP_time(k, g, u);
      const std::int64_t pf = stats.pair_cells(k, g);
      delta += log_block_likelihood(stats.S(k, g, d_src) - su,
                                    stats.logP(k, g, d_src) - lpu, pf * new_src, pr) +
               log_block_likelihood(stats.S(k, g, d_dst) + su,
                                    stats.logP(k, g, d_dst) + lpu, pf * new_dst, pr) -
               stats.logL(k, g, d_src) - stats.logL(k, g, d_dst);
    }
  return delta;
}

double exchange_node_terms(const SuffStats& stats, const Partition& p, int node,
                           int k_src, int k_dst) {
  if (k_src == k_dst) return 0.0;  // no-op move
  const Priors& pr = stats.priors();
  const int K = p.K, D = p.D;
  const auto a_src = static_cast<double>(stats.node_cluster_size(k_src));
  const auto a_dst = static_cast<double>(stats.node_cluster_size(k_dst));
  double delta = std::lgamma(a_src - 1.0 + pr.alpha) + std::lgamma(a_dst + 1.0 + pr.alpha) -
                 std::lgamma(a_src + pr.alpha) - std::lgamma(a_dst + pr.alpha);

  // cluster sizes after the move
  const auto new_size = [&](int k) -> std::int64_t {
    std::int64_t size = stats.node_cluster_size(k);
    if (k == k_src) --size;
    if (k == k_dst) ++size;
    return size;
  };
  const auto new_pairs = [&](int k, int g) -> std::int64_t {
    if (k == g) return new_size(k) * (new_size(k) - 1);
    return new_size(k) * new_size(g);
  };

  for (int d = 0; d < D; ++d) {
    const auto cd = static_cast<std::int64_t>(stats.interval_cluster_size(d));
    const std::int64_t o_src = stats.S_out(node, k_src, d), o_dst = stats.S_out(node, k_dst, d);
    const std::int64_t i_src = stats.S_in(node, k_src, d), i_dst = stats.S_in(node, k_dst, d);
    const double lo_src = stats.logP_out(node, k_src, d), lo_dst = stats.logP_out(node, k_dst, d);
    const double li_src = stats.logP_in(node, k_src, d), li_dst = stats.logP_in(node, k_dst, d);

    const auto diff = [&](int k, int g, std::int64_t ds, double dlp) {
      return log_block_likelihood(stats.S(k, g, d) + ds, stats.logP(k, g, d) + dlp,
                                  new_pairs(k, g) * cd, pr) -
             stats.logL(k, g, d);
    };

    for (int g = 0; g < K; ++g) {
      if (g == k_src || g == k_dst) continue;
      delta += diff(k_src, g, -stats.S_out(node, g, d), -stats.logP_out(node, g, d));
      delta += diff(k_dst, g, stats.S_out(node, g, d), stats.logP_out(node, g, d));
      delta += diff(g, k_src, -stats.S_in(node, g, d), -stats.logP_in(node, g, d));
      delta += diff(g, k_dst, stats.S_in(node, g, d), stats.logP_in(node, g, d));
    }
    delta += diff(k_src, k_src, -(o_src + i_src), -(lo_src + li_src));
    delta += diff(k_src, k_dst, i_src - o_dst, li_src - lo_dst);
    delta += diff(k_dst, k_src, o_src - i_dst, lo_src - li_dst);
    delta += diff(k_dst, k_dst, o_dst + i_dst, lo_dst + li_dst);
  }
  return delta;
}

}  // namespace detail

double delta_exchange_interval(const SuffStats& stats, const Partition& p, int u,
                               int d_src, int d_dst) {
  if (u < 0 || u >= p.n_intervals() ||
      p.interval_labels[static_cast<std::size_t>(u)] != d_src)
    throw std::invalid_argument("interval source cluster does not match the labeling");
  if (d_dst < 0 || d_dst >= p.D) throw std::invalid_argument("dead interval cluster");
  if (d_dst == d_src) throw std::invalid_argument("exchange with source = destination");
  if (stats.interval_cluster_size(d_src) < 2)
    throw std::invalid_argument("singleton source: use the merge delta");
  return detail::exchange_interval_terms(stats, p, u, d_src, d_dst);
}

double delta_exchange_node(const SuffStats& stats, const Partition& p, int node,
                           int k_src, int k_dst) {
  if (node < 0 || node >= p.n_nodes() ||
      p.node_labels[static_cast<std::size_t>(node)] != k_src)
    throw std::invalid_argument("node source cluster does not match the labeling");
  if (k_dst < 0 || k_dst >= p.K) throw std::invalid_argument("dead node cluster");
  if (k_dst == k_src) throw std::invalid_argument("exchange with source = destination");
  if (stats.node_cluster_size(k_src) < 2)
    throw std::invalid_argument("singleton source: use the merge delta");
  return detail::exchange_node_terms(stats, p, node, k_src, k_dst);
}

double delta_merge_interval(const SuffStats& stats, const Partition& p, int d_a, int d_b) {
  if (d_a < 0 || d_a >= p.D || d_b < 0 || d_b >= p.D)
    throw std::invalid_argument("dead interval cluster");
  if (d_a == d_b) throw std::invalid_argument("merge with identical clusters");
  const Priors& pr = stats.priors();
  const int K = p.K, D = p.D;
  const int U = p.n_intervals();
  const auto ca = static_cast<double>(stats.interval_cluster_size(d_a));
  const auto cb = static_cast<double>(stats.interval_cluster_size(d_b));

  double delta = std::lgamma(pr.gamma * (D - 1)) - std::lgamma(pr.gamma * D) +
                 std::lgamma(pr.gamma) + std::lgamma(ca + cb + pr.gamma) -
                 std::lgamma(ca + pr.gamma) - std::lgamma(cb + pr.gamma) -
                 std::lgamma(U + pr.gamma * (D - 1)) + std::lgamma(U + pr.gamma * D);

  const std::int64_t merged_size = stats.interval_cluster_size(d_a) +
                                   stats.interval_cluster_size(d_b);
  for (int k = 0; k < K; ++k)
    for (int g = 0; g < K; ++g) {
      const std::int64_t pf = stats.pair_cells(k, g);
      delta += log_block_likelihood(stats.S(k, g, d_a) + stats.S(k, g, d_b),
                                    stats.logP(k, g, d_a) + stats.logP(k, g, d_b),
                                    pf * merged_size, pr) -
               stats.logL(k, g, d_a) - stats.logL(k, g, d_b);
    }
  return delta;
}

double delta_merge_node(const SuffStats& stats, const Partition& p, int k_a, int k_b) {
  if (k_a < 0 || k_a >= p.K || k_b < 0 || k_b >= p.K)
    throw std::invalid_argument("dead node cluster");
  if (k_a == k_b) throw std::invalid_argument("merge with identical clusters");
  const Priors& pr = stats.priors();
  const int K = p.K, D = p.D;
  const int N = p.n_nodes();
  const auto aa = static_cast<double>(stats.node_cluster_size(k_a));
  const auto ab = static_cast<double>(stats.node_cluster_size(k_b));

  double delta = std::lgamma(pr.alpha * (K - 1)) - std::lgamma(pr.alpha * K) +
                 std::lgamma(pr.alpha) + std::lgamma(aa + ab + pr.alpha) -
                 std::lgamma(aa + pr.alpha) - std::lgamma(ab + pr.alpha) -
                 std::lgamma(N + pr.alpha * (K - 1)) + std::lgamma(N + pr.alpha * K);

  const std::int64_t m = stats.node_cluster_size(k_a) + stats.node_cluster_size(k_b);
  for (int d = 0; d < D; ++d) {
    const auto cd = static_cast<std::int64_t>(stats.interval_cluster_size(d));
    delta += log_block_likelihood(
                 stats.S(k_a, k_a, d) + stats.S(k_a, k_b, d) + stats.S(k_b, k_a, d) +
                     stats.S(k_b, k_b, d),
                 stats.logP(k_a, k_a, d) + stats.logP(k_a, k_b, d) +
                     stats.logP(k_b, k_a, d) + stats.logP(k_b, k_b, d),
                 m * (m - 1) * cd, pr) -
             stats.logL(k_a, k_a, d) - stats.logL(k_a, k_b, d) -
             stats.logL(k_b, k_a, d) - stats.logL(k_b, k_b, d);
    for (int g = 0; g < K; ++g) {
      if (g == k_a || g == k_b) continue;
      const auto sg = static_cast<std::int64_t>(stats.node_cluster_size(g));
      delta += log_block_likelihood(stats.S(k_a, g, d) + stats.S(k_b, g, d),
                                    stats.logP(k_a, g, d) + stats.logP(k_b, g, d),
                                    m * sg * cd, pr) -
               stats.logL(k_a, g, d) - stats.logL(k_b, g, d);
      delta += log_block_likelihood(stats.S(g, k_a, d) + stats.S(g, k_b, d),
                                    stats.logP(g, k_a, d) + stats.logP(g, k_b, d),
                                    sg * m * cd, pr) -
               stats.logL(g, k_a, d) - stats.logL(g, k_b, d);
    }
  }
  return delta;
}

}  // namespace tsbm
