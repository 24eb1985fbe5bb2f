#include "core/suffstats.hpp"

#include <stdexcept>
#include <string>

#include "core/logutil.hpp"
#include "icl/block_likelihood.hpp"

namespace tsbm {

SuffStats::SuffStats(const InteractionTensor& tensor, const Partition& partition,
                     const Priors& priors, int k_max, int d_max)
    : k_max_(k_max),
      d_max_(d_max),
      n_nodes_(tensor.n_nodes()),
      n_intervals_(tensor.n_intervals()),
      priors_(priors) {
  priors_.validate();
  partition.validate();
  if (partition.n_nodes() != n_nodes_ || partition.n_intervals() != n_intervals_)
    throw std::invalid_argument("partition does not match tensor dimensions");
  if (k_max_ < partition.K || d_max_ < partition.D)
    throw std::invalid_argument("k_max/d_max smaller than live cluster counts");
  if (k_max_ < 1 || d_max_ < 1) throw std::invalid_argument("k_max/d_max must be positive");

  const auto kk = static_cast<std::size_t>(k_max_);
  const auto dd = static_cast<std::size_t>(d_max_);
  const auto nn = static_cast<std::size_t>(n_nodes_);
  const auto uu = static_cast<std::size_t>(n_intervals_);
  s_.assign(kk * kk * dd, 0);
  r_.assign(kk * kk * dd, 0);
  logp_.assign(kk * kk * dd, 0.0);
  logl_.assign(kk * kk * dd, 0.0);
  s_time_.assign(kk * kk * uu, 0);
  logp_time_.assign(kk * kk * uu, 0.0);
  s_out_.assign(nn * kk * dd, 0);
  s_in_.assign(nn * kk * dd, 0);
  logp_out_.assign(nn * kk * dd, 0.0);
  logp_in_.assign(nn * kk * dd, 0.0);
  node_size_.assign(kk, 0);
  interval_size_.assign(dd, 0);

  for (std::int32_t c : partition.node_labels) ++node_size_[static_cast<std::size_t>(c)];
  for (std::int32_t c : partition.interval_labels)
    ++interval_size_[static_cast<std::size_t>(c)];

  for (const EdgeRecord& cell : tensor.cells()) {
    const int k = partition.node_labels[static_cast<std::size_t>(cell.i)];
    const int g = partition.node_labels[static_cast<std::size_t>(cell.j)];
    const int d = partition.interval_labels[static_cast<std::size_t>(cell.u)];
    const double lf = log_factorial(cell.count);
    s_[block_index(k, g, d)] += cell.count;
    logp_[block_index(k, g, d)] += lf;
    s_time_[time_index(k, g, cell.u)] += cell.count;
    logp_time_[time_index(k, g, cell.u)] += lf;
    s_out_[node_index(cell.i, g, d)] += cell.count;
    logp_out_[node_index(cell.i, g, d)] += lf;
    s_in_[node_index(cell.j, k, d)] += cell.count;
    logp_in_[node_index(cell.j, k, d)] += lf;
  }

  for (int k = 0; k < partition.K; ++k)
    for (int g = 0; g < partition.K; ++g)
      for (int d = 0; d < partition.D; ++d) refresh_block(k, g, d);
}

void SuffStats::refresh_block(int k, int g, int d) {
  const std::size_t b = block_index(k, g, d);
  r_[b] = pair_cells(k, g) * static_cast<std::int64_t>(interval_size_[static_cast<std::size_t>(d)]);
  logl_[b] = log_block_likelihood(s_[b], logp_[b], r_[b], priors_);
}

void SuffStats::refresh_interval_slice(int live_k, int d) {
  for (int k = 0; k < live_k; ++k)
    for (int g = 0; g < live_k; ++g) refresh_block(k, g, d);
}

void SuffStats::refresh_node_row_col(int live_k, int live_d, int k) {
  for (int g = 0; g < live_k; ++g)
    for (int d = 0; d < live_d; ++d) {
      refresh_block(k, g, d);
      refresh_block(g, k, d);
    }
}

void SuffStats::move_interval(const InteractionTensor& tensor, Partition& p, int u, int dst) {
  if (u < 0 || u >= n_intervals_) throw std::invalid_argument("interval index out of range");
  const int src = p.interval_labels[static_cast<std::size_t>(u)];
  if (dst < 0 || dst >= p.D) throw std::invalid_argument("destination interval cluster is not live");
  if (dst == src) throw std::invalid_argument("exchange with source = destination");
  const int K = p.K;

  for (int k = 0; k < K; ++k)
    for (int g = 0; g < K; ++g) {
      const std::int64_t su = s_time_[time_index(k, g, u)];
      const double lpu = logp_time_[time_index(k, g, u)];
      s_[block_index(k, g, src)] -= su;
      s_[block_index(k, g, dst)] += su;
      logp_[block_index(k, g, src)] -= lpu;
      logp_[block_index(k, g, dst)] += lpu;
    }
  --interval_size_[static_cast<std::size_t>(src)];
  ++interval_size_[static_cast<std::size_t>(dst)];
  refresh_interval_slice(K, src);
  refresh_interval_slice(K, dst);

  for (const auto& cell : tensor.interval_cells(u)) {
    const int ki = p.node_labels[static_cast<std::size_t>(cell.i)];
    const int gj = p.node_labels[static_cast<std::size_t>(cell.j)];
    const double lf = log_factorial(cell.count);
    s_out_[node_index(cell.i, gj, src)] -= cell.count;
    s_out_[node_index(cell.i, gj, dst)] += cell.count;
    logp_out_[node_index(cell.i, gj, src)] -= lf;
    logp_out_[node_index(cell.i, gj, dst)] += lf;
    s_in_[node_index(cell.j, ki, src)] -= cell.count;
    s_in_[node_index(cell.j, ki, dst)] += cell.count;
    logp_in_[node_index(cell.j, ki, src)] -= lf;
    logp_in_[node_index(cell.j, ki, dst)] += lf;
  }

  p.interval_labels[static_cast<std::size_t>(u)] = dst;
  if (interval_size_[static_cast<std::size_t>(src)] == 0) {
    zero_interval_cluster(src);
    remove_interval_cluster(p, src);
  }
}

void SuffStats::move_node(const InteractionTensor& tensor, Partition& p, int node, int dst) {
  if (node < 0 || node >= n_nodes_) throw std::invalid_argument("node index out of range");
  const int src = p.node_labels[static_cast<std::size_t>(node)];
  if (dst < 0 || dst >= p.K) throw std::invalid_argument("destination node cluster is not live");
  if (dst == src) throw std::invalid_argument("exchange with source = destination");
  const int K = p.K, D = p.D;

  // Block adjustments follow from the mover's in/out marginals: rows src and
  // dst change by outgoing counts, columns by incoming ones, and the four
  // intersection blocks combine both directions.
  for (int d = 0; d < D; ++d) {
    const std::int64_t o_src = S_out(node, src, d), o_dst = S_out(node, dst, d);
    const std::int64_t i_src = S_in(node, src, d), i_dst = S_in(node, dst, d);
    const double lo_src = logP_out(node, src, d), lo_dst = logP_out(node, dst, d);
    const double li_src = logP_in(node, src, d), li_dst = logP_in(node, dst, d);
    for (int g = 0; g < K; ++g) {
      if (g == src || g == dst) continue;
      const std::int64_t og = S_out(node, g, d), ig = S_in(node, g, d);
      const double logp_og = logP_out(node, g, d), logp_ig = logP_in(node, g, d);
      s_[block_index(src, g, d)] -= og;
      s_[block_index(dst, g, d)] += og;
      logp_[block_index(src, g, d)] -= logp_og;
      logp_[block_index(dst, g, d)] += logp_og;
      s_[block_index(g, src, d)] -= ig;
      s_[block_index(g, dst, d)] += ig;
      logp_[block_index(g, src, d)] -= logp_ig;
      logp_[block_index(g, dst, d)] += logp_ig;
    }
    s_[block_index(src, src, d)] -= o_src + i_src;
    logp_[block_index(src, src, d)] -= lo_src + li_src;
    s_[block_index(src, dst, d)] += i_src - o_dst;
    logp_[block_index(src, dst, d)] += li_src - lo_dst;
    s_[block_index(dst, src, d)] += o_src - i_dst;
    logp_[block_index(dst, src, d)] += lo_src - li_dst;
    s_[block_index(dst, dst, d)] += o_dst + i_dst;
    logp_[block_index(dst, dst, d)] += lo_dst + li_dst;
  }

  --node_size_[static_cast<std::size_t>(src)];
  ++node_size_[static_cast<std::size_t>(dst)];
  refresh_node_row_col(K, D, src);
  refresh_node_row_col(K, D, dst);

  for (const auto& cell : tensor.out_cells(node)) {
    const int gj = p.node_labels[static_cast<std::size_t>(cell.other)];
    const double lf = log_factorial(cell.count);
    s_time_[time_index(src, gj, cell.u)] -= cell.count;
    s_time_[time_index(dst, gj, cell.u)] += cell.count;
    logp_time_[time_index(src, gj, cell.u)] -= lf;
    logp_time_[time_index(dst, gj, cell.u)] += lf;
    const int d = p.interval_labels[static_cast<std::size_t>(cell.u)];
    s_in_[node_index(cell.other, src, d)] -= cell.count;
    s_in_[node_index(cell.other, dst, d)] += cell.count;
    logp_in_[node_index(cell.other, src, d)] -= lf;
    logp_in_[node_index(cell.other, dst, d)] += lf;
  }
  for (const auto& cell : tensor.in_cells(node)) {
    const int gj = p.node_labels[static_cast<std::size_t>(cell.other)];
    const double lf = log_factorial(cell.count);
    s_time_[time_index(gj, src, cell.u)] -= cell.count;
    s_time_[time_index(gj, dst, cell.u)] += cell.count;
    logp_time_[time_index(gj, src, cell.u)] -= lf;
    logp_time_[time_index(gj, dst, cell.u)] += lf;
    const int d = p.interval_labels[static_cast<std::size_t>(cell.u)];
    s_out_[node_index(cell.other, src, d)] -= cell.count;
    s_out_[node_index(cell.other, dst, d)] += cell.count;
    logp_out_[node_index(cell.other, src, d)] -= lf;
    logp_out_[node_index(cell.other, dst, d)] += lf;
  }

  p.node_labels[static_cast<std::size_t>(node)] = dst;
  if (node_size_[static_cast<std::size_t>(src)] == 0) {
    zero_node_cluster(src);
    remove_node_cluster(p, src);
  }
}

void SuffStats::merge_interval_clusters(const InteractionTensor&, Partition& p,
                                        int src, int dst) {
  if (src < 0 || src >= p.D || dst < 0 || dst >= p.D)
    throw std::invalid_argument("merge references a dead interval cluster");
  if (src == dst) throw std::invalid_argument("merge with identical clusters");
  const int K = p.K;

  for (int k = 0; k < K; ++k)
    for (int g = 0; g < K; ++g) {
      s_[block_index(k, g, dst)] += s_[block_index(k, g, src)];
      logp_[block_index(k, g, dst)] += logp_[block_index(k, g, src)];
      s_[block_index(k, g, src)] = 0;
      logp_[block_index(k, g, src)] = 0.0;
    }
  interval_size_[static_cast<std::size_t>(dst)] += interval_size_[static_cast<std::size_t>(src)];
  interval_size_[static_cast<std::size_t>(src)] = 0;
  refresh_interval_slice(K, dst);

  for (int i = 0; i < n_nodes_; ++i)
    for (int g = 0; g < K; ++g) {
      s_out_[node_index(i, g, dst)] += s_out_[node_index(i, g, src)];
      logp_out_[node_index(i, g, dst)] += logp_out_[node_index(i, g, src)];
      s_in_[node_index(i, g, dst)] += s_in_[node_index(i, g, src)];
      logp_in_[node_index(i, g, dst)] += logp_in_[node_index(i, g, src)];
      s_out_[node_index(i, g, src)] = 0;
      logp_out_[node_index(i, g, src)] = 0.0;
      s_in_[node_index(i, g, src)] = 0;
      logp_in_[node_index(i, g, src)] = 0.0;
    }

  for (std::int32_t& y : p.interval_labels)
    if (y == src) y = dst;
  zero_interval_cluster(src);
  remove_interval_cluster(p, src);
}

void SuffStats::merge_node_clusters(const InteractionTensor&, Partition& p,
                                    int src, int dst) {
  if (src < 0 || src >= p.K || dst < 0 || dst >= p.K)
    throw std::invalid_argument("merge references a dead node cluster");
  if (src == dst) throw std::invalid_argument("merge with identical clusters");
  const int K = p.K, D = p.D;

  for (int d = 0; d < D; ++d) {
    s_[block_index(dst, dst, d)] += s_[block_index(src, src, d)] +
                                    s_[block_index(src, dst, d)] +
                                    s_[block_index(dst, src, d)];
    logp_[block_index(dst, dst, d)] += logp_[block_index(src, src, d)] +
                                       logp_[block_index(src, dst, d)] +
                                       logp_[block_index(dst, src, d)];
    s_[block_index(src, src, d)] = 0;
    s_[block_index(src, dst, d)] = 0;
    s_[block_index(dst, src, d)] = 0;
    logp_[block_index(src, src, d)] = 0.0;
    logp_[block_index(src, dst, d)] = 0.0;
    logp_[block_index(dst, src, d)] = 0.0;
    for (int g = 0; g < K; ++g) {
      if (g == src || g == dst) continue;
      s_[block_index(dst, g, d)] += s_[block_index(src, g, d)];
      logp_[block_index(dst, g, d)] += logp_[block_index(src, g, d)];
      s_[block_index(src, g, d)] = 0;
      logp_[block_index(src, g, d)] = 0.0;
      s_[block_index(g, dst, d)] += s_[block_index(g, src, d)];
      logp_[block_index(g, dst, d)] += logp_[block_index(g, src, d)];
      s_[block_index(g, src, d)] = 0;
      logp_[block_index(g, src, d)] = 0.0;
    }
  }
  node_size_[static_cast<std::size_t>(dst)] += node_size_[static_cast<std::size_t>(src)];
  node_size_[static_cast<std::size_t>(src)] = 0;
  refresh_node_row_col(K, D, dst);

  for (int u = 0; u < n_intervals_; ++u) {
    s_time_[time_index(dst, dst, u)] += s_time_[time_index(src, src, u)] +
                                        s_time_[time_index(src, dst, u)] +
                                        s_time_[time_index(dst, src, u)];
    logp_time_[time_index(dst, dst, u)] += logp_time_[time_index(src, src, u)] +
                                           logp_time_[time_index(src, dst, u)] +
                                           logp_time_[time_index(dst, src, u)];
    s_time_[time_index(src, src, u)] = 0;
    s_time_[time_index(src, dst, u)] = 0;
    s_time_[time_index(dst, src, u)] = 0;
    logp_time_[time_index(src, src, u)] = 0.0;
    logp_time_[time_index(src, dst, u)] = 0.0;
    logp_time_[time_index(dst, src, u)] = 0.0;
    for (int g = 0; g < K; ++g) {
      if (g == src || g == dst) continue;
      s_time_[time_index(dst, g, u)] += s_time_[time_index(src, g, u)];
      logp_time_[time_index(dst, g, u)] += logp_time_[time_index(src, g, u)];
      s_time_[time_index(src, g, u)] = 0;
      logp_time_[time_index(src, g, u)] = 0.0;
      s_time_[time_index(g, dst, u)] += s_time_[time_index(g, src, u)];
      logp_time_[time_index(g, dst, u)] += logp_time_[time_index(g, src, u)];
      s_time_[time_index(g, src, u)] = 0;
      logp_time_[time_index(g, src, u)] = 0.0;
    }
  }

  for (int i = 0; i < n_nodes_; ++i)
    for (int d = 0; d < D; ++d) {
      s_out_[node_index(i, dst, d)] += s_out_[node_index(i, src, d)];
      logp_out_[node_index(i, dst, d)] += logp_out_[node_index(i, src, d)];
      s_in_[node_index(i, dst, d)] += s_in_[node_index(i, src, d)];
      logp_in_[node_index(i, dst, d)] += logp_in_[node_index(i, src, d)];
      s_out_[node_index(i, src, d)] = 0;
      logp_out_[node_index(i, src, d)] = 0.0;
      s_in_[node_index(i, src, d)] = 0;
      logp_in_[node_index(i, src, d)] = 0.0;
    }

  for (std::int32_t& c : p.node_labels)
    if (c == src) c = dst;
  zero_node_cluster(src);
  remove_node_cluster(p, src);
}

void SuffStats::zero_interval_cluster(int d) {
  for (int k = 0; k < k_max_; ++k)
    for (int g = 0; g < k_max_; ++g) {
      const std::size_t b = block_index(k, g, d);
      s_[b] = 0;
      logp_[b] = 0.0;
      r_[b] = 0;
      logl_[b] = 0.0;
    }
  for (int i = 0; i < n_nodes_; ++i)
    for (int g = 0; g < k_max_; ++g) {
      const std::size_t m = node_index(i, g, d);
      s_out_[m] = 0;
      logp_out_[m] = 0.0;
      s_in_[m] = 0;
      logp_in_[m] = 0.0;
    }
  interval_size_[static_cast<std::size_t>(d)] = 0;
}

void SuffStats::zero_node_cluster(int k) {
  for (int g = 0; g < k_max_; ++g)
    for (int d = 0; d < d_max_; ++d) {
      for (const std::size_t b : {block_index(k, g, d), block_index(g, k, d)}) {
        s_[b] = 0;
        logp_[b] = 0.0;
        r_[b] = 0;
        logl_[b] = 0.0;
      }
    }
  for (int g = 0; g < k_max_; ++g)
    for (int u = 0; u < n_intervals_; ++u) {
      for (const std::size_t b : {time_index(k, g, u), time_index(g, k, u)}) {
        s_time_[b] = 0;
        logp_time_[b] = 0.0;
      }
    }
  for (int i = 0; i < n_nodes_; ++i)
    for (int d = 0; d < d_max_; ++d) {
      const std::size_t m = node_index(i, k, d);
      s_out_[m] = 0;
      logp_out_[m] = 0.0;
      s_in_[m] = 0;
      logp_in_[m] = 0.0;
    }
  node_size_[static_cast<std::size_t>(k)] = 0;
}

// The vacated id is filled by the last live cluster (swap-remove), keeping
// ids contiguous at O(affected blocks) cost.
void SuffStats::remove_interval_cluster(Partition& p, int dead) {
  const int last = p.D - 1;
  if (dead != last) {
    for (int k = 0; k < k_max_; ++k)
      for (int g = 0; g < k_max_; ++g) {
        const std::size_t from = block_index(k, g, last);
        const std::size_t to = block_index(k, g, dead);
        s_[to] = s_[from];
        logp_[to] = logp_[from];
        r_[to] = r_[from];
        logl_[to] = logl_[from];
        s_[from] = 0;
        logp_[from] = 0.0;
        r_[from] = 0;
        logl_[from] = 0.0;
      }
    for (int i = 0; i < n_nodes_; ++i)
      for (int g = 0; g < k_max_; ++g) {
        const std::size_t from = node_index(i, g, last);
        const std::size_t to = node_index(i, g, dead);
        s_out_[to] = s_out_[from];
        logp_out_[to] = logp_out_[from];
        s_in_[to] = s_in_[from];
        logp_in_[to] = logp_in_[from];
        s_out_[from] = 0;
        logp_out_[from] = 0.0;
        s_in_[from] = 0;
        logp_in_[from] = 0.0;
      }
    interval_size_[static_cast<std::size_t>(dead)] =
        interval_size_[static_cast<std::size_t>(last)];
    interval_size_[static_cast<std::size_t>(last)] = 0;
    for (std::int32_t& y : p.interval_labels)
      if (y == last) y = dead;
  }
  p.D -= 1;
}

void SuffStats::remove_node_cluster(Partition& p, int dead) {
  const int last = p.K - 1;
  if (dead != last) {
    for (int d = 0; d < d_max_; ++d) {
      const std::size_t diag_from = block_index(last, last, d);
      const std::size_t diag_to = block_index(dead, dead, d);
      s_[diag_to] = s_[diag_from];
      logp_[diag_to] = logp_[diag_from];
      r_[diag_to] = r_[diag_from];
      logl_[diag_to] = logl_[diag_from];
      s_[diag_from] = 0;
      logp_[diag_from] = 0.0;
      r_[diag_from] = 0;
      logl_[diag_from] = 0.0;
      for (int g = 0; g < k_max_; ++g) {
        if (g == dead || g == last) continue;
        const std::size_t row_from = block_index(last, g, d);
        const std::size_t row_to = block_index(dead, g, d);
        const std::size_t col_from = block_index(g, last, d);
        const std::size_t col_to = block_index(g, dead, d);
        s_[row_to] = s_[row_from];
        logp_[row_to] = logp_[row_from];
        r_[row_to] = r_[row_from];
        logl_[row_to] = logl_[row_from];
        s_[row_from] = 0;
        logp_[row_from] = 0.0;
        r_[row_from] = 0;
        logl_[row_from] = 0.0;
        s_[col_to] = s_[col_from];
        logp_[col_to] = logp_[col_from];
        r_[col_to] = r_[col_from];
        logl_[col_to] = logl_[col_from];
        s_[col_from] = 0;
        logp_[col_from] = 0.0;
        r_[col_from] = 0;
        logl_[col_from] = 0.0;
      }
    }
    for (int u = 0; u < n_intervals_; ++u) {
      const std::size_t diag_from = time_index(last, last, u);
      const std::size_t diag_to = time_index(dead, dead, u);
      s_time_[diag_to] = s_time_[diag_from];
      logp_time_[diag_to] = logp_time_[diag_from];
      s_time_[diag_from] = 0;
      logp_time_[diag_from] = 0.0;
      for (int g = 0; g < k_max_; ++g) {
        if (g == dead || g == last) continue;
        const std::size_t row_from = time_index(last, g, u);
        const std::size_t row_to = time_index(dead, g, u);
        const std::size_t col_from = time_index(g, last, u);
        const std::size_t col_to = time_index(g, dead, u);
        s_time_[row_to] = s_time_[row_from];
        logp_time_[row_to] = logp_time_[row_from];
        s_time_[row_from] = 0;
        logp_time_[row_from] = 0.0;
        s_time_[col_to] = s_time_[col_from];
        logp_time_[col_to] = logp_time_[col_from];
        s_time_[col_from] = 0;
        logp_time_[col_from] = 0.0;
      }
    }
    for (int i = 0; i < n_nodes_; ++i)
      for (int d = 0; d < d_max_; ++d) {
        const std::size_t from = node_index(i, last, d);
        const std::size_t to = node_index(i, dead, d);
        s_out_[to] = s_out_[from];
        logp_out_[to] = logp_out_[from];
        s_in_[to] = s_in_[from];
        logp_in_[to] = logp_in_[from];
        s_out_[from] = 0;
        logp_out_[from] = 0.0;
        s_in_[from] = 0;
        logp_in_[from] = 0.0;
      }
    node_size_[static_cast<std::size_t>(dead)] = node_size_[static_cast<std::size_t>(last)];
    node_size_[static_cast<std::size_t>(last)] = 0;
    for (std::int32_t& c : p.node_labels)
      if (c == last) c = dead;
  }
  p.K -= 1;
}

void apply_move(SuffStats& stats, Partition& partition, const InteractionTensor& tensor,
                const Move& move) {
  switch (move.kind) {
    case Move::Kind::node_exchange:
      if (move.element < 0 || move.element >= partition.n_nodes() ||
          partition.node_labels[static_cast<std::size_t>(move.element)] != move.src)
        throw std::invalid_argument("node exchange source does not match current label");
      stats.move_node(tensor, partition, move.element, move.dst);
      break;
    case Move::Kind::interval_exchange:
      if (move.element < 0 || move.element >= partition.n_intervals() ||
          partition.interval_labels[static_cast<std::size_t>(move.element)] != move.src)
        throw std::invalid_argument("interval exchange source does not match current label");
      stats.move_interval(tensor, partition, move.element, move.dst);
      break;
    case Move::Kind::node_merge:
      stats.merge_node_clusters(tensor, partition, move.src, move.dst);
      break;
    case Move::Kind::interval_merge:
      stats.merge_interval_clusters(tensor, partition, move.src, move.dst);
      break;
  }
}

}  // namespace tsbm
