#include "greedy/fit.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "greedy/linkage.hpp"

namespace tsbm {

int resolve_k_max(const FitConfig& config, int n_nodes) {
  int k = config.k_max;
  if (k == 0) k = (n_nodes + 1) / 2;
  if (k < 1 || k > n_nodes)
    throw std::invalid_argument("k_max must lie in [1, n_nodes]");
  return k;
}

int resolve_d_max(const FitConfig& config, int n_intervals) {
  int d = config.d_max;
  if (d == 0) d = (n_intervals + 1) / 2;
  if (d < 1 || d > n_intervals)
    throw std::invalid_argument("d_max must lie in [1, n_intervals]");
  return d;
}

Partition init_partition(const InteractionTensor& tensor, const FitConfig& config, Rng& rng) {
  const int n = tensor.n_nodes();
  const int u = tensor.n_intervals();
  const int k_max = resolve_k_max(config, n);
  const int d_max = resolve_d_max(config, u);

  Partition p;
  p.node_labels.resize(static_cast<std::size_t>(n));
  p.interval_labels.resize(static_cast<std::size_t>(u));

  switch (config.init) {
    case InitMethod::singletons:
      for (int i = 0; i < n; ++i)
        p.node_labels[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i % k_max);
      for (int t = 0; t < u; ++t)
        p.interval_labels[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(t % d_max);
      p.K = std::min(k_max, n);
      p.D = std::min(d_max, u);
      break;
    case InitMethod::random:
      for (auto& c : p.node_labels)
        c = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(k_max)));
      for (auto& y : p.interval_labels)
        y = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(d_max)));
      // unused label values would leave empty clusters; compact them away
      p.K = compact_labels(p.node_labels);
      p.D = compact_labels(p.interval_labels);
      break;
    case InitMethod::hierarchical:
      p.node_labels = average_linkage_labels(node_features(tensor), k_max);
      p.interval_labels = average_linkage_labels(interval_features(tensor), d_max);
      p.K = p.node_labels.empty()
                ? 0
                : 1 + *std::max_element(p.node_labels.begin(), p.node_labels.end());
      p.D = p.interval_labels.empty()
                ? 0
                : 1 + *std::max_element(p.interval_labels.begin(), p.interval_labels.end());
      break;
  }
  p.validate();
  return p;
}

FitState::FitState(const InteractionTensor& tensor, Partition partition, const Priors& priors,
                   int k_max, int d_max, Rng rng, double min_improvement,
                   bool reshuffle_each_sweep)
    : tensor_(&tensor),
      partition_(std::move(partition)),
      stats_(tensor, partition_, priors, k_max, d_max),
      min_improvement_(min_improvement),
      reshuffle_each_sweep_(reshuffle_each_sweep),
      rng_(std::move(rng)) {
  if (min_improvement_ < 0.0) throw std::invalid_argument("min_improvement must be >= 0");
  icl_ = icl_full(stats_, partition_).value;
}

void FitState::commit(const Move& move, double delta) {
  apply_move(stats_, partition_, *tensor_, move);
  icl_ += delta;
  trace_.push_back({move, delta, icl_});
}

bool FitState::try_exchange_node(int node) {
  const int K = partition_.K;
  if (K < 2) return false;
  const int src = partition_.node_labels[static_cast<std::size_t>(node)];
  const bool singleton = stats_.node_cluster_size(src) == 1;
  double best_delta = -std::numeric_limits<double>::infinity();
  int best_dst = -1;
  for (int dst = 0; dst < K; ++dst) {
    if (dst == src) continue;
    const double delta = singleton ? delta_merge_node(stats_, partition_, src, dst)
                                   : delta_exchange_node(stats_, partition_, node, src, dst);
    if (delta > best_delta) {
      best_delta = delta;
      best_dst = dst;
    }
  }
  if (best_dst < 0 || !(best_delta > min_improvement_)) return false;
  const Move move = singleton
                        ? Move{Move::Kind::node_merge, -1, src, best_dst}
                        : Move{Move::Kind::node_exchange, node, src, best_dst};
  commit(move, best_delta);
  return true;
}

bool FitState::try_exchange_interval(int u) {
  const int D = partition_.D;
  if (D < 2) return false;
  const int src = partition_.interval_labels[static_cast<std::size_t>(u)];
  const bool singleton = stats_.interval_cluster_size(src) == 1;
  double best_delta = -std::numeric_limits<double>::infinity();
  int best_dst = -1;
  for (int dst = 0; dst < D; ++dst) {
    if (dst == src) continue;
    const double delta = singleton
                             ? delta_merge_interval(stats_, partition_, src, dst)
                             : delta_exchange_interval(stats_, partition_, u, src, dst);
    if (delta > best_delta) {
      best_delta = delta;
      best_dst = dst;
    }
  }
  if (best_dst < 0 || !(best_delta > min_improvement_)) return false;
  const Move move = singleton
                        ? Move{Move::Kind::interval_merge, -1, src, best_dst}
                        : Move{Move::Kind::interval_exchange, u, src, best_dst};
  commit(move, best_delta);
  return true;
}

int FitState::ge_pass(MoveTarget target) {
  const bool use_nodes = target != MoveTarget::intervals;
  const bool use_intervals = target != MoveTarget::nodes;
  std::vector<std::int32_t> nodes, intervals;
  if (use_nodes) {
    nodes.resize(static_cast<std::size_t>(partition_.n_nodes()));
    std::iota(nodes.begin(), nodes.end(), 0);
  }
  if (use_intervals) {
    intervals.resize(static_cast<std::size_t>(partition_.n_intervals()));
    std::iota(intervals.begin(), intervals.end(), 0);
  }

  int total = 0;
  bool shuffled = false;
  long sweeps = 0;
  while (true) {
    if (reshuffle_each_sweep_ || !shuffled) {
      rng_.shuffle(nodes);
      rng_.shuffle(intervals);
      shuffled = true;
    }
    int accepted = 0;
    if (target == MoveTarget::mixed) {
      const std::size_t longest = std::max(nodes.size(), intervals.size());
      for (std::size_t idx = 0; idx < longest; ++idx) {
        if (idx < nodes.size()) accepted += try_exchange_node(nodes[idx]);
        if (idx < intervals.size()) accepted += try_exchange_interval(intervals[idx]);
      }
    } else if (target == MoveTarget::nodes) {
      for (std::int32_t node : nodes) accepted += try_exchange_node(node);
    } else {
      for (std::int32_t u : intervals) accepted += try_exchange_interval(u);
    }
    total += accepted;
    if (accepted == 0) break;
    if (++sweeps > 1000000) throw std::logic_error("exchange pass failed to converge");
  }
  return total;
}

int FitState::gm_pass(MoveTarget target) {
  const bool use_nodes = target != MoveTarget::intervals;
  const bool use_intervals = target != MoveTarget::nodes;
  int merges = 0;
  while (true) {
    double best_delta = -std::numeric_limits<double>::infinity();
    Move best{};
    bool found = false;
    if (use_nodes) {
      for (int a = 0; a < partition_.K; ++a)
        for (int b = a + 1; b < partition_.K; ++b) {
          const double delta = delta_merge_node(stats_, partition_, b, a);
          if (!found || delta > best_delta) {
            best_delta = delta;
            best = {Move::Kind::node_merge, -1, b, a};
            found = true;
          }
        }
    }
    if (use_intervals) {
      for (int a = 0; a < partition_.D; ++a)
        for (int b = a + 1; b < partition_.D; ++b) {
          const double delta = delta_merge_interval(stats_, partition_, b, a);
          if (!found || delta > best_delta) {
            best_delta = delta;
            best = {Move::Kind::interval_merge, -1, b, a};
            found = true;
          }
        }
    }
    if (!found || !(best_delta > min_improvement_)) break;
    commit(best, best_delta);
    ++merges;
  }
  return merges;
}

FitResult run_strategy(const InteractionTensor& tensor, const FitConfig& config,
                       const Priors& priors, std::uint64_t seed, int restart_index) {
  const int k_max = resolve_k_max(config, tensor.n_nodes());
  const int d_max = resolve_d_max(config, tensor.n_intervals());
  FitConfig resolved = config;
  resolved.k_max = k_max;
  resolved.d_max = d_max;

  Rng rng(seed);
  Partition init = init_partition(tensor, resolved, rng);
  FitState state(tensor, std::move(init), priors, k_max, d_max, std::move(rng),
                 config.min_improvement, config.reshuffle_each_sweep);

  const auto phase = [&](MoveTarget target) {
    int accepted = 0;
    while (true) {
      accepted += state.ge_pass(target);
      const int merged = state.gm_pass(target);
      accepted += merged;
      if (!config.repeat_exchange_after_merge || merged == 0) break;
    }
    return accepted;
  };
  // A later phase can re-open moves for an earlier one, so the whole phase
  // sequence repeats until a full cycle accepts nothing; only then is the
  // state a local optimum for every move type.
  std::vector<MoveTarget> sequence;
  switch (config.strategy) {
    case Strategy::A:
      sequence = {MoveTarget::intervals, MoveTarget::nodes};
      break;
    case Strategy::B:
      sequence = {MoveTarget::nodes, MoveTarget::intervals};
      break;
    case Strategy::C:
      sequence = {MoveTarget::mixed};
      break;
  }
  long cycles = 0;
  while (true) {
    int cycle_accepted = 0;
    for (const MoveTarget target : sequence) cycle_accepted += phase(target);
    if (cycle_accepted == 0) break;
    if (++cycles > 1000000) throw std::logic_error("strategy loop failed to converge");
  }

  const IclValue final_icl = icl_full(state.stats(), state.partition());
  FitResult result;
  result.icl = final_icl;
  result.strategy = config.strategy;
  result.restart_index = restart_index;
  result.trace = state.take_trace();
  result.partition = state.take_partition();
  result.restart_icls = {final_icl.value};
  return result;
}

FitResult fit(const InteractionTensor& tensor, const FitConfig& config, const Priors& priors) {
  if (config.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  priors.validate();
  const int n_restarts = config.restarts;
  std::vector<std::optional<FitResult>> results(static_cast<std::size_t>(n_restarts));

  const auto run_one = [&](int r) {
    results[static_cast<std::size_t>(r)] =
        run_strategy(tensor, config, priors, derive_seed(config.seed, static_cast<std::uint64_t>(r)), r);
  };

  const int jobs = std::clamp(config.jobs, 1, n_restarts);
  if (jobs <= 1) {
    for (int r = 0; r < n_restarts; ++r) run_one(r);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        while (true) {
          const int r = next.fetch_add(1);
          if (r >= n_restarts) return;
          try {
            run_one(r);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            return;
          }
        }
      });
    for (auto& worker : workers) worker.join();
    if (error) std::rethrow_exception(error);
  }

  int best = 0;
  for (int r = 1; r < n_restarts; ++r)
    if (results[static_cast<std::size_t>(r)]->icl.value >
        results[static_cast<std::size_t>(best)]->icl.value)
      best = r;

  FitResult out = std::move(*results[static_cast<std::size_t>(best)]);
  out.restart_icls.clear();
  out.restart_icls.reserve(static_cast<std::size_t>(n_restarts));
  for (int r = 0; r < n_restarts; ++r)
    out.restart_icls.push_back(results[static_cast<std::size_t>(r)]->icl.value);
  return out;
}

}  // namespace tsbm
