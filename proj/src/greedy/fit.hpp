#pragma once

#include <cstdint>
#include <vector>

#include "core/partition.hpp"
#include "core/priors.hpp"
#include "core/rng.hpp"
#include "core/suffstats.hpp"
#include "core/tensor.hpp"
#include "icl/icl.hpp"

namespace tsbm {

enum class Strategy { A, B, C };
enum class InitMethod { singletons, random, hierarchical };
enum class MoveTarget { nodes, intervals, mixed };

struct FitConfig {
  Strategy strategy = Strategy::A;
  InitMethod init = InitMethod::hierarchical;
  int k_max = 0;  // 0 = ceil(N / 2)
  int d_max = 0;  // 0 = ceil(U / 2)
  int restarts = 1;
  std::uint64_t seed = 0;
  double min_improvement = 1e-10;
  int jobs = 1;
  // fresh element order every sweep; false reuses one shuffle per pass
  bool reshuffle_each_sweep = true;
  // loop GE/GM inside a phase until neither accepts; false runs each once
  bool repeat_exchange_after_merge = true;
};

struct TraceEntry {
  Move move;
  double delta = 0.0;
  double icl_after = 0.0;
};

struct FitResult {
  Partition partition;
  IclValue icl;
  Strategy strategy = Strategy::A;
  int restart_index = 0;
  std::vector<TraceEntry> trace;
  std::vector<double> restart_icls;
};

// Search state for one run: the tensor is shared and immutable, everything
// else is owned and mutated move by move.
class FitState {
 public:
  FitState(const InteractionTensor& tensor, Partition partition, const Priors& priors,
           int k_max, int d_max, Rng rng, double min_improvement,
           bool reshuffle_each_sweep);

  const Partition& partition() const { return partition_; }
  const SuffStats& stats() const { return stats_; }
  double icl() const { return icl_; }
  const std::vector<TraceEntry>& trace() const { return trace_; }
  std::vector<TraceEntry> take_trace() { return std::move(trace_); }
  Partition take_partition() { return std::move(partition_); }

  // Greedy-exchange pass: sweeps the shuffled elements, committing each
  // element's best strictly-improving move (singleton sources commit as
  // merges), until a sweep accepts nothing. Returns accepted moves.
  int ge_pass(MoveTarget target);
  // Greedy-merge pass: repeatedly commits the single best improving merge
  // among all live pairs. Returns accepted merges.
  int gm_pass(MoveTarget target);

 private:
  bool try_exchange_node(int node);
  bool try_exchange_interval(int u);
  void commit(const Move& move, double delta);

  const InteractionTensor* tensor_;
  Partition partition_;
  SuffStats stats_;
  double icl_ = 0.0;
  double min_improvement_;
  bool reshuffle_each_sweep_;
  Rng rng_;
  std::vector<TraceEntry> trace_;
};

int resolve_k_max(const FitConfig& config, int n_nodes);
int resolve_d_max(const FitConfig& config, int n_intervals);

// Initial labeling per config.init; random draws come from `rng`.
Partition init_partition(const InteractionTensor& tensor, const FitConfig& config, Rng& rng);

// One greedy search from one seed, following the configured phase strategy:
// A = interval phase then node phase, B the reverse, C one mixed phase. Each
// phase loops GE / GM to a joint fixed point.
FitResult run_strategy(const InteractionTensor& tensor, const FitConfig& config,
                       const Priors& priors, std::uint64_t seed, int restart_index = 0);

// Best of `config.restarts` independent runs (derived seeds, optionally run
// on config.jobs threads; the outcome does not depend on scheduling).
FitResult fit(const InteractionTensor& tensor, const FitConfig& config,
              const Priors& priors = {});

}  // namespace tsbm
