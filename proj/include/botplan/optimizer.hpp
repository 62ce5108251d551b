#pragma once

#include <cstdint>
#include <vector>

#include "botplan/catalog.hpp"
#include "botplan/constraint.hpp"
#include "botplan/metrics.hpp"
#include "botplan/money.hpp"
#include "botplan/seeder.hpp"

namespace botplan {

struct OptimizeOptions {
  /// Budget mode only: also accept replacements that leave the model
  /// throughput unchanged. Off by default because such swaps never help the
  /// objective; the round cap still guarantees termination when enabled.
  bool nonstrict_improvement = false;
};

/// One accepted replacement, recorded for audits and tests.
struct OptimizeStep {
  std::int64_t round = 0;
  std::size_t candidate_index = 0;
  std::int64_t removed_seed_vms = 0;
  std::int64_t added_vms = 0;
  std::int64_t throughput_after = 0;
  Money model_cost_after;
  Money remaining_budget_after;
};

struct OptimizeStats {
  std::int64_t rounds = 0;
  std::int64_t accepted = 0;
  std::int64_t round_cap = 0;
  /// Defensive stop only; never expected to trigger.
  bool cap_hit = false;
};

struct OptimizeResult {
  Allocation allocation;
  OptimizeStats stats;
  std::vector<OptimizeStep> steps;
};

/// Refines a single-type seed by repeatedly trading seed-type VMs for VMs
/// of another type. Each round sizes one candidate purchase from the
/// remaining budget plus the value of the seed VMs it gives up, keeps the
/// best admissible candidate, and widens the trade on failure. Budget mode
/// only accepts a higher model throughput within the budget; deadline mode
/// only accepts a cheaper allocation that still finishes n_tasks in time.
/// The result is never worse than the seed.
OptimizeResult optimize(const Catalog& catalog, const SeedResult& seed,
                        const Constraint& constraint, std::int64_t n_tasks,
                        const OptimizeOptions& options = {});

}  // namespace botplan
