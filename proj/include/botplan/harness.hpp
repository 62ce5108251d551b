#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "botplan/catalog.hpp"
#include "botplan/constraint.hpp"
#include "botplan/metrics.hpp"
#include "botplan/optimizer.hpp"
#include "botplan/plan.hpp"

namespace botplan {

/// Everything one planning run produced: the allocation, the task layout,
/// honest measurements of the result, and any constraint trouble found.
struct PlanReport {
  Allocation allocation;
  ExecutionPlan plan;
  PlanMetrics metrics;
  /// Tasks the allocation finishes within the constraint's horizon.
  std::int64_t model_throughput = 0;
  /// Price of renting the allocation for the whole horizon.
  Money model_cost;
  /// Only set by the multi-type pipeline.
  std::optional<OptimizeStats> optimize_stats;
  /// Human-readable constraint violations; empty means the plan honours
  /// the constraint.
  std::vector<std::string> warnings;
};

/// Seed only: the best single-instance-type plan.
PlanReport plan_single(const Catalog& catalog, const Constraint& constraint,
                       std::int64_t n_tasks, const OptimizeOptions& options = {});

/// Seed plus replacement refinement: the multi-type plan.
PlanReport plan_multi(const Catalog& catalog, const Constraint& constraint,
                      std::int64_t n_tasks, const OptimizeOptions& options = {});

/// One sweep measurement. An infeasible constraint keeps its row: numeric
/// fields stay zero, ratio stays zero and the warning says why.
struct SweepRow {
  int scenario_id = 0;
  Constraint constraint = Constraint::budget(Money::zero());
  bool feasible = false;
  Money single_cost;
  double single_makespan = 0.0;
  Money multi_cost;
  double multi_makespan = 0.0;
  /// single / multi on the constrained mode's objective: makespans under a
  /// budget, billed costs under a deadline. 1.0 means refinement changed
  /// nothing; above 1.0 it helped.
  double ratio = 0.0;
  std::vector<std::string> warnings;
};

/// Runs both pipelines over every constraint in the grid, in grid order.
std::vector<SweepRow> sweep(const Catalog& catalog, int scenario_id,
                            std::span<const Constraint> grid, std::int64_t n_tasks,
                            const OptimizeOptions& options = {});

/// The ten standard deadlines: 600 to 3600 seconds.
std::vector<Constraint> default_deadline_grid();

/// Ten budgets scaled to the catalog: whole units when the priciest type
/// costs at least one unit per hour, fractional steps otherwise.
std::vector<Constraint> default_budget_grid(const Catalog& catalog);

/// CSV with one line per row; exact decimals for money, six significant
/// digits for durations and ratios, warnings joined with ';'.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace botplan
