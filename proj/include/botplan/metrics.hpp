#pragma once

#include <cstdint>
#include <vector>

#include "botplan/catalog.hpp"
#include "botplan/money.hpp"
#include "botplan/plan.hpp"

namespace botplan {

/// VM counts per catalog position. Positional so that every iteration over
/// it naturally runs in catalog order.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::size_t num_types) : counts_(num_types, 0) {}

  static Allocation single(std::size_t num_types, std::size_t type_index,
                           std::int64_t vm_count);

  std::size_t num_types() const { return counts_.size(); }
  std::int64_t count(std::size_t type_index) const { return counts_.at(type_index); }
  void set_count(std::size_t type_index, std::int64_t vm_count);
  void add(std::size_t type_index, std::int64_t delta);

  std::int64_t total_vms() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<std::int64_t> counts_;
};

/// What a finished plan costs and how long it runs.
struct PlanMetrics {
  double makespan_seconds = 0.0;
  Money billed_cost;
  std::int64_t total_tasks = 0;
};

/// Wall-clock seconds a VM needs for its tasks: count * seconds_per_task
/// plus the startup overhead. Zero tasks means the VM never starts.
double vm_exec_time(std::int64_t task_count, const InstanceType& type,
                    double startup_seconds);

/// Billed hours for an execution time: each begun hour is paid in full.
std::int64_t billed_hours(double exec_seconds);

/// Price of one VM that runs for exec_seconds.
Money vm_cost(double exec_seconds, const InstanceType& type);

/// Longest VM execution, total price and task total of a plan. VMs with
/// zero tasks contribute nothing. Unknown type names raise ValidationError.
PlanMetrics plan_metrics(const ExecutionPlan& plan, const Catalog& catalog);

/// Whole tasks one VM of the type finishes within the window, after paying
/// the startup overhead once. Zero when the window is not longer than the
/// startup.
std::int64_t horizon_capacity(const InstanceType& type, double horizon_seconds,
                              double startup_seconds);

/// Tasks the whole allocation finishes within the window.
std::int64_t allocation_throughput(const Allocation& alloc, const Catalog& catalog,
                                   double horizon_seconds);

/// Price of renting the whole allocation for the window, every begun hour
/// billed per VM.
Money allocation_cost(const Allocation& alloc, const Catalog& catalog,
                      double horizon_seconds);

}  // namespace botplan
