#include "botplan/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "botplan/errors.hpp"

namespace botplan {

Allocation Allocation::single(std::size_t num_types, std::size_t type_index,
                              std::int64_t vm_count) {
  Allocation alloc{num_types};
  alloc.set_count(type_index, vm_count);
  return alloc;
}

void Allocation::set_count(std::size_t type_index, std::int64_t vm_count) {
  if (vm_count < 0) throw ValidationError("VM count must not be negative");
  counts_.at(type_index) = vm_count;
}

void Allocation::add(std::size_t type_index, std::int64_t delta) {
  std::int64_t updated = counts_.at(type_index) + delta;
  if (updated < 0) throw ValidationError("VM count must not drop below zero");
  counts_.at(type_index) = updated;
}

std::int64_t Allocation::total_vms() const {
  std::int64_t sum = 0;
  for (std::int64_t c : counts_) sum += c;
  return sum;
}

double vm_exec_time(std::int64_t task_count, const InstanceType& type,
                    double startup_seconds) {
  if (task_count < 0) throw ValidationError("task count must not be negative");
  if (task_count == 0) return 0.0;
  return static_cast<double>(task_count) * type.seconds_per_task + startup_seconds;
}

std::int64_t billed_hours(double exec_seconds) {
  if (!(exec_seconds >= 0.0)) throw ValidationError("execution time must not be negative");
  if (exec_seconds == 0.0) return 0;
  return static_cast<std::int64_t>(std::ceil(exec_seconds / kSecondsPerBilledHour));
}

Money vm_cost(double exec_seconds, const InstanceType& type) {
  return type.cost_per_hour * billed_hours(exec_seconds);
}

PlanMetrics plan_metrics(const ExecutionPlan& plan, const Catalog& catalog) {
  PlanMetrics metrics;
  for (const auto& vm : plan.vms) {
    metrics.total_tasks += vm.task_count;
    if (vm.task_count == 0) continue;
    auto index = catalog.index_of(vm.type_name);
    if (!index) {
      throw ValidationError("plan references unknown instance type '" + vm.type_name + "'");
    }
    const InstanceType& type = catalog.at(*index);
    double exec = vm_exec_time(vm.task_count, type, catalog.startup_seconds());
    metrics.makespan_seconds = std::max(metrics.makespan_seconds, exec);
    metrics.billed_cost += vm_cost(exec, type);
  }
  return metrics;
}

std::int64_t horizon_capacity(const InstanceType& type, double horizon_seconds,
                              double startup_seconds) {
  if (horizon_seconds <= startup_seconds) return 0;
  return static_cast<std::int64_t>(
      std::floor((horizon_seconds - startup_seconds) / type.seconds_per_task));
}

namespace {

void check_alloc(const Allocation& alloc, const Catalog& catalog) {
  if (alloc.num_types() != catalog.size()) {
    throw ValidationError("allocation does not match the catalog size");
  }
}

// Whole billed hours that cover the window.
std::int64_t billed_periods(double horizon_seconds) {
  if (!(horizon_seconds > 0.0)) {
    throw ValidationError("horizon must be positive");
  }
  return static_cast<std::int64_t>(std::ceil(horizon_seconds / kSecondsPerBilledHour));
}

}  // namespace

std::int64_t allocation_throughput(const Allocation& alloc, const Catalog& catalog,
                                   double horizon_seconds) {
  check_alloc(alloc, catalog);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    total += alloc.count(i) *
             horizon_capacity(catalog.at(i), horizon_seconds, catalog.startup_seconds());
  }
  return total;
}

Money allocation_cost(const Allocation& alloc, const Catalog& catalog,
                      double horizon_seconds) {
  check_alloc(alloc, catalog);
  std::int64_t periods = billed_periods(horizon_seconds);
  Money total;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    total += catalog.at(i).cost_per_hour * (alloc.count(i) * periods);
  }
  return total;
}

}  // namespace botplan
