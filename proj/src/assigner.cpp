#include "botplan/assigner.hpp"

#include <algorithm>
#include <limits>

#include "botplan/errors.hpp"

namespace botplan {

namespace {

// Above this many VMs, only the first n_tasks VMs of each type get
// materialized. Same-type VMs are interchangeable and ties resolve to the
// lowest index, so VMs beyond that prefix can never receive a task.
constexpr std::int64_t kFullMaterializeLimit = 100'000;

}  // namespace

std::size_t greedy_choice(std::span<const double> resulting_exec_seconds) {
  if (resulting_exec_seconds.empty()) {
    throw ValidationError("cannot choose among zero VMs");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < resulting_exec_seconds.size(); ++i) {
    if (resulting_exec_seconds[i] < resulting_exec_seconds[best]) best = i;
  }
  return best;
}

ExecutionPlan assign(std::int64_t n_tasks, const Allocation& alloc,
                     const Catalog& catalog) {
  if (alloc.num_types() != catalog.size()) {
    throw ValidationError("allocation does not match the catalog size");
  }
  if (n_tasks < 0) throw ValidationError("task count must not be negative");

  const std::int64_t total_vms = alloc.total_vms();
  if (n_tasks >= 1 && total_vms == 0) {
    throw ValidationError("cannot assign tasks to an allocation without VMs");
  }

  struct Slot {
    std::size_t type_index;
    std::int64_t load = 0;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    std::int64_t count = alloc.count(i);
    if (total_vms > kFullMaterializeLimit) count = std::min(count, n_tasks);
    for (std::int64_t k = 0; k < count; ++k) slots.push_back(Slot{i, 0});
  }

  const double startup = catalog.startup_seconds();
  std::vector<double> resulting(slots.size());
  for (std::int64_t task = 0; task < n_tasks; ++task) {
    for (std::size_t j = 0; j < slots.size(); ++j) {
      resulting[j] = static_cast<double>(slots[j].load + 1) *
                         catalog.at(slots[j].type_index).seconds_per_task +
                     startup;
    }
    slots[greedy_choice(resulting)].load += 1;
  }

  ExecutionPlan plan;
  plan.vms.reserve(slots.size());
  for (const auto& slot : slots) {
    plan.vms.push_back(PlannedVm{catalog.at(slot.type_index).name, slot.load});
  }
  return plan;
}

}  // namespace botplan
