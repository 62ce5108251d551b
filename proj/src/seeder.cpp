#include "botplan/seeder.hpp"

#include <cstdio>
#include <optional>

#include "botplan/errors.hpp"
#include "botplan/metrics.hpp"

namespace botplan {

namespace {

std::string format_seconds6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

// Both objectives share the same tie-break: better objective first, then
// lower hourly price, then earlier catalog position (the iteration order).
bool better_budget(std::int64_t th, Money price_per_hour, std::int64_t best_th,
                   Money best_price_per_hour) {
  if (th != best_th) return th > best_th;
  return price_per_hour < best_price_per_hour;
}

bool better_deadline(Money total, Money price_per_hour, Money best_total,
                     Money best_price_per_hour) {
  if (total != best_total) return total < best_total;
  return price_per_hour < best_price_per_hour;
}

}  // namespace

SeedResult seed_budget(const Catalog& catalog, Money budget) {
  if (budget <= Money::zero()) {
    throw ValidationError("budget must be positive");
  }

  std::optional<SeedResult> best;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const InstanceType& type = catalog.at(i);
    std::int64_t vm_count = budget.floor_div(type.cost_per_hour);
    if (vm_count < 1) continue;
    std::int64_t capacity =
        horizon_capacity(type, kSecondsPerBilledHour, catalog.startup_seconds());
    if (capacity < 1) continue;

    std::int64_t throughput = vm_count * capacity;
    if (best && !better_budget(throughput, type.cost_per_hour,
                               best->model_throughput,
                               catalog.at(best->type_index).cost_per_hour)) {
      continue;
    }
    best = SeedResult{i, vm_count, throughput, type.cost_per_hour * vm_count,
                      kSecondsPerBilledHour};
  }

  if (!best) {
    throw InfeasibleError(
        "budget " + budget.str() +
        " buys no instance type that finishes a task within one hour");
  }
  return *best;
}

SeedResult seed_deadline(const Catalog& catalog, double deadline_seconds,
                         std::int64_t n_tasks) {
  if (n_tasks < 1) throw ValidationError("task count must be at least 1");
  if (!(deadline_seconds > 0.0)) {
    throw ValidationError("deadline must be positive");
  }

  std::optional<SeedResult> best;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const InstanceType& type = catalog.at(i);
    std::int64_t capacity =
        horizon_capacity(type, deadline_seconds, catalog.startup_seconds());
    if (capacity < 1) continue;

    std::int64_t vm_count = (n_tasks + capacity - 1) / capacity;
    Money total = type.cost_per_hour * vm_count;
    if (best && !better_deadline(total, type.cost_per_hour, best->model_cost,
                                 catalog.at(best->type_index).cost_per_hour)) {
      continue;
    }
    best = SeedResult{i, vm_count, vm_count * capacity, total, deadline_seconds};
  }

  if (!best) {
    throw InfeasibleError("no instance type finishes a task within deadline " +
                          format_seconds6(deadline_seconds) + "s");
  }
  return *best;
}

SeedResult seed(const Catalog& catalog, const Constraint& constraint,
                std::int64_t n_tasks) {
  if (constraint.is_budget()) return seed_budget(catalog, constraint.budget_amount());
  return seed_deadline(catalog, constraint.deadline_seconds(), n_tasks);
}

}  // namespace botplan
