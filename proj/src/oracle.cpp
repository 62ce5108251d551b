#include "botplan/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "botplan/errors.hpp"

namespace botplan {

namespace {

std::string format_seconds6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

constexpr std::size_t kMaxTypes = 5;
constexpr std::int64_t kMaxVectors = 10'000'000;

void check_search_space(const std::vector<std::int64_t>& bounds) {
  std::int64_t product = 1;
  for (std::int64_t b : bounds) {
    if (product > kMaxVectors / (b + 1)) {
      throw ValidationError("enumeration space exceeds " +
                            std::to_string(kMaxVectors) + " count vectors");
    }
    product *= b + 1;
  }
}

// Odometer step in lexicographic order: the last coordinate moves fastest,
// so vectors appear smallest-first and the first optimum found is the
// lexicographically smallest one.
bool next_vector(std::vector<std::int64_t>& counts,
                 const std::vector<std::int64_t>& bounds) {
  for (std::size_t i = counts.size(); i-- > 0;) {
    if (counts[i] < bounds[i]) {
      ++counts[i];
      for (std::size_t j = i + 1; j < counts.size(); ++j) counts[j] = 0;
      return true;
    }
  }
  return false;
}

Allocation to_allocation(const std::vector<std::int64_t>& counts) {
  Allocation alloc{counts.size()};
  for (std::size_t i = 0; i < counts.size(); ++i) alloc.set_count(i, counts[i]);
  return alloc;
}

struct Enumeration {
  std::vector<std::int64_t> capacity;   // per type, within the horizon
  std::vector<Money> period_cost;       // per type, for the whole horizon
  std::vector<std::int64_t> bounds;
};

Enumeration prepare(const Catalog& catalog, double horizon_seconds,
                    std::optional<std::int64_t> bound_per_type,
                    const std::vector<std::int64_t>& natural_bounds) {
  if (catalog.size() > kMaxTypes) {
    throw ValidationError("enumeration supports at most " +
                          std::to_string(kMaxTypes) + " instance types");
  }
  Enumeration e;
  std::int64_t periods = static_cast<std::int64_t>(
      std::ceil(horizon_seconds / kSecondsPerBilledHour));
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    e.capacity.push_back(
        horizon_capacity(catalog.at(i), horizon_seconds, catalog.startup_seconds()));
    e.period_cost.push_back(catalog.at(i).cost_per_hour * periods);
    std::int64_t bound = natural_bounds[i];
    if (bound_per_type) bound = std::min(bound, *bound_per_type);
    e.bounds.push_back(bound);
  }
  check_search_space(e.bounds);
  return e;
}

}  // namespace

OracleResult oracle_budget(const Catalog& catalog, Money budget,
                           std::optional<std::int64_t> bound_per_type) {
  if (budget <= Money::zero()) throw ValidationError("budget must be positive");

  // More VMs of one type than the budget buys can never fit the budget, so
  // these bounds lose no optimum.
  std::vector<std::int64_t> natural;
  for (const auto& type : catalog.types()) {
    natural.push_back(budget.floor_div(type.cost_per_hour));
  }
  Enumeration e = prepare(catalog, kSecondsPerBilledHour, bound_per_type, natural);

  OracleResult result;
  bool found = false;
  std::vector<std::int64_t> counts(catalog.size(), 0);
  do {
    ++result.explored;
    Money cost;
    std::int64_t throughput = 0;
    std::int64_t vms = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      cost += e.period_cost[i] * counts[i];
      throughput += e.capacity[i] * counts[i];
      vms += counts[i];
    }
    if (vms == 0 || cost > budget) continue;
    if (!found || throughput > result.best_throughput ||
        (throughput == result.best_throughput && cost < result.best_cost)) {
      found = true;
      result.best_alloc = to_allocation(counts);
      result.best_throughput = throughput;
      result.best_cost = cost;
    }
  } while (next_vector(counts, e.bounds));

  if (!found) {
    throw InfeasibleError("no allocation fits budget " + budget.str());
  }
  return result;
}

OracleResult oracle_deadline(const Catalog& catalog, double deadline_seconds,
                             std::int64_t n_tasks,
                             std::optional<std::int64_t> bound_per_type) {
  if (n_tasks < 1) throw ValidationError("task count must be at least 1");
  if (!(deadline_seconds > 0.0)) throw ValidationError("deadline must be positive");

  // ceil(n_tasks / capacity) VMs of one type already finish everything, so
  // larger counts of that type are dominated and the bounds stay exact.
  std::vector<std::int64_t> natural;
  for (const auto& type : catalog.types()) {
    std::int64_t capacity =
        horizon_capacity(type, deadline_seconds, catalog.startup_seconds());
    natural.push_back(capacity < 1 ? 0 : (n_tasks + capacity - 1) / capacity);
  }
  Enumeration e = prepare(catalog, deadline_seconds, bound_per_type, natural);

  OracleResult result;
  bool found = false;
  std::vector<std::int64_t> counts(catalog.size(), 0);
  do {
    ++result.explored;
    Money cost;
    std::int64_t throughput = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      cost += e.period_cost[i] * counts[i];
      throughput += e.capacity[i] * counts[i];
    }
    if (throughput < n_tasks) continue;
    if (!found || cost < result.best_cost ||
        (cost == result.best_cost && throughput > result.best_throughput)) {
      found = true;
      result.best_alloc = to_allocation(counts);
      result.best_throughput = throughput;
      result.best_cost = cost;
    }
  } while (next_vector(counts, e.bounds));

  if (!found) {
    throw InfeasibleError("no allocation finishes " + std::to_string(n_tasks) +
                          " tasks within deadline " +
                          format_seconds6(deadline_seconds) + "s");
  }
  return result;
}

}  // namespace botplan
