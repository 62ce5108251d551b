#pragma once

#include <cstdint>

#include "botplan/catalog.hpp"
#include "botplan/constraint.hpp"
#include "botplan/money.hpp"

namespace botplan {

/// Best allocation that uses a single instance type; the baseline every
/// multi-type refinement starts from.
struct SeedResult {
  std::size_t type_index = 0;
  std::int64_t vm_count = 0;
  /// Tasks the seed finishes within the horizon under the throughput model.
  std::int64_t model_throughput = 0;
  /// Price of renting the seed for the horizon.
  Money model_cost;
  /// Window the numbers above refer to: one billed hour under a budget,
  /// the deadline otherwise.
  double horizon_seconds = 0.0;
};

/// Picks the type that maximises one-hour throughput with as many VMs as
/// the budget buys. Ties prefer the lower hourly price, then catalog order.
/// Raises InfeasibleError when no type yields at least one VM with at least
/// one task of capacity.
SeedResult seed_budget(const Catalog& catalog, Money budget);

/// Picks the type that finishes n_tasks by the deadline at the lowest
/// price, renting ceil(n_tasks / capacity) VMs. Ties prefer the lower
/// hourly price, then catalog order. Raises InfeasibleError when no type
/// can finish even one task in time.
SeedResult seed_deadline(const Catalog& catalog, double deadline_seconds,
                         std::int64_t n_tasks);

/// Dispatch on the constraint kind.
SeedResult seed(const Catalog& catalog, const Constraint& constraint,
                std::int64_t n_tasks);

}  // namespace botplan
