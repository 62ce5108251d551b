#include "botplan/optimizer.hpp"

#include <optional>

#include "botplan/errors.hpp"

namespace botplan {

namespace {

struct Candidate {
  std::size_t type_index = 0;
  std::int64_t removed = 0;  // seed-type VMs given up
  std::int64_t added = 0;    // candidate VMs bought
  std::int64_t throughput = 0;
};

void validate_inputs(const Catalog& catalog, const SeedResult& seed,
                     const Constraint& constraint, std::int64_t n_tasks) {
  if (n_tasks < 1) throw ValidationError("task count must be at least 1");
  if (seed.type_index >= catalog.size()) {
    throw ValidationError("seed type index is outside the catalog");
  }
  if (seed.vm_count < 1) throw ValidationError("seed must hold at least one VM");
  if (seed.horizon_seconds != constraint.horizon_seconds()) {
    throw ValidationError("seed horizon does not match the constraint");
  }
}

}  // namespace

OptimizeResult optimize(const Catalog& catalog, const SeedResult& seed,
                        const Constraint& constraint, std::int64_t n_tasks,
                        const OptimizeOptions& options) {
  validate_inputs(catalog, seed, constraint, n_tasks);

  const bool min_cost = constraint.is_deadline();
  const double horizon = constraint.horizon_seconds();
  const std::size_t seed_type = seed.type_index;
  const Money seed_price = catalog.at(seed_type).cost_per_hour;

  std::vector<std::int64_t> capacity(catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    capacity[i] = horizon_capacity(catalog.at(i), horizon, catalog.startup_seconds());
  }

  // Deadline mode spends nothing beyond what replaced VMs free up; budget
  // mode starts from whatever the seed left unspent.
  Money remaining;
  if (!min_cost) {
    remaining = constraint.budget_amount() - seed.model_cost;
    if (remaining < Money::zero()) {
      throw ValidationError("seed cost exceeds the budget");
    }
  }

  OptimizeResult result;
  result.allocation = Allocation::single(catalog.size(), seed_type, seed.vm_count);
  std::int64_t throughput = seed.model_throughput;
  std::int64_t trade_width = 0;  // seed VMs offered up in the current round

  // Generous ceiling on rounds: every acceptance either removes a seed VM
  // or spends budget, every rejection widens the trade, so the loop stops
  // long before this. Kept as a defensive stop with cap_hit as the alarm.
  Money cheapest = catalog.at(0).cost_per_hour;
  for (const auto& type : catalog.types()) {
    if (type.cost_per_hour < cheapest) cheapest = type.cost_per_hour;
  }
  std::int64_t purchase_bound =
      min_cost ? 0 : constraint.budget_amount().floor_div(cheapest);
  result.stats.round_cap =
      (seed.vm_count + 2) * static_cast<std::int64_t>(catalog.size() + 1) +
      seed.vm_count + purchase_bound + 8;

  while (true) {
    std::int64_t seed_vms = result.allocation.count(seed_type);
    if (seed_vms == 0 || seed_vms < trade_width) break;
    if (result.stats.rounds >= result.stats.round_cap) {
      result.stats.cap_hit = true;
      break;
    }
    ++result.stats.rounds;

    std::optional<Candidate> best;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      if (i == seed_type) continue;
      const Money price = catalog.at(i).cost_per_hour;

      // Not buyable even after trading in the full width.
      if (price > remaining + seed_price * trade_width) continue;

      // A candidate the leftover budget covers outright is a pure addition;
      // otherwise the trade funds it by giving up seed VMs.
      std::int64_t removed = price > remaining ? trade_width : 0;
      Money allowance = remaining + seed_price * removed;
      std::int64_t added = allowance.floor_div(price);
      // When chasing a cheaper plan, an exact-allowance purchase would cost
      // the same as what it replaces; buy one VM less so money is saved.
      if (min_cost && price * added == allowance) --added;
      if (added < 1) continue;

      std::int64_t next_throughput =
          throughput - capacity[seed_type] * removed + capacity[i] * added;
      if (min_cost) {
        if (next_throughput < n_tasks) continue;
      } else if (options.nonstrict_improvement ? next_throughput < throughput
                                               : next_throughput <= throughput) {
        continue;
      }

      if (!best || next_throughput > best->throughput ||
          (next_throughput == best->throughput &&
           price < catalog.at(best->type_index).cost_per_hour)) {
        best = Candidate{i, removed, added, next_throughput};
      }
    }

    if (!best) {
      ++trade_width;
      continue;
    }

    result.allocation.add(seed_type, -best->removed);
    result.allocation.add(best->type_index, best->added);
    throughput = best->throughput;
    if (min_cost) {
      remaining = Money::zero();
    } else {
      remaining += seed_price * best->removed -
                   catalog.at(best->type_index).cost_per_hour * best->added;
    }
    ++result.stats.accepted;
    result.steps.push_back(OptimizeStep{
        result.stats.rounds, best->type_index, best->removed, best->added,
        throughput, allocation_cost(result.allocation, catalog, horizon),
        remaining});
  }

  return result;
}

}  // namespace botplan
