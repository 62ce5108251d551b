#pragma once

#include <cstdint>
#include <optional>

#include "botplan/catalog.hpp"
#include "botplan/metrics.hpp"
#include "botplan/money.hpp"

namespace botplan {

/// Provably best allocation found by exhaustive enumeration.
struct OracleResult {
  Allocation best_alloc;
  std::int64_t best_throughput = 0;
  Money best_cost;
  /// Count vectors visited, the all-zero vector included.
  std::int64_t explored = 0;
};

/// Enumerates every VM count vector with per-type counts up to what the
/// budget buys and returns the one with the highest one-hour throughput
/// that stays within the budget. Ties fall to the lower total cost, then to
/// the lexicographically smallest vector. bound_per_type additionally caps
/// every per-type count, which can hide the true optimum; leave it unset
/// for exact answers. Intended for small instances: at most 5 types and
/// 10 million vectors, enforced with ValidationError.
OracleResult oracle_budget(const Catalog& catalog, Money budget,
                           std::optional<std::int64_t> bound_per_type = {});

/// Same enumeration for the deadline objective: the cheapest vector whose
/// capacity within the deadline covers n_tasks. Ties fall to the higher
/// throughput, then to the lexicographically smallest vector.
OracleResult oracle_deadline(const Catalog& catalog, double deadline_seconds,
                             std::int64_t n_tasks,
                             std::optional<std::int64_t> bound_per_type = {});

}  // namespace botplan
