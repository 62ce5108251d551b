#pragma once

#include <cstdint>
#include <span>

#include "botplan/catalog.hpp"
#include "botplan/metrics.hpp"
#include "botplan/plan.hpp"

namespace botplan {

/// Index of the VM that would finish earliest after taking one more task,
/// given each VM's completion time with that extra task. Earliest index
/// wins ties.
std::size_t greedy_choice(std::span<const double> resulting_exec_seconds);

/// Distributes n_tasks identical tasks over the allocation's VMs one task
/// at a time, always to the VM that finishes earliest with it. VMs are laid
/// out in catalog order. Raises ValidationError when tasks exist but the
/// allocation holds no VM.
ExecutionPlan assign(std::int64_t n_tasks, const Allocation& alloc,
                     const Catalog& catalog);

}  // namespace botplan
