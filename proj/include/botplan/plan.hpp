#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace botplan {

/// One planned virtual machine: the instance type it rents and how many of
/// the identical tasks it received.
struct PlannedVm {
  std::string type_name;
  std::int64_t task_count = 0;
};

/// Output of task assignment. VMs appear in creation order, grouped by
/// catalog position of their type.
struct ExecutionPlan {
  std::vector<PlannedVm> vms;

  std::int64_t total_tasks() const {
    std::int64_t sum = 0;
    for (const auto& vm : vms) sum += vm.task_count;
    return sum;
  }
};

}  // namespace botplan
