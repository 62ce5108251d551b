// Acceptance gate: one line per criterion, [PASS] or [FAIL], nonzero exit
// when anything fails. Each criterion re-derives its expectations from
// independent arithmetic or from the reference implementations in
// test_support.hpp rather than trusting the library's own numbers.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "botplan/assigner.hpp"
#include "botplan/catalog.hpp"
#include "botplan/errors.hpp"
#include "botplan/harness.hpp"
#include "botplan/metrics.hpp"
#include "botplan/optimizer.hpp"
#include "botplan/oracle.hpp"
#include "botplan/seeder.hpp"
#include "test_support.hpp"

using namespace botplan;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string why;
};

struct Expect {
  Outcome* outcome;
  void operator()(bool condition, const std::string& message) const {
    if (!condition) {
      outcome->pass = false;
      if (outcome->why.empty()) outcome->why = message;
    }
  }
};

// Optimizer runs observed by the earlier criteria, judged again at the end.
std::vector<OptimizeStats> g_observed_stats;

void note_stats(const PlanReport& report) {
  if (report.optimize_stats) g_observed_stats.push_back(*report.optimize_stats);
}

Outcome criterion1_deadline_walkthrough() {
  Outcome outcome;
  Expect expect{&outcome};
  auto start = Clock::now();

  Catalog s1 = builtin_scenario(1);
  Constraint d1800 = Constraint::deadline(1800.0);

  PlanReport single = plan_single(s1, d1800, 1000);
  expect(single.allocation == Allocation::single(5, 0, 19),
         "single-type plan is not 19 VMs of it1");
  expect(single.metrics.makespan_seconds == 1706.0,
         "single-type makespan is not exactly 1706");
  expect(single.metrics.billed_cost == Money::from_units(19),
         "single-type cost is not exactly 19");

  PlanReport multi = plan_multi(s1, d1800, 1000);
  note_stats(multi);
  Allocation target(5);
  target.set_count(0, 2);
  target.set_count(4, 1);
  expect(multi.allocation == target, "multi-type plan is not it1 x 2 + it5 x 1");
  expect(multi.metrics.billed_cost == Money::from_units(18),
         "multi-type cost is not exactly 18");
  expect(multi.metrics.makespan_seconds == 1790.0,
         "multi-type makespan is not exactly 1790");
  expect(multi.metrics.makespan_seconds <= 1800.0,
         "multi-type makespan misses the deadline");

  double elapsed = seconds_since(start);
  expect(elapsed < 1.0, "took " + std::to_string(elapsed) + "s, limit 1s");
  return outcome;
}

Outcome criterion2_seed_arithmetic() {
  Outcome outcome;
  Expect expect{&outcome};

  Catalog s1 = builtin_scenario(1);
  const std::int64_t hour_capacity[5] = {112, 224, 448, 897, 1795};
  for (std::size_t i = 0; i < 5; ++i) {
    std::int64_t got = horizon_capacity(s1.at(i), kSecondsPerBilledHour,
                                        s1.startup_seconds());
    expect(got == hour_capacity[i],
           "one-hour capacity of " + s1.at(i).name + " is " +
               std::to_string(got) + ", expected " +
               std::to_string(hour_capacity[i]));
    expect(testing::counted_capacity(s1.at(i), kSecondsPerBilledHour,
                                     s1.startup_seconds()) == hour_capacity[i],
           "counted capacity disagrees for " + s1.at(i).name);
  }

  SeedResult s = seed_deadline(s1, 1800.0, 1000);
  expect(s.type_index == 0 && s.vm_count == 19,
         "deadline seed is not (it1, 19)");
  return outcome;
}

Outcome criterion3_tradeoff_ratios() {
  Outcome outcome;
  Expect expect{&outcome};

  Catalog s4 = builtin_scenario(4);
  const InstanceType& m3_medium = s4.at(*s4.index_of("M3.Medium"));
  const InstanceType& c3_large = s4.at(*s4.index_of("C3.Large"));
  const InstanceType& m3_large = s4.at(*s4.index_of("M3.Large"));
  const InstanceType& c3_xlarge = s4.at(*s4.index_of("C3.Xlarge"));

  double up = tradeoff_ratio(m3_medium, c3_large);
  expect(std::abs(up - 2.2) <= 0.05,
         "M3.Medium to C3.Large ratio " + std::to_string(up) +
             " is not within 0.05 of 2.2");
  double down = tradeoff_ratio(c3_large, m3_large);
  expect(std::abs(down - 0.7) <= 0.05,
         "C3.Large to M3.Large ratio " + std::to_string(down) +
             " is not within 0.05 of 0.7");
  double flat = tradeoff_ratio(c3_large, c3_xlarge);
  expect(std::abs(flat - 1.002) <= 0.002,
         "C3.Large to C3.Xlarge ratio " + std::to_string(flat) +
             " is not within 0.002 of 1.002");

  Catalog s1 = builtin_scenario(1);
  for (std::size_t i = 0; i + 1 < s1.size(); ++i) {
    double adjacent = tradeoff_ratio(s1.at(i), s1.at(i + 1));
    expect(adjacent == 1.0, "adjacent ladder ratio " + s1.at(i).name + " to " +
                                s1.at(i + 1).name + " is not exactly 1.0");
  }
  return outcome;
}

Outcome criterion4_constraint_compliance() {
  Outcome outcome;
  Expect expect{&outcome};
  auto start = Clock::now();

  int runs = 0;
  int violations = 0;
  for (int id = 1; id <= 4; ++id) {
    Catalog catalog = builtin_scenario(id);
    std::vector<Constraint> grid = default_deadline_grid();
    std::vector<Constraint> budgets = default_budget_grid(catalog);
    grid.insert(grid.end(), budgets.begin(), budgets.end());

    for (const Constraint& constraint : grid) {
      ++runs;
      PlanReport reports[2];
      try {
        reports[0] = plan_single(catalog, constraint, 1000);
        reports[1] = plan_multi(catalog, constraint, 1000);
      } catch (const InfeasibleError&) {
        continue;
      }
      note_stats(reports[1]);
      for (const PlanReport& report : reports) {
        if (constraint.is_budget()) {
          if (report.model_throughput >= 1000 &&
              report.metrics.billed_cost > constraint.budget_amount()) {
            ++violations;
          }
        } else if (report.metrics.makespan_seconds >
                   constraint.deadline_seconds() + 1e-9) {
          ++violations;
        }
      }
    }
  }

  expect(runs == 80, "expected 80 runs, made " + std::to_string(runs));
  expect(violations == 0,
         std::to_string(violations) + " constraint violations observed");

  double elapsed = seconds_since(start);
  expect(elapsed < 10.0, "took " + std::to_string(elapsed) + "s, limit 10s");
  return outcome;
}

// Budget points outside scenario 3 where refinement still beats the
// single-type buy. Two effects produce them: one-hour capacity rounds down
// per VM, so eight 32s/task machines cover 896 tasks while one equally
// priced 4s/task machine covers 897, and sub-unit leftover budget can fund
// one extra cheap machine outright. Makespans pinned from an independent
// replay of the whole pipeline.
struct RatioException {
  int scenario_id;
  const char* budget;
  double single_makespan;
  double multi_makespan;
};

constexpr RatioException kBudgetExceptions[] = {
    {1, "12", 84.0 * 32.0 + 10.0, 668.0 * 4.0 + 10.0},
    {1, "24", 334.0 * 4.0 + 10.0, 667.0 * 2.0 + 10.0},
    {4, "0.8", 167.0 * 25.33 + 10.0, 159.0 * 25.33 + 10.0},
    {4, "2", 63.0 * 25.33 + 10.0, 62.0 * 25.33 + 10.0},
};

const RatioException* find_exception(int scenario_id, const std::string& budget) {
  for (const RatioException& e : kBudgetExceptions) {
    if (e.scenario_id == scenario_id && budget == e.budget) return &e;
  }
  return nullptr;
}

Outcome criterion5_never_worse() {
  Outcome outcome;
  Expect expect{&outcome};

  for (int id = 1; id <= 4; ++id) {
    Catalog catalog = builtin_scenario(id);
    std::vector<Constraint> grid = default_deadline_grid();
    std::vector<Constraint> budgets = default_budget_grid(catalog);
    grid.insert(grid.end(), budgets.begin(), budgets.end());

    std::vector<SweepRow> rows = sweep(catalog, id, grid, 1000);
    int budget_improved = 0;
    int deadline_improved = 0;
    for (const SweepRow& row : rows) {
      if (!row.feasible) continue;
      expect(row.ratio >= 1.0 - 1e-9,
             "scenario " + std::to_string(id) + " has a ratio below 1.0");
      bool improved = row.ratio > 1.0 + 1e-9;
      if (row.constraint.is_budget()) {
        budget_improved += improved;
        std::string value = row.constraint.budget_amount().str();
        if (id == 4) {
          expect(row.ratio <= 1.1 + 1e-9,
                 "scenario 4 budget " + value + " ratio " +
                     std::to_string(row.ratio) + " is above 1.1");
        }
        if (id != 3) {
          if (const RatioException* e = find_exception(id, value)) {
            expect(std::abs(row.single_makespan - e->single_makespan) <= 1e-9 &&
                       std::abs(row.multi_makespan - e->multi_makespan) <= 1e-9,
                   "scenario " + std::to_string(id) + " budget " + value +
                       " drifted from its pinned makespans");
          } else {
            expect(std::abs(row.ratio - 1.0) <= 1e-9,
                   "scenario " + std::to_string(id) + " budget " + value +
                       " changed the makespan, ratio " +
                       std::to_string(row.ratio));
          }
        }
      } else {
        deadline_improved += improved;
      }
    }
    if (id == 3) {
      expect(budget_improved >= 1,
             "scenario 3 shows no budget-mode improvement");
      expect(deadline_improved >= 1,
             "scenario 3 shows no deadline-mode improvement");
    }
  }
  return outcome;
}

Outcome criterion6_oracle_equivalence() {
  Outcome outcome;
  Expect expect{&outcome};
  auto start = Clock::now();

  std::mt19937 rng{20260822};
  for (int iter = 0; iter < 200; ++iter) {
    Catalog catalog = testing::random_catalog(rng);
    const double startup = catalog.startup_seconds();

    Money cheapest = catalog.at(0).cost_per_hour;
    for (const auto& t : catalog.types()) {
      cheapest = std::min(cheapest, t.cost_per_hour);
    }

    // Budget side: the bound per type stays at or below twelve VMs.
    {
      Money budget = Money::from_micros(
          testing::rand_int(rng, cheapest.micros(), 12 * cheapest.micros()));
      auto naive = testing::brute_single_budget(catalog, budget);
      SeedResult s = seed_budget(catalog, budget);
      expect(naive.has_value(), "reference found no single-type buy");
      if (naive) {
        expect(s.type_index == naive->type_index &&
                   s.vm_count == naive->vm_count &&
                   s.model_throughput == naive->throughput &&
                   s.model_cost == naive->total_cost,
               "budget seed disagrees with the single-type reference");
        expect(s.model_throughput >= naive->throughput,
               "budget seed lost to a single-type vector");
      }

      Constraint constraint = Constraint::budget(budget);
      OptimizeResult h = optimize(catalog, s, constraint, 1);
      g_observed_stats.push_back(h.stats);
      OracleResult o = oracle_budget(catalog, budget);

      std::int64_t heuristic_th =
          allocation_throughput(h.allocation, catalog, kSecondsPerBilledHour);
      Money heuristic_cost =
          allocation_cost(h.allocation, catalog, kSecondsPerBilledHour);
      expect(heuristic_cost <= budget, "heuristic overspends the budget");
      expect(heuristic_th >= s.model_throughput,
             "heuristic throughput fell below its seed");
      expect(heuristic_th <= o.best_throughput,
             "heuristic throughput beats the enumerated optimum");
      if (naive) {
        expect(o.best_throughput >= naive->throughput,
               "enumerated optimum lost to a single-type vector");
      }
    }

    // Deadline side: task counts keep every per-type bound at or below
    // twelve VMs as well.
    {
      double deadline = static_cast<double>(testing::rand_int(
          rng, static_cast<std::int64_t>(startup) + 65, 3600));
      std::int64_t min_capacity = std::numeric_limits<std::int64_t>::max();
      for (const auto& t : catalog.types()) {
        min_capacity =
            std::min(min_capacity, horizon_capacity(t, deadline, startup));
      }
      std::int64_t n_tasks = testing::rand_int(
          rng, 1, std::min<std::int64_t>(500, 12 * min_capacity));

      auto naive = testing::brute_single_deadline(catalog, deadline, n_tasks);
      SeedResult s = seed_deadline(catalog, deadline, n_tasks);
      expect(naive.has_value(), "reference found no single-type schedule");
      if (naive) {
        expect(s.type_index == naive->type_index &&
                   s.vm_count == naive->vm_count &&
                   s.model_throughput == naive->throughput &&
                   s.model_cost == naive->total_cost,
               "deadline seed disagrees with the single-type reference");
      }

      Constraint constraint = Constraint::deadline(deadline);
      OptimizeResult h = optimize(catalog, s, constraint, n_tasks);
      g_observed_stats.push_back(h.stats);
      OracleResult o = oracle_deadline(catalog, deadline, n_tasks);

      std::int64_t heuristic_th =
          allocation_throughput(h.allocation, catalog, deadline);
      Money heuristic_cost = allocation_cost(h.allocation, catalog, deadline);
      expect(heuristic_th >= n_tasks, "heuristic misses the deadline");
      expect(heuristic_cost <= s.model_cost,
             "heuristic cost rose above its seed");
      expect(o.best_cost <= heuristic_cost,
             "enumerated optimum costs more than the heuristic");
      if (naive) {
        expect(o.best_cost <= naive->total_cost,
               "enumerated optimum lost to a single-type vector");
      }
    }
  }

  double elapsed = seconds_since(start);
  expect(elapsed < 60.0, "took " + std::to_string(elapsed) + "s, limit 60s");
  return outcome;
}

Outcome criterion7_assignment_properties() {
  Outcome outcome;
  Expect expect{&outcome};

  // The documented three-VM hand trace: resulting exec times 15s, 17s and
  // 16s send the task to the first VM.
  const double three_vms[3] = {15.0, 17.0, 16.0};
  expect(greedy_choice(std::span<const double>{three_vms, 3}) == 0,
         "three-VM hand trace does not pick the first VM");

  std::mt19937 rng{424242};
  for (int iter = 0; iter < 500; ++iter) {
    Catalog catalog = testing::random_catalog(rng);
    const double startup = catalog.startup_seconds();

    Allocation alloc(catalog.size());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      std::int64_t c = testing::rand_int(rng, 0, 4);
      alloc.set_count(i, c);
      total += c;
    }
    if (total == 0) alloc.set_count(0, 1);

    double horizon = static_cast<double>(testing::rand_int(
        rng, static_cast<std::int64_t>(startup) + 65, 3600));
    std::int64_t capacity = allocation_throughput(alloc, catalog, horizon);
    std::int64_t n_tasks =
        testing::rand_int(rng, 1, std::min<std::int64_t>(capacity, 400));

    ExecutionPlan plan = assign(n_tasks, alloc, catalog);
    PlanMetrics metrics = plan_metrics(plan, catalog);
    expect(plan.total_tasks() == n_tasks, "tasks were lost in assignment");
    expect(metrics.makespan_seconds <= horizon + 1e-9,
           "makespan exceeds the window the capacity promised");

    for (std::size_t i = 0; i < plan.vms.size(); ++i) {
      for (std::size_t j = i + 1; j < plan.vms.size(); ++j) {
        if (plan.vms[i].type_name != plan.vms[j].type_name) continue;
        std::int64_t gap = plan.vms[i].task_count - plan.vms[j].task_count;
        expect(gap <= 1 && gap >= -1,
               "same-type loads drift more than one task apart");
      }
    }
  }
  return outcome;
}

Outcome criterion8_termination() {
  Outcome outcome;
  Expect expect{&outcome};

  expect(!g_observed_stats.empty(), "no optimizer runs were observed");
  for (const OptimizeStats& stats : g_observed_stats) {
    expect(stats.rounds <= stats.round_cap,
           "a run used " + std::to_string(stats.rounds) +
               " rounds against a bound of " + std::to_string(stats.round_cap));
    expect(!stats.cap_hit, "a run stopped on the safety cap");
  }
  return outcome;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {"deadline walkthrough reproduces the documented plans",
       criterion1_deadline_walkthrough},
      {"seed capacity arithmetic is exact", criterion2_seed_arithmetic},
      {"trade-off ratio table matches", criterion3_tradeoff_ratios},
      {"plans honour their constraints across the standard grids",
       criterion4_constraint_compliance},
      {"refinement never loses and helps where expected",
       criterion5_never_worse},
      {"seed and heuristic agree with exhaustive enumeration",
       criterion6_oracle_equivalence},
      {"greedy assignment properties hold", criterion7_assignment_properties},
      {"optimizer termination stays within its bound", criterion8_termination},
  };

  int failures = 0;
  int id = 0;
  for (const Entry& entry : entries) {
    ++id;
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.why = std::string{"unexpected exception: "} + e.what();
    }
    if (outcome.pass) {
      std::printf("[PASS] criterion %d: %s\n", id, entry.label);
    } else {
      std::printf("[FAIL] criterion %d: %s: %s\n", id, entry.label,
                  outcome.why.c_str());
      ++failures;
    }
  }
  if (failures > 0) {
    std::printf("%d of 8 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
