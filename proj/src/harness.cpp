#include "botplan/harness.hpp"

#include <cstdio>
#include <ostream>

#include "botplan/assigner.hpp"
#include "botplan/errors.hpp"
#include "botplan/seeder.hpp"

namespace botplan {

namespace {

std::string format_seconds6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

PlanReport finish_report(const Catalog& catalog, const Constraint& constraint,
                         std::int64_t n_tasks, Allocation alloc,
                         std::optional<OptimizeStats> stats) {
  PlanReport report;
  report.allocation = std::move(alloc);
  report.plan = assign(n_tasks, report.allocation, catalog);
  report.metrics = plan_metrics(report.plan, catalog);
  report.model_throughput =
      allocation_throughput(report.allocation, catalog, constraint.horizon_seconds());
  report.model_cost =
      allocation_cost(report.allocation, catalog, constraint.horizon_seconds());
  report.optimize_stats = stats;

  if (constraint.is_budget()) {
    if (report.model_throughput < n_tasks) {
      report.warnings.push_back(
          "one-hour throughput " + std::to_string(report.model_throughput) +
          " is below the task count " + std::to_string(n_tasks));
    }
    if (report.metrics.billed_cost > constraint.budget_amount()) {
      report.warnings.push_back("billed cost " + report.metrics.billed_cost.str() +
                                " exceeds budget " +
                                constraint.budget_amount().str());
    }
  } else if (report.metrics.makespan_seconds > constraint.deadline_seconds()) {
    report.warnings.push_back(
        "makespan " + format_seconds6(report.metrics.makespan_seconds) +
        "s exceeds deadline " + format_seconds6(constraint.deadline_seconds()) + "s");
  }
  return report;
}

}  // namespace

PlanReport plan_single(const Catalog& catalog, const Constraint& constraint,
                       std::int64_t n_tasks, const OptimizeOptions&) {
  if (n_tasks < 1) throw ValidationError("task count must be at least 1");
  SeedResult s = seed(catalog, constraint, n_tasks);
  return finish_report(catalog, constraint, n_tasks,
                       Allocation::single(catalog.size(), s.type_index, s.vm_count),
                       std::nullopt);
}

PlanReport plan_multi(const Catalog& catalog, const Constraint& constraint,
                      std::int64_t n_tasks, const OptimizeOptions& options) {
  if (n_tasks < 1) throw ValidationError("task count must be at least 1");
  SeedResult s = seed(catalog, constraint, n_tasks);
  OptimizeResult refined = optimize(catalog, s, constraint, n_tasks, options);
  return finish_report(catalog, constraint, n_tasks, std::move(refined.allocation),
                       refined.stats);
}

std::vector<SweepRow> sweep(const Catalog& catalog, int scenario_id,
                            std::span<const Constraint> grid, std::int64_t n_tasks,
                            const OptimizeOptions& options) {
  if (grid.empty()) throw ValidationError("constraint grid must not be empty");

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const Constraint& constraint : grid) {
    SweepRow row;
    row.scenario_id = scenario_id;
    row.constraint = constraint;
    try {
      PlanReport single = plan_single(catalog, constraint, n_tasks, options);
      PlanReport multi = plan_multi(catalog, constraint, n_tasks, options);
      row.feasible = true;
      row.single_cost = single.metrics.billed_cost;
      row.single_makespan = single.metrics.makespan_seconds;
      row.multi_cost = multi.metrics.billed_cost;
      row.multi_makespan = multi.metrics.makespan_seconds;
      row.ratio = constraint.is_budget()
                      ? row.single_makespan / row.multi_makespan
                      : row.single_cost.to_double() / row.multi_cost.to_double();
      for (const auto& w : single.warnings) row.warnings.push_back("single: " + w);
      for (const auto& w : multi.warnings) row.warnings.push_back("multi: " + w);
      if (constraint.is_budget() && row.multi_makespan > row.single_makespan) {
        row.warnings.push_back("multi: makespan exceeds the single-type makespan");
      }
    } catch (const InfeasibleError& e) {
      row.warnings.push_back(std::string{"infeasible: "} + e.what());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Constraint> default_deadline_grid() {
  std::vector<Constraint> grid;
  for (double d : {600.0, 900.0, 1200.0, 1500.0, 1800.0, 2100.0, 2400.0, 2700.0,
                   3000.0, 3600.0}) {
    grid.push_back(Constraint::deadline(d));
  }
  return grid;
}

std::vector<Constraint> default_budget_grid(const Catalog& catalog) {
  Money priciest = catalog.at(0).cost_per_hour;
  for (const auto& type : catalog.types()) {
    if (type.cost_per_hour > priciest) priciest = type.cost_per_hour;
  }

  std::vector<const char*> values;
  if (priciest >= Money::from_units(1)) {
    values = {"2", "4", "6", "8", "10", "12", "16", "20", "24", "32"};
  } else {
    // Sub-unit hourly prices need a finer ladder to be interesting.
    values = {"0.3", "0.5", "0.8", "1", "1.5", "2", "2.5", "3", "4", "5"};
  }

  std::vector<Constraint> grid;
  for (const char* v : values) {
    grid.push_back(Constraint::budget(*Money::parse(v)));
  }
  return grid;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "scenario,kind,value,single_cost,single_makespan,multi_cost,"
         "multi_makespan,ratio,warnings\n";
  for (const SweepRow& row : rows) {
    out << row.scenario_id << ',';
    if (row.constraint.is_budget()) {
      out << "budget," << row.constraint.budget_amount().str();
    } else {
      out << "deadline," << format_seconds6(row.constraint.deadline_seconds());
    }
    out << ',' << row.single_cost.str() << ',' << format_seconds6(row.single_makespan)
        << ',' << row.multi_cost.str() << ',' << format_seconds6(row.multi_makespan)
        << ',' << format_seconds6(row.ratio) << ',';
    for (std::size_t i = 0; i < row.warnings.size(); ++i) {
      if (i > 0) out << ';';
      out << row.warnings[i];
    }
    out << '\n';
  }
}

}  // namespace botplan
