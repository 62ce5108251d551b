#include "botplan/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "botplan/assigner.hpp"
#include "botplan/catalog.hpp"
#include "botplan/errors.hpp"
#include "botplan/harness.hpp"
#include "botplan/oracle.hpp"
#include "botplan/seeder.hpp"

namespace botplan {

namespace {

using nlohmann::ordered_json;

std::string format_seconds6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

struct SourceConfig {
  std::string catalog_path;
  int scenario = 0;
  double startup_seconds = kDefaultStartupSeconds;
};

struct PlanConfig {
  SourceConfig source;
  std::int64_t tasks = 1000;
  std::string budget_text;
  double deadline_seconds = 0.0;
  bool have_budget = false;
  bool have_deadline = false;
  bool single_type = false;
  bool strict = false;
  bool json = false;
  bool nonstrict_improvement = false;
  std::string out_path;
};

struct SweepConfig {
  SourceConfig source;
  std::int64_t tasks = 1000;
  std::string grid_text;
  std::string kind;
  bool nonstrict_improvement = false;
  std::string out_path;
};

void add_source_options(CLI::App* sub, SourceConfig& cfg) {
  auto* catalog = sub->add_option("--catalog", cfg.catalog_path,
                                  "instance type catalog CSV file");
  auto* scenario = sub->add_option("--scenario", cfg.scenario,
                                   "built-in catalog id (1 to 4)")
                       ->check(CLI::Range(1, 4));
  catalog->excludes(scenario);
  scenario->excludes(catalog);
  sub->add_option("--startup", cfg.startup_seconds,
                  "per-VM startup overhead in seconds")
      ->check(CLI::NonNegativeNumber);
}

Catalog load_catalog(const SourceConfig& cfg) {
  if (cfg.catalog_path.empty() && cfg.scenario == 0) {
    throw ValidationError("exactly one of --catalog and --scenario is required");
  }
  if (!cfg.catalog_path.empty()) {
    std::ifstream file{cfg.catalog_path};
    if (!file) {
      throw ValidationError("cannot open catalog file '" + cfg.catalog_path + "'");
    }
    return parse_catalog(file, cfg.startup_seconds);
  }
  return builtin_scenario(cfg.scenario).with_startup(cfg.startup_seconds);
}

std::string source_label(const SourceConfig& cfg) {
  if (!cfg.catalog_path.empty()) return "catalog " + cfg.catalog_path;
  return "built-in scenario " + std::to_string(cfg.scenario) + " (" +
         std::string{scenario_label(cfg.scenario)} + ")";
}

Money parse_budget_or_fail(const std::string& text) {
  auto budget = Money::parse(text);
  if (!budget || *budget <= Money::zero()) {
    throw ValidationError("invalid budget '" + text +
                          "' (expected a positive decimal)");
  }
  return *budget;
}

double parse_grid_seconds(const std::string& text) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || !(value > 0.0) ||
      !std::isfinite(value)) {
    throw ValidationError("invalid deadline '" + text +
                          "' (expected positive seconds)");
  }
  return value;
}

std::string constraint_label(const Constraint& constraint) {
  if (constraint.is_budget()) {
    return "budget " + constraint.budget_amount().str();
  }
  return "deadline " + format_seconds6(constraint.deadline_seconds()) + "s";
}

void print_allocation(std::ostream& out, const Allocation& alloc,
                      const Catalog& catalog) {
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (alloc.count(i) == 0) continue;
    out << "  " << catalog.at(i).name << " x " << alloc.count(i) << '\n';
  }
}

bool violates_constraint(const PlanReport& report, const Constraint& constraint) {
  if (constraint.is_budget()) {
    return report.metrics.billed_cost > constraint.budget_amount();
  }
  return report.metrics.makespan_seconds > constraint.deadline_seconds();
}

void print_plan_text(std::ostream& out, const PlanReport& report,
                     const Catalog& catalog, const Constraint& constraint,
                     const PlanConfig& cfg) {
  out << "plan (" << (cfg.single_type ? "single-type" : "multi-type") << ") for "
      << source_label(cfg.source) << ", " << constraint_label(constraint) << ", "
      << cfg.tasks << " tasks\n";

  out << "allocation:\n";
  print_allocation(out, report.allocation, catalog);

  std::size_t name_width = 4;
  for (const auto& vm : report.plan.vms) {
    name_width = std::max(name_width, vm.type_name.size());
  }
  out << "per-VM loads:\n";
  out << "  " << std::left << std::setw(static_cast<int>(name_width)) << "type"
      << std::right << std::setw(8) << "tasks" << std::setw(10) << "exec_s"
      << std::setw(8) << "cost" << '\n';
  for (const auto& vm : report.plan.vms) {
    const InstanceType& type = catalog.at(*catalog.index_of(vm.type_name));
    double exec = vm_exec_time(vm.task_count, type, catalog.startup_seconds());
    out << "  " << std::left << std::setw(static_cast<int>(name_width))
        << vm.type_name << std::right << std::setw(8) << vm.task_count
        << std::setw(10) << format_seconds6(exec) << std::setw(8)
        << vm_cost(exec, type).str() << '\n';
  }

  out << "model throughput (horizon " << format_seconds6(constraint.horizon_seconds())
      << "s): " << report.model_throughput << " tasks\n";
  out << "model cost: " << report.model_cost.str() << '\n';
  out << "makespan: " << format_seconds6(report.metrics.makespan_seconds) << "s\n";
  out << "billed cost: " << report.metrics.billed_cost.str() << '\n';
  for (const auto& warning : report.warnings) {
    out << "warning: " << warning << '\n';
  }
}

ordered_json constraint_json(const Constraint& constraint) {
  ordered_json j;
  if (constraint.is_budget()) {
    j["kind"] = "budget";
    j["value"] = constraint.budget_amount().str();
  } else {
    j["kind"] = "deadline";
    j["value"] = constraint.deadline_seconds();
  }
  return j;
}

void print_plan_json(std::ostream& out, const PlanReport& report,
                     const Catalog& catalog, const Constraint& constraint,
                     const PlanConfig& cfg) {
  ordered_json doc;
  doc["source"] = source_label(cfg.source);
  doc["constraint"] = constraint_json(constraint);
  doc["tasks"] = cfg.tasks;
  doc["pipeline"] = cfg.single_type ? "single" : "multi";

  ordered_json alloc = ordered_json::object();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (report.allocation.count(i) == 0) continue;
    alloc[catalog.at(i).name] = report.allocation.count(i);
  }
  doc["allocation"] = std::move(alloc);

  ordered_json vms = ordered_json::array();
  for (const auto& vm : report.plan.vms) {
    const InstanceType& type = catalog.at(*catalog.index_of(vm.type_name));
    double exec = vm_exec_time(vm.task_count, type, catalog.startup_seconds());
    vms.push_back({{"type", vm.type_name},
                   {"tasks", vm.task_count},
                   {"exec_seconds", exec},
                   {"billed_cost", vm_cost(exec, type).str()}});
  }
  doc["vms"] = std::move(vms);

  doc["metrics"] = {{"makespan_seconds", report.metrics.makespan_seconds},
                    {"billed_cost", report.metrics.billed_cost.str()},
                    {"model_throughput", report.model_throughput},
                    {"model_cost", report.model_cost.str()}};
  doc["warnings"] = report.warnings;
  out << doc.dump(2) << '\n';
}

// Writes through `sink` either to a file or to `fallback`.
int with_output(const std::string& out_path, std::ostream& fallback,
                std::ostream& err, const std::function<void(std::ostream&)>& sink) {
  if (out_path.empty()) {
    sink(fallback);
    return 0;
  }
  std::ofstream file{out_path};
  if (!file) {
    err << "error: cannot open output file '" << out_path << "'\n";
    return 1;
  }
  sink(file);
  return 0;
}

int run_plan(const PlanConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.have_budget == cfg.have_deadline) {
    throw ValidationError("exactly one of --budget and --deadline is required");
  }
  Catalog catalog = load_catalog(cfg.source);
  Constraint constraint =
      cfg.have_budget ? Constraint::budget(parse_budget_or_fail(cfg.budget_text))
                      : Constraint::deadline(cfg.deadline_seconds);

  OptimizeOptions options;
  options.nonstrict_improvement = cfg.nonstrict_improvement;
  PlanReport report = cfg.single_type
                          ? plan_single(catalog, constraint, cfg.tasks, options)
                          : plan_multi(catalog, constraint, cfg.tasks, options);

  int rc = with_output(cfg.out_path, out, err, [&](std::ostream& sink) {
    if (cfg.json) {
      print_plan_json(sink, report, catalog, constraint, cfg);
    } else {
      print_plan_text(sink, report, catalog, constraint, cfg);
    }
  });
  if (rc != 0) return rc;
  if (cfg.strict && violates_constraint(report, constraint)) {
    err << "strict: plan violates its constraint\n";
    return 3;
  }
  return 0;
}

int run_tradeoff(const SourceConfig& source, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  Catalog catalog = load_catalog(source);
  return with_output(out_path, out, err, [&](std::ostream& sink) {
    std::size_t name_width = 4;
    for (const auto& type : catalog.types()) {
      name_width = std::max(name_width, type.name.size());
    }
    int w = static_cast<int>(name_width) + 2;

    sink << "trade-off ratios for " << source_label(source)
         << " (row upgraded to column):\n";
    sink << std::left << std::setw(w) << "";
    for (const auto& type : catalog.types()) {
      sink << std::right << std::setw(w) << type.name;
    }
    sink << '\n';
    for (const auto& row : catalog.types()) {
      sink << std::left << std::setw(w) << row.name;
      for (const auto& col : catalog.types()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", tradeoff_ratio(row, col));
        sink << std::right << std::setw(w) << buf;
      }
      sink << '\n';
    }
  });
}

int run_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err) {
  Catalog catalog = load_catalog(cfg.source);

  std::vector<Constraint> grid;
  if (cfg.grid_text.empty()) {
    if (!cfg.kind.empty()) {
      throw ValidationError("--kind requires --grid");
    }
    grid = default_deadline_grid();
    for (const Constraint& c : default_budget_grid(catalog)) grid.push_back(c);
  } else {
    if (cfg.kind.empty()) {
      throw ValidationError("--grid requires --kind budget|deadline");
    }
    std::stringstream items{cfg.grid_text};
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) throw ValidationError("empty value in --grid");
      grid.push_back(cfg.kind == "budget"
                         ? Constraint::budget(parse_budget_or_fail(item))
                         : Constraint::deadline(parse_grid_seconds(item)));
    }
    if (grid.empty()) throw ValidationError("--grid holds no values");
  }

  OptimizeOptions options;
  options.nonstrict_improvement = cfg.nonstrict_improvement;
  std::vector<SweepRow> rows =
      sweep(catalog, cfg.source.scenario, grid, cfg.tasks, options);
  return with_output(cfg.out_path, out, err,
                     [&](std::ostream& sink) { write_sweep_csv(sink, rows); });
}

int run_oracle(const PlanConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.have_budget == cfg.have_deadline) {
    throw ValidationError("exactly one of --budget and --deadline is required");
  }
  Catalog catalog = load_catalog(cfg.source);

  OracleResult result;
  std::string label;
  if (cfg.have_budget) {
    Money budget = parse_budget_or_fail(cfg.budget_text);
    result = oracle_budget(catalog, budget);
    label = "budget " + budget.str();
  } else {
    result = oracle_deadline(catalog, cfg.deadline_seconds, cfg.tasks);
    label = "deadline " + format_seconds6(cfg.deadline_seconds) + "s";
  }

  return with_output(cfg.out_path, out, err, [&](std::ostream& sink) {
    sink << "exhaustive optimum for " << source_label(cfg.source) << ", " << label;
    if (!cfg.have_budget) sink << ", " << cfg.tasks << " tasks";
    sink << "\nallocation:\n";
    print_allocation(sink, result.best_alloc, catalog);
    sink << "model throughput: " << result.best_throughput << " tasks\n";
    sink << "model cost: " << result.best_cost.str() << '\n';
    sink << "explored: " << result.explored << " count vectors\n";
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"bag-of-tasks cloud planner", "botplan"};
  app.require_subcommand(1);

  PlanConfig plan_cfg;
  CLI::App* plan_cmd =
      app.add_subcommand("plan", "plan one constraint and print the result");
  add_source_options(plan_cmd, plan_cfg.source);
  plan_cmd->add_option("--tasks", plan_cfg.tasks, "number of tasks")
      ->check(CLI::PositiveNumber);
  auto* budget_opt =
      plan_cmd->add_option("--budget", plan_cfg.budget_text, "spending cap");
  auto* deadline_opt = plan_cmd->add_option("--deadline", plan_cfg.deadline_seconds,
                                            "completion deadline in seconds")
                           ->check(CLI::PositiveNumber);
  budget_opt->excludes(deadline_opt);
  deadline_opt->excludes(budget_opt);
  plan_cmd->add_flag("--single-type", plan_cfg.single_type,
                     "stop after the single-type seed");
  plan_cmd->add_flag("--strict", plan_cfg.strict,
                     "exit with code 3 when the plan violates its constraint");
  plan_cmd->add_flag("--json", plan_cfg.json, "machine-readable output");
  plan_cmd->add_flag("--compat-nonstrict-improvement",
                     plan_cfg.nonstrict_improvement,
                     "also accept throughput-neutral replacements");
  plan_cmd->add_option("--out", plan_cfg.out_path, "write output to a file");

  SourceConfig tradeoff_cfg;
  std::string tradeoff_out;
  CLI::App* tradeoff_cmd =
      app.add_subcommand("tradeoff", "print the pairwise trade-off ratio matrix");
  add_source_options(tradeoff_cmd, tradeoff_cfg);
  tradeoff_cmd->add_option("--out", tradeoff_out, "write output to a file");

  SweepConfig sweep_cfg;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "compare both pipelines over a constraint grid as CSV");
  add_source_options(sweep_cmd, sweep_cfg.source);
  sweep_cmd->add_option("--tasks", sweep_cfg.tasks, "number of tasks")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--grid", sweep_cfg.grid_text,
                        "comma-separated constraint values");
  sweep_cmd->add_option("--kind", sweep_cfg.kind, "what the grid values are")
      ->check(CLI::IsMember({"budget", "deadline"}));
  sweep_cmd->add_flag("--compat-nonstrict-improvement",
                      sweep_cfg.nonstrict_improvement,
                      "also accept throughput-neutral replacements");
  sweep_cmd->add_option("--out", sweep_cfg.out_path, "write the CSV to a file");

  PlanConfig oracle_cfg;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "exhaustively enumerate small instances for the true optimum");
  add_source_options(oracle_cmd, oracle_cfg.source);
  oracle_cmd->add_option("--tasks", oracle_cfg.tasks, "number of tasks")
      ->check(CLI::PositiveNumber);
  auto* oracle_budget_opt =
      oracle_cmd->add_option("--budget", oracle_cfg.budget_text, "spending cap");
  auto* oracle_deadline_opt =
      oracle_cmd
          ->add_option("--deadline", oracle_cfg.deadline_seconds,
                       "completion deadline in seconds")
          ->check(CLI::PositiveNumber);
  oracle_budget_opt->excludes(oracle_deadline_opt);
  oracle_deadline_opt->excludes(oracle_budget_opt);
  oracle_cmd->add_option("--out", oracle_cfg.out_path, "write output to a file");

  std::vector<const char*> argv;
  argv.push_back("botplan");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  plan_cfg.have_budget = budget_opt->count() > 0;
  plan_cfg.have_deadline = deadline_opt->count() > 0;
  oracle_cfg.have_budget = oracle_budget_opt->count() > 0;
  oracle_cfg.have_deadline = oracle_deadline_opt->count() > 0;

  try {
    if (plan_cmd->parsed()) return run_plan(plan_cfg, out, err);
    if (tradeoff_cmd->parsed()) return run_tradeoff(tradeoff_cfg, tradeoff_out, out, err);
    if (sweep_cmd->parsed()) return run_sweep(sweep_cfg, out, err);
    return run_oracle(oracle_cfg, out, err);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return 2;
  } catch (const PlannerError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace botplan
