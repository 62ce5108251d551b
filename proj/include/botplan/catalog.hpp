#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "botplan/money.hpp"

namespace botplan {

inline constexpr double kDefaultStartupSeconds = 10.0;
inline constexpr double kSecondsPerBilledHour = 3600.0;

/// One rentable machine configuration: hourly price and how long a single
/// task of the homogeneous workload takes on it.
struct InstanceType {
  std::string name;
  Money cost_per_hour;
  double seconds_per_task = 0.0;
};

/// Ordered list of instance types plus the per-VM startup overhead. The
/// position of a type is meaningful: it is the tie-break of last resort
/// everywhere downstream.
class Catalog {
 public:
  explicit Catalog(std::vector<InstanceType> types,
                   double startup_seconds = kDefaultStartupSeconds);

  const std::vector<InstanceType>& types() const { return types_; }
  std::size_t size() const { return types_.size(); }
  const InstanceType& at(std::size_t index) const { return types_.at(index); }
  double startup_seconds() const { return startup_seconds_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Copy with a different startup overhead, same types.
  Catalog with_startup(double startup_seconds) const;

 private:
  std::vector<InstanceType> types_;
  double startup_seconds_ = kDefaultStartupSeconds;
};

/// Reads a catalog from CSV with header "name,cost_per_hour,seconds_per_task".
/// Lines starting with '#' and blank lines are skipped. Malformed rows,
/// duplicate names and non-positive numbers raise ParseError with the line
/// number; an empty type list raises ValidationError.
Catalog parse_catalog(std::istream& in,
                      double startup_seconds = kDefaultStartupSeconds);
Catalog parse_catalog(std::string_view text,
                      double startup_seconds = kDefaultStartupSeconds);

/// Inverse of parse_catalog: header plus one row per type, exact decimals.
std::string serialize_catalog(const Catalog& catalog);

/// The four built-in evaluation catalogs (ids 1 to 4). 1 to 3 are synthetic
/// five-type ladders with different price/performance trade-offs; 4 carries
/// measured values for five real machine configurations.
Catalog builtin_scenario(int id);

/// Short human label for a built-in catalog id.
std::string_view scenario_label(int id);

/// Performance gain divided by cost increase when switching one VM from
/// `cheap` to `expensive`: values above 1 mean the pricier type does more
/// work per money unit, below 1 it does less.
double tradeoff_ratio(const InstanceType& cheap, const InstanceType& expensive);

}  // namespace botplan
