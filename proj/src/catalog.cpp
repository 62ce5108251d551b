#include "botplan/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>
#include <utility>

#include "botplan/errors.hpp"

namespace botplan {

namespace {

constexpr std::string_view kHeader = "name,cost_per_hour,seconds_per_task";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

[[noreturn]] void fail_row(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

double parse_positive_seconds(std::string_view field, int line_no) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    fail_row(line_no, "invalid seconds_per_task '" + std::string{field} + "'");
  }
  if (!(value > 0.0) || !std::isfinite(value)) {
    fail_row(line_no, "seconds_per_task must be positive");
  }
  return value;
}

// Shortest decimal that round-trips the double, e.g. 87.37 -> "87.37".
std::string format_seconds(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  assert(ec == std::errc{});
  return std::string(buf, end);
}

InstanceType make_type(const char* name, const char* cost, double seconds_per_task) {
  auto parsed = Money::parse(cost);
  assert(parsed.has_value());
  return InstanceType{name, *parsed, seconds_per_task};
}

}  // namespace

Catalog::Catalog(std::vector<InstanceType> types, double startup_seconds)
    : types_{std::move(types)}, startup_seconds_{startup_seconds} {
  if (types_.empty()) {
    throw ValidationError("catalog must contain at least one instance type");
  }
  if (!(startup_seconds_ >= 0.0) || startup_seconds_ >= kSecondsPerBilledHour) {
    throw ValidationError("startup_seconds must lie in [0, 3600)");
  }
  for (const auto& type : types_) {
    if (type.name.empty()) {
      throw ValidationError("instance type name must not be empty");
    }
    if (type.name.find_first_of(",\n\r") != std::string::npos) {
      throw ValidationError("instance type name '" + type.name +
                            "' must not contain commas or line breaks");
    }
    if (type.cost_per_hour <= Money::zero()) {
      throw ValidationError("cost_per_hour must be positive for '" + type.name + "'");
    }
    if (!(type.seconds_per_task > 0.0) || !std::isfinite(type.seconds_per_task)) {
      throw ValidationError("seconds_per_task must be positive for '" + type.name + "'");
    }
  }
  for (std::size_t i = 0; i < types_.size(); ++i) {
    for (std::size_t j = i + 1; j < types_.size(); ++j) {
      if (types_[i].name == types_[j].name) {
        throw ValidationError("duplicate instance type name '" + types_[i].name + "'");
      }
    }
  }
}

std::optional<std::size_t> Catalog::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < types_.size(); ++i) {
    if (types_[i].name == name) return i;
  }
  return std::nullopt;
}

Catalog Catalog::with_startup(double startup_seconds) const {
  return Catalog{types_, startup_seconds};
}

Catalog parse_catalog(std::istream& in, double startup_seconds) {
  std::vector<InstanceType> types;
  std::string line;
  int line_no = 0;
  bool header_seen = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;

    if (!header_seen) {
      auto fields = split_fields(text);
      std::string joined;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) joined += ',';
        joined += std::string{fields[i]};
      }
      if (joined != kHeader) {
        fail_row(line_no, "expected header '" + std::string{kHeader} + "'");
      }
      header_seen = true;
      continue;
    }

    auto fields = split_fields(text);
    if (fields.size() != 3) {
      fail_row(line_no, "expected 3 fields, got " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) fail_row(line_no, "instance type name must not be empty");

    auto cost = Money::parse(fields[1]);
    if (!cost) fail_row(line_no, "invalid cost_per_hour '" + std::string{fields[1]} + "'");
    if (*cost <= Money::zero()) fail_row(line_no, "cost_per_hour must be positive");

    double seconds = parse_positive_seconds(fields[2], line_no);

    std::string name{fields[0]};
    for (const auto& existing : types) {
      if (existing.name == name) {
        fail_row(line_no, "duplicate instance type '" + name + "'");
      }
    }
    types.push_back(InstanceType{std::move(name), *cost, seconds});
  }

  if (!header_seen) {
    throw ParseError("missing header '" + std::string{kHeader} + "'");
  }
  return Catalog{std::move(types), startup_seconds};
}

Catalog parse_catalog(std::string_view text, double startup_seconds) {
  std::istringstream in{std::string{text}};
  return parse_catalog(in, startup_seconds);
}

std::string serialize_catalog(const Catalog& catalog) {
  std::string out{kHeader};
  out += '\n';
  for (const auto& type : catalog.types()) {
    out += type.name;
    out += ',';
    out += type.cost_per_hour.str();
    out += ',';
    out += format_seconds(type.seconds_per_task);
    out += '\n';
  }
  return out;
}

Catalog builtin_scenario(int id) {
  switch (id) {
    case 1:
      // Halving the task time always doubles the price.
      return Catalog{{
          make_type("it1", "1", 32.0),
          make_type("it2", "2", 16.0),
          make_type("it3", "4", 8.0),
          make_type("it4", "8", 4.0),
          make_type("it5", "16", 2.0),
      }};
    case 2:
      // Each price step buys less than a doubling of speed.
      return Catalog{{
          make_type("it1", "1", 32.0),
          make_type("it2", "2", 18.0),
          make_type("it3", "4", 10.0),
          make_type("it4", "8", 6.0),
          make_type("it5", "16", 4.0),
      }};
    case 3:
      // Each price step buys more than a doubling of speed.
      return Catalog{{
          make_type("it1", "1", 32.0),
          make_type("it2", "2", 15.0),
          make_type("it3", "4", 7.0),
          make_type("it4", "8", 3.0),
          make_type("it5", "16", 1.0),
      }};
    case 4:
      // Measured single-task times for five real machine configurations.
      return Catalog{{
          make_type("M3.Medium", "0.077", 87.37),
          make_type("C3.Large", "0.12", 25.33),
          make_type("M3.Large", "0.154", 27.08),
          make_type("C3.Xlarge", "0.239", 12.7),
          make_type("M3.Xlarge", "0.308", 13.79),
      }};
    default:
      throw ValidationError("unknown scenario id " + std::to_string(id) +
                            " (expected 1 to 4)");
  }
}

std::string_view scenario_label(int id) {
  switch (id) {
    case 1: return "fair trade-off ladder";
    case 2: return "cost-ineffective ladder";
    case 3: return "cost-effective ladder";
    case 4: return "measured machine mix";
    default: throw ValidationError("unknown scenario id " + std::to_string(id));
  }
}

double tradeoff_ratio(const InstanceType& cheap, const InstanceType& expensive) {
  const double performance_gain = cheap.seconds_per_task / expensive.seconds_per_task;
  const double cost_increase = static_cast<double>(expensive.cost_per_hour.micros()) /
                               static_cast<double>(cheap.cost_per_hour.micros());
  return performance_gain / cost_increase;
}

}  // namespace botplan
