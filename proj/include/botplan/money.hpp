#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace botplan {

/// Exact decimal money amount stored as an integer count of micro-units
/// (six fractional digits). Keeps budget arithmetic free of floating point,
/// so branches that compare a price against a remaining budget for exact
/// equality behave the same on every platform.
class Money {
 public:
  static constexpr std::int64_t kScale = 1'000'000;

  constexpr Money() = default;

  static constexpr Money from_micros(std::int64_t micros) { return Money{micros}; }
  static constexpr Money from_units(std::int64_t units) { return Money{units * kScale}; }
  static constexpr Money zero() { return Money{}; }

  /// Parses a plain decimal like "16", "0.077" or "-2.5". Returns nullopt for
  /// anything malformed or not exactly representable in six fractional digits.
  static std::optional<Money> parse(std::string_view text);

  constexpr std::int64_t micros() const { return micros_; }
  double to_double() const { return static_cast<double>(micros_) / kScale; }

  /// Decimal rendering with trailing fractional zeros trimmed:
  /// 18 -> "18", 0.077 -> "0.077", 1.750000 -> "1.75".
  std::string str() const;

  constexpr Money operator+(Money other) const { return Money{micros_ + other.micros_}; }
  constexpr Money operator-(Money other) const { return Money{micros_ - other.micros_}; }
  constexpr Money operator*(std::int64_t count) const { return Money{micros_ * count}; }
  constexpr Money operator-() const { return Money{-micros_}; }
  Money& operator+=(Money other) {
    micros_ += other.micros_;
    return *this;
  }
  Money& operator-=(Money other) {
    micros_ -= other.micros_;
    return *this;
  }

  /// floor(*this / divisor); divisor must be positive. This is "how many
  /// whole VMs of a given hourly price does this amount buy".
  std::int64_t floor_div(Money divisor) const;

  friend constexpr bool operator==(Money, Money) = default;
  friend constexpr auto operator<=>(Money, Money) = default;

 private:
  constexpr explicit Money(std::int64_t micros) : micros_{micros} {}

  std::int64_t micros_ = 0;
};

constexpr Money operator*(std::int64_t count, Money amount) { return amount * count; }

}  // namespace botplan
