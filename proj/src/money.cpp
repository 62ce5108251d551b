#include "botplan/money.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace botplan {

namespace {

// Largest whole-unit magnitude that still fits the micro-unit range.
constexpr std::int64_t kMaxUnits = INT64_MAX / Money::kScale - 1;

}  // namespace

std::optional<Money> Money::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;

  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }

  std::size_t int_begin = i;
  std::int64_t units = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    units = units * 10 + (text[i] - '0');
    if (units > kMaxUnits) return std::nullopt;
    ++i;
  }
  if (i == int_begin) return std::nullopt;  // requires at least one integer digit

  std::int64_t frac = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac_begin = i;
    std::int64_t scale = kScale / 10;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (scale == 0) return std::nullopt;  // more than six fractional digits
      frac += (text[i] - '0') * scale;
      scale /= 10;
      ++i;
    }
    if (i == frac_begin) return std::nullopt;  // bare trailing dot
  }
  if (i != text.size()) return std::nullopt;  // trailing garbage

  std::int64_t micros = units * kScale + frac;
  return Money::from_micros(negative ? -micros : micros);
}

std::string Money::str() const {
  std::int64_t m = micros_;
  std::string sign;
  if (m < 0) {
    sign = "-";
    m = -m;
  }
  std::int64_t units = m / kScale;
  std::int64_t frac = m % kScale;
  if (frac == 0) return sign + std::to_string(units);

  char buf[8];
  std::snprintf(buf, sizeof buf, "%06lld", static_cast<long long>(frac));
  std::string digits{buf};
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  return sign + std::to_string(units) + "." + digits;
}

std::int64_t Money::floor_div(Money divisor) const {
  if (divisor.micros_ <= 0) {
    throw std::invalid_argument("Money::floor_div requires a positive divisor");
  }
  std::int64_t q = micros_ / divisor.micros_;
  if (micros_ % divisor.micros_ != 0 && micros_ < 0) --q;
  return q;
}

}  // namespace botplan
