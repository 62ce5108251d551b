#pragma once

#include "botplan/catalog.hpp"
#include "botplan/errors.hpp"
#include "botplan/money.hpp"

namespace botplan {

/// The single hard limit a plan must respect: either a spending cap or a
/// completion deadline, never both.
class Constraint {
 public:
  enum class Kind { budget, deadline };

  static Constraint budget(Money amount) {
    Constraint c;
    c.kind_ = Kind::budget;
    c.budget_ = amount;
    return c;
  }

  static Constraint deadline(double seconds) {
    Constraint c;
    c.kind_ = Kind::deadline;
    c.deadline_seconds_ = seconds;
    return c;
  }

  Kind kind() const { return kind_; }
  bool is_budget() const { return kind_ == Kind::budget; }
  bool is_deadline() const { return kind_ == Kind::deadline; }

  Money budget_amount() const {
    if (!is_budget()) throw ValidationError("constraint carries no budget");
    return budget_;
  }

  double deadline_seconds() const {
    if (!is_deadline()) throw ValidationError("constraint carries no deadline");
    return deadline_seconds_;
  }

  /// Planning window used for capacity math: one billed hour under a
  /// budget, the deadline itself otherwise.
  double horizon_seconds() const {
    return is_budget() ? kSecondsPerBilledHour : deadline_seconds_;
  }

 private:
  Constraint() = default;

  Kind kind_ = Kind::budget;
  Money budget_;
  double deadline_seconds_ = 0.0;
};

}  // namespace botplan
