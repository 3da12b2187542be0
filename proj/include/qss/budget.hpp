#pragma once

#include <cstdint>
#include <string>

#include "qss/errors.hpp"

namespace qss {

/// Candidate-visit budget shared by the brute-force searches. Searches charge
/// one unit per candidate visited and fail with budget_error once the limit
/// is crossed; bulk guards fail fast before starting hopeless iterations.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  Budget() = default;
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  std::uint64_t limit() const { return limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t remaining() const { return used_ >= limit_ ? 0 : limit_ - used_; }

  void charge(std::uint64_t visits = 1) {
    used_ += visits;
    if (used_ > limit_) {
      throw budget_error("budget exceeded: " + std::to_string(used_) + " visits > limit " +
                         std::to_string(limit_));
    }
  }

  /// Fail fast when `upcoming` candidate visits would not fit.
  void require_headroom(std::uint64_t upcoming) const {
    if (upcoming > remaining()) {
      throw budget_error("budget exceeded: search space of " + std::to_string(upcoming) +
                         " candidates > remaining budget " + std::to_string(remaining()));
    }
  }

 private:
  std::uint64_t limit_ = kDefaultLimit;
  std::uint64_t used_ = 0;
};

/// base^exp saturating at 2^63 (large enough to trip any sane budget).
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace qss
