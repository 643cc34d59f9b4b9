#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

#include "matchpow/error.hpp"

namespace matchpow {

/// Cooperative limit on wall time and work units. Long computations call
/// charge(); once either limit is crossed every further charge throws
/// BudgetExceeded. Safe to share between threads.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;
  Budget(std::optional<std::chrono::milliseconds> time, std::optional<std::uint64_t> nodes)
      : deadline_(time ? std::optional<Clock::time_point>(Clock::now() + *time) : std::nullopt),
        node_limit_(nodes) {}

  void charge(std::uint64_t nodes = 1) {
    const std::uint64_t used = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (node_limit_ && used > *node_limit_) throw BudgetExceeded("node budget exhausted");
    // Reading the clock on every unit is measurably slow in tight loops.
    if (deadline_ && (used & 0x3FF) < nodes && Clock::now() > *deadline_) {
      throw BudgetExceeded("time budget exhausted");
    }
  }

  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

 private:
  std::optional<Clock::time_point> deadline_;
  std::optional<std::uint64_t> node_limit_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace matchpow
