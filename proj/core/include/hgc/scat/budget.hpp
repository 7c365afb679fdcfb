#pragma once

#include <atomic>
#include <cstdint>
#include <limits>

namespace hgc {

// Step counter shared by the exhaustive searches. A search calls charge() once
// per candidate it inspects; exceeding the limit or a cancel() request raises
// BudgetExceeded. Safe to share between threads.
class Budget {
 public:
  static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();
  static constexpr std::uint64_t kDefault = 50'000'000;

  explicit Budget(std::uint64_t limit = kDefault) : limit_(limit) {}
  Budget(const Budget&) = delete;
  Budget& operator=(const Budget&) = delete;

  void charge(std::uint64_t steps = 1);
  void cancel() { cancelled_.store(true, std::memory_order_relaxed); }
  bool cancelled() const { return cancelled_.load(std::memory_order_relaxed); }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> cancelled_{false};
};

// Charges `budget` if non-null.
inline void charge(Budget* budget, std::uint64_t steps = 1) {
  if (budget != nullptr) budget->charge(steps);
}

}  // namespace hgc
