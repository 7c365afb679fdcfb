#include "hgc/scat/budget.hpp"

#include <string>

#include "hgc/scat/errors.hpp"

namespace hgc {

void Budget::charge(std::uint64_t steps) {
  if (cancelled()) throw BudgetExceeded("search cancelled");
  auto before = used_.fetch_add(steps, std::memory_order_relaxed);
  if (limit_ != kUnlimited && before + steps > limit_)
    throw BudgetExceeded("step budget of " + std::to_string(limit_) + " exceeded");
}

}  // namespace hgc
