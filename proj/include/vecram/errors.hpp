#pragma once

#include <stdexcept>
#include <string>

namespace vecram {

// Raised when a construction runs out of ambient dimensions before reaching
// its target (distinct from "searched and found nothing").
struct AmbientError : std::runtime_error {
  explicit AmbientError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive search would exceed its configured budget.
// Searches never truncate silently.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vecram
