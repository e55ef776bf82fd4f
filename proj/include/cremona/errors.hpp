#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

/// Invalid argument or violated precondition.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// A bounded backtracking search exhausted its node budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check that must hold by construction failed.
class CheckFailed : public std::logic_error {
 public:
  explicit CheckFailed(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cremona
