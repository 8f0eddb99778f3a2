#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace liechar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnsupportedSpec : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("enumeration budget exceeded: need " + std::to_string(required) +
              " elements, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// Raised when an internal consistency check fails; these are bugs, not user errors.
class InconsistentData : public Error {
 public:
  using Error::Error;
};

}  // namespace liechar
