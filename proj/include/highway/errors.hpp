#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace highway {

/// Malformed or illegal instance data. Carries the offending customer when
/// one is to blame.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what, std::optional<std::size_t> customer = std::nullopt)
      : std::runtime_error(what), customer_(customer) {}

  std::optional<std::size_t> customer() const { return customer_; }

 private:
  std::optional<std::size_t> customer_;
};

/// A price vector violates the constraint of the chosen price model.
class ConstraintError : public std::runtime_error {
 public:
  ConstraintError(const std::string& what, int item) : std::runtime_error(what), item_(item) {}
  int item() const { return item_; }

 private:
  int item_;
};

/// An exhaustive routine was asked to run beyond its enumeration cap.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace highway
