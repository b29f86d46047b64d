#pragma once

#include <stdexcept>
#include <string>

namespace gencomp {

class InvalidSeedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The seed prefix is shorter than the requested order.
class InsufficientSeedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact division left a remainder. Never a valid state; signals a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EnumerationTooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gencomp
