#pragma once

#include <stdexcept>

namespace qss {

/// Malformed or out-of-contract input. Maps to CLI exit code 2.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A violated operation precondition (e.g. a non-semisymmetric source where
/// one is required). A subclass of input_error; CLI exit code 2.
class precondition_error : public input_error {
 public:
  using input_error::input_error;
};

/// A search or sweep exceeded its configured budget. CLI exit code 3.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qss
