#pragma once

#include <stdexcept>
#include <string>

namespace lathop {

// Caller violated a documented requirement of an operation.
struct precondition_error : std::invalid_argument {
  explicit precondition_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A tolerance that should hold by construction was breached.
struct numerical_error : std::runtime_error {
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed configuration or serialized input.
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lathop
