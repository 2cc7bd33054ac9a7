#pragma once

#include <stdexcept>
#include <string>

namespace garnir {

// Thrown when an enumeration would exceed a configured safety cap.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation is invoked before its prerequisite holds,
// e.g. querying goodness of a pair that is not useful.
struct precondition_error : std::logic_error {
  explicit precondition_error(const std::string& what) : std::logic_error(what) {}
};

// Thrown when a mathematical identity that must hold fails to hold.
// Always indicates a defect, never bad user input.
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace garnir
