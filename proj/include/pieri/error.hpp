#pragma once

#include <stdexcept>

namespace pieri {

// Raised when an input violates a mathematical precondition (row bounds,
// stable range, non-member cone points, ...). The CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pieri
