#pragma once

#include <stdexcept>
#include <string>

namespace ah {

// Input violates a documented precondition of a mathematical operation.
using domain_error = std::domain_error;

// Computation would exceed the desk-scale limits this library supports.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structure the library does not handle (cyclic quivers, wild graphs).
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ah
