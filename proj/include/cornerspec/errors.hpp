#pragma once

#include <stdexcept>
#include <string>

namespace cornerspec {

// Precondition violated by the caller (bad degree, bad face id, bad argument).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input document or complex failed validation.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iteration cap hit, degenerate geometry, non-convergence.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested problem exceeds a size guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cornerspec
