#pragma once

#include <stdexcept>
#include <string>

namespace positroid {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad pattern string, wrong sizes, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A tuple of subsets that fails the juggling condition at vertex `vertex`
// because `element - 1` is missing from the next entry.
class PatternViolation : public InvalidInput {
 public:
  PatternViolation(int vertex, int element)
      : InvalidInput("decrement condition violated at vertex " +
                     std::to_string(vertex) + ", element " +
                     std::to_string(element)),
        vertex_(vertex),
        element_(element) {}

  int vertex() const noexcept { return vertex_; }
  int element() const noexcept { return element_; }

 private:
  int vertex_;
  int element_;
};

// A configured cap (basis size, degree, term count, enumeration bound) was hit.
// Computations never silently truncate; they throw this instead.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// The monomial has a factor that vanishes identically on the fiber, so it is
// zero in the quotient ring and has no admissible normal form.
class ZeroInQuotient : public Error {
 public:
  using Error::Error;
};

}  // namespace positroid
