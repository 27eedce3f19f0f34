#pragma once

#include <stdexcept>
#include <string>

namespace qflag {

// Bad input: malformed permutations, shapes outside a box, points off a stratum.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative method ran out of iterations or missed its certificate.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Something that the mathematics rules out happened anyway.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qflag
