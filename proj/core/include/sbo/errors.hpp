#pragma once

#include <stdexcept>
#include <string>

namespace sbo {

/// Grid or data too coarse to represent the requested object.
class ResolutionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Physical or numerical parameter outside the admissible set.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested continuation regime is not covered by the method (s <= 1/3).
class InfeasibleRegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sbo
