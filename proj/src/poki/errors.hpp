#pragma once

#include <stdexcept>
#include <string>

namespace poki {

/// Raised when a Lipschitz estimate does not exist for the given data
/// (duplicate inputs with distinct outputs make the pairwise slope unbounded).
class estimate_undefined_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an objective or input value is NaN/inf where a finite value is required.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File / parse failures; carries a row index where applicable.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace poki
