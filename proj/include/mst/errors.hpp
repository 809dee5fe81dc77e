#pragma once

#include <stdexcept>
#include <string>

namespace mst {

/// Base class for all library errors. The CLI maps the three categories
/// below onto exit codes 1 / 2 / 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or unusable input: parse failures, zero denominators,
/// real spectral points where Im z != 0 is required, bad counts. Exit code 1.
struct InputError : Error {
  using Error::Error;
};

/// The data does not belong to the class an operation requires:
/// negative Hankel determinants, missing double positivity, depth past the
/// finite rank, missing moments, Herglotz sign violations. Exit code 2.
struct ClassError : Error {
  using Error::Error;
};

/// Floating-point failure in an evaluation path. Exit code 3.
struct NumericError : Error {
  using Error::Error;
};

inline ClassError insufficient_moments(int first_missing) {
  return ClassError("insufficient moments: s_" + std::to_string(first_missing) +
                    " is required but not available");
}

}  // namespace mst
