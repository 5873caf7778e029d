#pragma once

#include <stdexcept>
#include <string>

namespace hessenberg {

// Malformed user input (CLI specs, job options).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A size guard would be exceeded and no override was requested.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical invariant that the construction guarantees was violated,
// e.g. an inconsistent affine system on a nonempty cell.  Never swallowed.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hessenberg
