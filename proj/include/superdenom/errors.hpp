#pragma once

#include <stdexcept>
#include <string>

namespace superdenom {

// Precondition violations on public entry points.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two series whose bases differ by a vector outside the affine root lattice.
struct IncompatibleCones : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAUnit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A factor weight that became zero under a group action, or a factor weight
// with mixed-sign lattice coordinates.  Neither can occur for images of
// roots, so hitting this means the engine itself is broken.
struct DegenerateFactor : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration-shell or cross-check assertions.  Reported separately from a
// mathematical mismatch (CLI exit status 3, not 1).
struct InternalCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace superdenom
