#pragma once

#include <stdexcept>
#include <string>

namespace ncqm {

/// A requested bound state does not exist (coupling beyond critical, or the
/// potential is too weak to bind at the requested excitation).
struct NoBoundStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterative scheme ran out of its iteration budget without converging.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// beta = 1 - eps12 - eps21 vanished; the relative-motion kinetic term is gone.
struct SingularAlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The coordinate transformation has a (numerically) singular denominator.
struct SingularTransformationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operator identity that must hold to rounding failed; signals a bug.
struct IdentityViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ncqm
