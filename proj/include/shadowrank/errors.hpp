#pragma once

#include <stdexcept>
#include <string>

namespace shadowrank {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid scalar parameter (non-positive size, bad angle, ...).
struct ParameterError : Error {
    using Error::Error;
};

/// Source and observer domains touch or come closer than the guard distance.
struct OverlapError : Error {
    using Error::Error;
};

/// Operation requested for the wrong ambient dimension.
struct DimensionError : Error {
    using Error::Error;
};

/// Kernel evaluated at zero separation.
struct SingularityError : Error {
    using Error::Error;
};

/// Quadrature refinement or an iterative scheme failed to converge.
struct ConvergenceError : Error {
    using Error::Error;
};

/// Dense representation requested beyond the configured entry cap.
struct SizeError : Error {
    using Error::Error;
};

/// Vector/matrix operand has an incompatible shape.
struct ShapeError : Error {
    using Error::Error;
};

/// Rank query below the reliable floor of a spectrum.
struct FloorError : Error {
    using Error::Error;
};

/// Knee detection on a curve without a knee.
struct DegenerateError : Error {
    using Error::Error;
};

/// Geometry unsupported by the requested operation (non-convex, non-flat,
/// non-uniform sampling, not a line pair, ...).
struct GeometryError : Error {
    using Error::Error;
};

/// Requested data (singular vectors, band points) not available.
struct MissingDataError : Error {
    using Error::Error;
};

/// Malformed configuration file or unknown experiment name.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace shadowrank
