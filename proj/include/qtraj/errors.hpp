#ifndef QTRAJ_ERRORS_HPP
#define QTRAJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtraj {

/// Base class for all qtraj errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise unusable argument.
struct InvalidInputError : Error {
  using Error::Error;
};

/// Density not negligible at a grid boundary.
struct BoundaryViolationError : Error {
  using Error::Error;
};

/// Negative or non-finite density value.
struct InvalidDensityError : Error {
  using Error::Error;
};

/// Malformed density file (bad header, ragged rows, non-uniform times).
struct FormatError : Error {
  using Error::Error;
};

/// Frame mass drifted beyond tolerance relative to the first frame.
struct ConservationError : Error {
  using Error::Error;
};

/// Too few frames for the requested stencil.
struct InsufficientDataError : Error {
  using Error::Error;
};

/// Probability or position outside the valid range.
struct RangeError : Error {
  using Error::Error;
};

/// Requested quantile lies beyond the mass covered by the grid.
struct CoverageError : Error {
  using Error::Error;
};

/// Density below the floor where a velocity or quantile start is needed.
struct DegenerateDensityError : Error {
  using Error::Error;
};

/// Mismatched time grids, axes, or other run configuration problems.
struct ConfigurationError : Error {
  using Error::Error;
};

}  // namespace qtraj

#endif
