#pragma once

#include <stdexcept>
#include <string>

namespace octoplane {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different algebras (octonion vs para-octonion).
class KindMismatchError : public Error {
 public:
  using Error::Error;
};

/// Inverse requested for a zero or null element.
class NonInvertibleError : public Error {
 public:
  using Error::Error;
};

/// Chart index not defined for the plane kind.
class UnknownChartError : public Error {
 public:
  using Error::Error;
};

/// Coordinates violate the strict domain inequality of a chart.
class ChartDomainError : public Error {
 public:
  using Error::Error;
};

/// A chart transition was requested outside the overlap of the two charts.
class OverlapError : public Error {
 public:
  using Error::Error;
};

/// A homogeneous triple has no representative in any chart of the plane.
class NotRepresentableError : public Error {
 public:
  using Error::Error;
};

/// An isometry step is not defined on the requested plane/chart, or its
/// parameters violate the normalization constraint.
class InvalidStepError : public Error {
 public:
  using Error::Error;
};

/// None of the rational extension formulas of a step applies. Cannot happen
/// for valid inputs; raised as an internal-consistency failure.
class ExtensionError : public Error {
 public:
  using Error::Error;
};

/// A tangent vector that must be non-null has g(v,v) = 0.
class NullVectorError : public Error {
 public:
  using Error::Error;
};

}  // namespace octoplane
