#pragma once

#include <stdexcept>
#include <string>

namespace probgeo {

/// Base class for all probgeo errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter violates its family constraint (sigma <= 0, a >= b, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A probability, epsilon, or order argument lies outside its admissible range.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// A map required to be invertible fails its round-trip check.
class NonInvertible : public Error {
public:
    using Error::Error;
};

/// Too few (distinct) observations to carry out the construction.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// An input value lies outside the domain interval of a chart.
class DomainViolation : public Error {
public:
    using Error::Error;
};

/// A coordinate mean sits on the boundary of (0,1); the pullback is meaningless.
class BoundaryValue : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature could not reach the requested absolute tolerance.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

/// The chart exposes no usable derivative at the requested point.
class DerivativeUnavailable : public Error {
public:
    using Error::Error;
};

/// A sample has zero coordinate variance (all observations equal).
class DegenerateSample : public Error {
public:
    using Error::Error;
};

}  // namespace probgeo
