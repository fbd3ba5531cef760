#pragma once

#include <stdexcept>
#include <string>

namespace majext {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vectors of different lengths were combined.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A constraint set is empty, or a result could not be placed inside it.
class FeasibilityError : public Error {
public:
    using Error::Error;
};

/// Input outside the domain of an operation (bad n, c, alpha, unsorted vector, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A formula branch that is deliberately not implemented.
class UnsupportedCase : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured size cap.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// A degree sequence has no simple (connected) realization.
class RealizationError : public Error {
public:
    using Error::Error;
};

} // namespace majext
