#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcyc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tensor or matrix dimensions do not fit together.
class ShapeError : public Error {
public:
    using Error::Error;
};

class DegreeError : public Error {
public:
    using Error::Error;
};

class NotASubspaceError : public Error {
public:
    using Error::Error;
};

/// An operation was called on input that does not meet its hypotheses
/// (e.g. a twist that is not an algebra map, or a non-centroid twist).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A chain-level identity that must hold by construction failed. Always a bug
/// in the engine or a genuine inconsistency in the underlying theory.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace homcyc
