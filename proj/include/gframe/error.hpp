#pragma once

#include <stdexcept>
#include <string>

namespace gframe {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two objects live on different groups or spaces.
struct GroupMismatch : Error {
    explicit GroupMismatch(const std::string& msg) : Error(msg) {}
};

/// Binary operation on objects expressed in different bases.
struct BasisMismatch : Error {
    explicit BasisMismatch(const std::string& msg) : Error(msg) {}
};

/// Coordinate or slot index out of range, bad shapes, invalid parameters.
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

/// Exhaustive enumeration would exceed the configured cap.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

/// State lacks the alignability property required by the operation.
struct NotAlignable : Error {
    explicit NotAlignable(const std::string& msg) : Error(msg) {}
};

/// Input vector is not supported on the physical subspace.
struct NotPhysical : Error {
    explicit NotPhysical(const std::string& msg) : Error(msg) {}
};

/// Operator fails a structural precondition (hermiticity, normality, unitarity, symmetry).
struct BadOperator : Error {
    explicit BadOperator(const std::string& msg) : Error(msg) {}
};

}  // namespace gframe
