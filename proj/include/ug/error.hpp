#pragma once

#include <stdexcept>
#include <string>

namespace ug {

// Base class for all domain errors. CLI maps these to exit code 2,
// failed checks (which are reported, not thrown) to exit code 1.
struct AlgebraError : std::runtime_error {
    explicit AlgebraError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotAGroup : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotASubgroup : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotAGSet : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotEquivariant : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct GroupMismatch : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct ShapeMismatch : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct ObjectMismatch : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct IncompatibleActions : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NoWitnessG0 : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NoSolution : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotARing : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotAnIdeal : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotASubfunctor : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct WellDefinednessFailure : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct UnsupportedFunctorShape : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct SizeGuardExceeded : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct InputError : AlgebraError {
    using AlgebraError::AlgebraError;
};

} // namespace ug
