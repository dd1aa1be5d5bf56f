#pragma once

#include <stdexcept>
#include <string>

namespace eitlab {

// Every failure of a physics or fit routine derives from this, so callers
// (the CLI in particular) can map the whole family onto one exit code.
class PhysicsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class DegenerateSteadyState : public PhysicsError {
public:
    explicit DegenerateSteadyState(int null_dimension)
        : PhysicsError("steady state is not unique: null-space dimension " +
                       std::to_string(null_dimension)),
          null_dimension_(null_dimension) {}

    int null_dimension() const noexcept { return null_dimension_; }

private:
    int null_dimension_;
};

class NumericalSingularity : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class FitDegenerate : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class RankDeficiency : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class UnphysicalWidth : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

}  // namespace eitlab
