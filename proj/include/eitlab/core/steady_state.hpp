#pragma once

#include "eitlab/core/types.hpp"

namespace eitlab::core {

// Singular values below this fraction of the largest count toward the null
// space of the Liouvillian.
inline constexpr double kNullSpaceTolerance = 1e-11;

// Unique unit-trace rho with L vec(rho) = 0. Throws DegenerateSteadyState
// when the null space is not one-dimensional. The returned matrix is
// hermitized and trace-normalized.
DensityMatrix steady_state(const Liouvillian& liouvillian);

// ||L vec(rho)|| / ||L||_2, the scale-free residual used for acceptance.
double relative_residual(const Liouvillian& liouvillian, const DensityMatrix& rho);

// Number of singular values of L below kNullSpaceTolerance * sigma_max.
int null_space_dimension(const Liouvillian& liouvillian);

}  // namespace eitlab::core
