#pragma once

#include "eitlab/core/types.hpp"

namespace eitlab::core {

// alpha = sin(pi/4 - theta), beta = cos(pi/4 - theta).
// theta = pi/4 is the circular sigma+/sigma- pair, theta = 0 the crossed
// linear x/y pair.
PolarizationBasis make_basis(double theta);

// Ellipticity that puts weight `alpha` on |-1> in the uncoupled state.
// Accepts alpha in [0, 1].
double theta_for_alpha(double alpha);

}  // namespace eitlab::core
