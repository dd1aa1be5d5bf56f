#include "eitlab/core/basis.hpp"

#include "eitlab/errors.hpp"

#include <cmath>
#include <numbers>

namespace eitlab::core {

PolarizationBasis make_basis(double theta) { return PolarizationBasis(theta); }

double theta_for_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("mixing coefficient alpha must lie in [0, 1]");
    }
    return std::numbers::pi / 4.0 - std::asin(alpha);
}

}  // namespace eitlab::core
