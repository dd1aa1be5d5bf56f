#include "eitlab/fit/extract.hpp"

#include "eitlab/core/types.hpp"
#include "eitlab/errors.hpp"

namespace eitlab::fit {

RamanRate extract_raman_rate(const LinearFit& fit) {
    return {0.5 * fit.intercept, fit.intercept < 0.0};
}

double extract_pumping_width(const LinearFit& fit, double kappa, double gamma_opt) {
    if (!(fit.slope > 0.0)) {
        throw DomainError("pumping width needs a positive slope");
    }
    if (!(kappa > 0.0)) {
        throw DomainError("pumping width needs kappa > 0");
    }
    const double denominator = kappa / (core::two_pi * fit.slope);  // 2W + Gamma, rad/s
    double w = 0.5 * (denominator - gamma_opt);
    if (w < 0.0 && -w <= 1e-12 * denominator) w = 0.0;  // rounding at the boundary
    if (w < 0.0) {
        throw UnphysicalWidth("slope implies 2W + Gamma < Gamma (negative pumping width)");
    }
    return core::rad_to_hz(w);
}

}  // namespace eitlab::fit
