#pragma once

#include "eitlab/fit/linear.hpp"

namespace eitlab::fit {

// Raman coherence decay Gamma_R/2pi = intercept / 2, in Hz. A negative
// intercept is passed through and flagged.
struct RamanRate {
    double gamma_r_hz = 0.0;
    bool unphysical = false;
};

RamanRate extract_raman_rate(const LinearFit& fit);

// Effective pumping half-width W/2pi in Hz from the slope of width vs
// intensity, given Omega_C^2 = kappa * I (kappa in (rad/s)^2 per W/m^2) and
// the optical decay Gamma (rad/s):
//   W = (kappa / (2pi slope) - Gamma) / 2
// Throws UnphysicalWidth when that comes out negative, DomainError for
// non-positive slope or kappa.
double extract_pumping_width(const LinearFit& fit, double kappa, double gamma_opt);

}  // namespace eitlab::fit
