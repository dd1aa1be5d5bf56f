#pragma once

#include "eitlab/core/susceptibility.hpp"
#include "eitlab/core/types.hpp"
#include "eitlab/response/medium.hpp"

namespace eitlab::response {

// Finite-difference step for the dispersion slope: window FWHM / 100,
// never below this.
inline constexpr double kMinDifferenceStepHz = 1.0;

// d phi / d delta at drive.delta_raman, with phi = (od0/2) Re chi. Central
// difference, step from the width law. Seconds.
double group_delay_analytic(const core::DriveParameters& drive,
                            const core::PolarizationBasis& basis,
                            const core::RelaxationParameters& relax,
                            const MediumParameters& medium);

double group_delay_analytic(const core::LinearResponse& response, double center_rad,
                            double step_hz, const MediumParameters& medium);

struct EnvelopeDelay {
    double delay_s = 0.0;
    // f_mod is wider than the transparency window: the number is a phase
    // lag but no longer a group delay.
    bool beyond_window = false;
};

// Delay of a sinusoidal intensity modulation at f_mod_hz. The carrier at
// drive.delta_raman and sidebands at +-f_mod go through the cell transfer
// function; the phase of the beat term at f_mod in the output intensity,
// divided by 2 pi f_mod, is the delay. Exact in the modulation depth.
EnvelopeDelay envelope_delay(const core::DriveParameters& drive,
                             const core::PolarizationBasis& basis,
                             const core::RelaxationParameters& relax,
                             const MediumParameters& medium, double f_mod_hz);

EnvelopeDelay envelope_delay(const core::LinearResponse& response, double center_rad,
                             const MediumParameters& medium, double f_mod_hz,
                             double window_fwhm_hz);

}  // namespace eitlab::response
