#pragma once

#include "eitlab/core/types.hpp"
#include "eitlab/fit/lorentzian.hpp"
#include "eitlab/response/medium.hpp"

#include <span>

namespace eitlab::harness {

// Everything the sweeps report for one operating point.
struct PointObservables {
    // Lorentzian FWHM of the window in Im chi (same shape as -ln T).
    double fwhm_hz = 0.0;
    // Probe transmission at delta = 0.
    double peak_transmission = 0.0;
    double delay_analytic_s = 0.0;
    double delay_envelope_s = 0.0;
    bool envelope_beyond_window = false;
    fit::LorentzianFit window_fit;
};

PointObservables measure_point(const core::DriveParameters& drive,
                               const core::PolarizationBasis& basis,
                               const core::RelaxationParameters& relax,
                               const response::MediumParameters& medium,
                               std::span<const double> grid_hz, double fmod_hz);

}  // namespace eitlab::harness
