#include "eitlab/response/delay.hpp"

#include "eitlab/errors.hpp"
#include "eitlab/response/spectrum.hpp"
#include "eitlab/response/width_model.hpp"

#include <algorithm>
#include <cmath>

namespace eitlab::response {

using core::complex;

double group_delay_analytic(const core::LinearResponse& response, double center_rad,
                            double step_hz, const MediumParameters& medium) {
    medium.validate();
    if (medium.od0 == 0.0) return 0.0;
    const double h = core::hz_to_rad(std::max(step_hz, kMinDifferenceStepHz));
    const double phase_plus = 0.5 * medium.od0 * response.chi(center_rad + h).real();
    const double phase_minus = 0.5 * medium.od0 * response.chi(center_rad - h).real();
    const double delay = (phase_plus - phase_minus) / (2.0 * h);
    if (!std::isfinite(delay)) {
        throw NumericalSingularity("group delay derivative is not finite");
    }
    return delay;
}

double group_delay_analytic(const core::DriveParameters& drive,
                            const core::PolarizationBasis& basis,
                            const core::RelaxationParameters& relax,
                            const MediumParameters& medium) {
    medium.validate();
    if (medium.od0 == 0.0) return 0.0;
    const core::LinearResponse response(drive, basis, relax);
    const double fwhm = width_model_fwhm(WidthModel::from(drive, relax));
    return group_delay_analytic(response, drive.delta_raman, fwhm / 100.0, medium);
}

EnvelopeDelay envelope_delay(const core::LinearResponse& response, double center_rad,
                             const MediumParameters& medium, double f_mod_hz,
                             double window_fwhm_hz) {
    if (!(f_mod_hz > 0.0) || !std::isfinite(f_mod_hz)) {
        throw DomainError("modulation frequency must be positive");
    }
    medium.validate();
    EnvelopeDelay result;
    result.beyond_window = f_mod_hz > window_fwhm_hz;
    if (medium.od0 == 0.0) return result;

    const double mod = core::hz_to_rad(f_mod_hz);
    const complex carrier = transfer_function(medium, response.chi(center_rad));
    const complex upper = transfer_function(medium, response.chi(center_rad + mod));
    const complex lower = transfer_function(medium, response.chi(center_rad - mod));

    // I(t) contains m Re[(H0* H+ + H0 H-*) e^{-i w t}]; its phase is the lag.
    const complex beat = std::conj(carrier) * upper + carrier * std::conj(lower);
    result.delay_s = std::arg(beat) / mod;
    if (!std::isfinite(result.delay_s)) {
        throw NumericalSingularity("envelope delay is not finite");
    }
    return result;
}

EnvelopeDelay envelope_delay(const core::DriveParameters& drive,
                             const core::PolarizationBasis& basis,
                             const core::RelaxationParameters& relax,
                             const MediumParameters& medium, double f_mod_hz) {
    const core::LinearResponse response(drive, basis, relax);
    const double fwhm = width_model_fwhm(WidthModel::from(drive, relax));
    return envelope_delay(response, drive.delta_raman, medium, f_mod_hz, fwhm);
}

}  // namespace eitlab::response
