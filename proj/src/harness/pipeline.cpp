#include "eitlab/harness/pipeline.hpp"

#include "eitlab/core/susceptibility.hpp"
#include "eitlab/errors.hpp"
#include "eitlab/response/delay.hpp"
#include "eitlab/response/spectrum.hpp"
#include "eitlab/response/width_model.hpp"

#include <cmath>

namespace eitlab::harness {

PointObservables measure_point(const core::DriveParameters& drive,
                               const core::PolarizationBasis& basis,
                               const core::RelaxationParameters& relax,
                               const response::MediumParameters& medium,
                               std::span<const double> grid_hz, double fmod_hz) {
    medium.validate();
    const core::LinearResponse response(drive, basis, relax);

    // Im chi has the shape of -ln T but stays fittable for an empty cell.
    response::Spectrum absorbance;
    absorbance.kind = response::SpectrumKind::kAbsorbance;
    absorbance.delta_hz.assign(grid_hz.begin(), grid_hz.end());
    for (const core::complex& c : response::chi_scan(response, grid_hz)) {
        absorbance.value.push_back(c.imag());
    }

    PointObservables out;
    out.window_fit = fit::fit_lorentzian(absorbance);
    if (!out.window_fit.converged) {
        throw FitDegenerate("Lorentzian fit of the transparency window did not converge");
    }
    out.fwhm_hz = out.window_fit.fwhm;
    out.peak_transmission = std::exp(-medium.od0 * response.chi(0.0).imag());

    const double model_fwhm = response::width_model_fwhm(response::WidthModel::from(drive, relax));
    out.delay_analytic_s = response::group_delay_analytic(response, 0.0, model_fwhm / 100.0, medium);
    const response::EnvelopeDelay envelope =
        response::envelope_delay(response, 0.0, medium, fmod_hz, model_fwhm);
    out.delay_envelope_s = envelope.delay_s;
    out.envelope_beyond_window = envelope.beyond_window;
    return out;
}

}  // namespace eitlab::harness
