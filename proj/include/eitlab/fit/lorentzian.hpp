#pragma once

#include "eitlab/response/spectrum.hpp"

#include <span>

namespace eitlab::fit {

// value(delta) = offset - amplitude * (fwhm/2)^2 / ((delta - center)^2 + (fwhm/2)^2)
//
// amplitude > 0 describes a dip (absorbance window), amplitude < 0 a peak
// (transmission window); orientation is picked from the data.
struct LorentzianFit {
    double center = 0.0;
    double fwhm = 0.0;
    double amplitude = 0.0;
    double offset = 0.0;
    double rms_residual = 0.0;
    bool converged = false;
    int iterations = 0;
};

inline constexpr int kLorentzianMaxIterations = 200;
inline constexpr double kLorentzianRelativeTolerance = 1e-10;
inline constexpr std::size_t kLorentzianMinPoints = 7;

// Damped Gauss-Newton (Levenberg-Marquardt) on the four parameters, started
// from the globally largest excursion from the median and its half-maximum
// crossings. Throws FitDegenerate when there are fewer than 7 points or no
// extremum stands out of the noise floor. A fit that hits the iteration cap
// is returned with converged = false.
LorentzianFit fit_lorentzian(std::span<const double> x, std::span<const double> y);
LorentzianFit fit_lorentzian(const response::Spectrum& spectrum);

double lorentzian_model(const LorentzianFit& fit, double x);

}  // namespace eitlab::fit
