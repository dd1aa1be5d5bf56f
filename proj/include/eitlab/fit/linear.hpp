#pragma once

#include <span>
#include <vector>

namespace eitlab::fit {

struct WidthPoint {
    double intensity_w_m2 = 0.0;
    double width_hz = 0.0;
};

// width = slope * intensity + intercept. Units follow the inputs:
// slope in Hz/(W/m^2), intercept in Hz.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double stderr_slope = 0.0;
    double stderr_intercept = 0.0;
    double r_squared = 1.0;
    std::size_t points = 0;
};

// Ordinary least squares. Standard errors come from the residual variance
// with n - 2 degrees of freedom (zero for an exact two-point line).
// Throws RankDeficiency with fewer than two distinct intensities.
LinearFit fit_linear(std::span<const WidthPoint> points);

}  // namespace eitlab::fit
