#include "eitlab/fit/linear.hpp"

#include "eitlab/errors.hpp"

#include <cmath>

namespace eitlab::fit {

LinearFit fit_linear(std::span<const WidthPoint> points) {
    const std::size_t n = points.size();
    if (n < 2) {
        throw RankDeficiency("linear fit needs at least two points, got " + std::to_string(n));
    }
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& p : points) {
        mean_x += p.intensity_w_m2;
        mean_y += p.width_hz;
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (const auto& p : points) {
        const double dx = p.intensity_w_m2 - mean_x;
        const double dy = p.width_hz - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) {
        throw RankDeficiency("all intensities are identical; slope is undetermined");
    }

    LinearFit fit;
    fit.points = n;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;

    double ssr = 0.0;
    for (const auto& p : points) {
        const double r = p.width_hz - (fit.slope * p.intensity_w_m2 + fit.intercept);
        ssr += r * r;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
    if (n > 2) {
        const double variance = ssr / static_cast<double>(n - 2);
        fit.stderr_slope = std::sqrt(variance / sxx);
        fit.stderr_intercept =
            std::sqrt(variance * (1.0 / static_cast<double>(n) + mean_x * mean_x / sxx));
    }
    return fit;
}

}  // namespace eitlab::fit
