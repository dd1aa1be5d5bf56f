#include "eitlab/fit/lorentzian.hpp"

#include "eitlab/errors.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace eitlab::fit {

namespace {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

enum Param { kCenter = 0, kFwhm = 1, kAmplitude = 2, kOffset = 3 };

double median(std::vector<double> v) {
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    if (v.size() % 2 == 1) return *mid;
    const double upper = *mid;
    const double lower = *std::max_element(v.begin(), mid);
    return 0.5 * (lower + upper);
}

// Robust scale of point-to-point noise from second differences.
double noise_floor(std::span<const double> y) {
    std::vector<double> d2;
    d2.reserve(y.size());
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        d2.push_back(std::abs(y[i + 1] - 2.0 * y[i] + y[i - 1]));
    }
    return 1.4826 * median(std::move(d2)) / std::sqrt(6.0);
}

double evaluate(const Vec4& p, double x) {
    const double hw = 0.5 * p(kFwhm);
    const double u = x - p(kCenter);
    return p(kOffset) - p(kAmplitude) * hw * hw / (u * u + hw * hw);
}

// Jacobian row of the model with respect to (center, fwhm, amplitude, offset).
Eigen::RowVector4d gradient(const Vec4& p, double x) {
    const double hw = 0.5 * p(kFwhm);
    const double u = x - p(kCenter);
    const double denom = u * u + hw * hw;
    const double shape = hw * hw / denom;
    Eigen::RowVector4d g;
    g(kCenter) = -p(kAmplitude) * 2.0 * u * hw * hw / (denom * denom);
    g(kFwhm) = -p(kAmplitude) * hw * u * u / (denom * denom);
    g(kAmplitude) = -shape;
    g(kOffset) = 1.0;
    return g;
}

double sum_squares(const Vec4& p, std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - evaluate(p, x[i]);
        s += r * r;
    }
    return s;
}

// Linear interpolation of where y crosses `level` between samples a and b.
double crossing(std::span<const double> x, std::span<const double> y, std::size_t a,
                std::size_t b, double level) {
    const double t = (level - y[a]) / (y[b] - y[a]);
    return x[a] + t * (x[b] - x[a]);
}

Vec4 initial_guess(std::span<const double> x, std::span<const double> y) {
    const double baseline = median(std::vector<double>(y.begin(), y.end()));
    std::size_t peak = 0;
    double excursion = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double e = std::abs(y[i] - baseline);
        if (e > excursion) {
            excursion = e;
            peak = i;
        }
    }
    const double noise = noise_floor(y);
    if (!(excursion > 0.0) || !(excursion > 10.0 * noise)) {
        throw FitDegenerate("no extremum stands out of the noise floor");
    }

    const double amplitude = baseline - y[peak];
    const double half = baseline - 0.5 * amplitude;
    const double sign = amplitude > 0.0 ? 1.0 : -1.0;  // dip: values below `half` are inside

    double left = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = peak; i > 0; --i) {
        if (sign * (y[i - 1] - half) >= 0.0) {
            left = crossing(x, y, i, i - 1, half);
            break;
        }
    }
    double right = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = peak; i + 1 < y.size(); ++i) {
        if (sign * (y[i + 1] - half) >= 0.0) {
            right = crossing(x, y, i, i + 1, half);
            break;
        }
    }

    double fwhm;
    if (std::isfinite(left) && std::isfinite(right)) {
        fwhm = right - left;
    } else if (std::isfinite(left)) {
        fwhm = 2.0 * (x[peak] - left);
    } else if (std::isfinite(right)) {
        fwhm = 2.0 * (right - x[peak]);
    } else {
        fwhm = 0.25 * (x.back() - x.front());
    }
    if (!(fwhm > 0.0)) {
        // Single-sample extremum: fall back to one grid spacing.
        fwhm = std::abs(x[std::min(peak + 1, x.size() - 1)] - x[peak == 0 ? 0 : peak - 1]);
    }
    return Vec4(x[peak], fwhm, amplitude, baseline);
}

}  // namespace

double lorentzian_model(const LorentzianFit& fit, double x) {
    return evaluate(Vec4(fit.center, fit.fwhm, fit.amplitude, fit.offset), x);
}

LorentzianFit fit_lorentzian(std::span<const double> x, std::span<const double> y) {
    // A sum of a few hundred squares carries rounding near 1e-14 relative.
    constexpr double kResolvableCostFraction = 1e-14;

    if (x.size() != y.size()) {
        throw FitDegenerate("abscissa and ordinate differ in length");
    }
    if (x.size() < kLorentzianMinPoints) {
        throw FitDegenerate("Lorentzian fit needs at least 7 points");
    }

    Vec4 p = initial_guess(x, y);
    double cost = sum_squares(p, x, y);
    double lambda = 1e-3;
    bool converged = false;
    int iteration = 0;

    while (iteration < kLorentzianMaxIterations && !converged) {
        ++iteration;
        Mat4 jtj = Mat4::Zero();
        Vec4 jtr = Vec4::Zero();
        for (std::size_t i = 0; i < x.size(); ++i) {
            const Eigen::RowVector4d g = gradient(p, x[i]);
            const double r = y[i] - evaluate(p, x[i]);
            jtj.noalias() += g.transpose() * g;
            jtr.noalias() += g.transpose() * r;
        }

        const double scale_width = std::max(std::abs(p(kFwhm)), 1e-300);
        const double scale_level =
            std::max({std::abs(p(kOffset)), std::abs(p(kAmplitude)), 1e-300});
        const auto relative_size = [&](const Vec4& step) {
            return std::max({std::abs(step(kCenter)) / scale_width,
                             std::abs(step(kFwhm)) / scale_width,
                             std::abs(step(kAmplitude)) / scale_level,
                             std::abs(step(kOffset)) / scale_level});
        };

        // Columns of J differ by many orders of magnitude (Hz vs levels), so
        // solve in Jacobi-scaled variables.
        const Vec4 d = jtj.diagonal().cwiseSqrt().cwiseMax(1e-300);
        const Mat4 scaled = d.cwiseInverse().asDiagonal() * jtj * d.cwiseInverse().asDiagonal();
        const auto solve = [&](double damping) -> Vec4 {
            Mat4 m = scaled;
            m.diagonal().array() += damping;
            return d.cwiseInverse().cwiseProduct(m.ldlt().solve(d.cwiseInverse().cwiseProduct(jtr)));
        };

        // Converged when the full Gauss-Newton step could lower the cost by
        // less than the cost itself can resolve, or when that step is tiny.
        const Vec4 newton = solve(0.0);
        const double predicted = newton.allFinite() ? jtr.dot(newton) : INFINITY;
        if (cost == 0.0 || predicted <= kResolvableCostFraction * cost ||
            (newton.allFinite() && relative_size(newton) < kLorentzianRelativeTolerance)) {
            const Vec4 trial = p + newton;
            const double trial_cost = sum_squares(trial, x, y);
            if (trial_cost <= cost) {
                p = trial;
                cost = trial_cost;
            }
            converged = true;
            break;
        }

        // Retry with heavier damping until the step does not increase the cost.
        while (lambda <= 1e16) {
            const Vec4 trial = p + solve(lambda);
            const double trial_cost = sum_squares(trial, x, y);
            if (std::isfinite(trial_cost) && trial_cost <= cost) {
                p = trial;
                cost = trial_cost;
                lambda = std::max(lambda / 10.0, 1e-12);
                break;
            }
            lambda *= 10.0;
        }
        if (lambda > 1e16) break;
    }

    LorentzianFit fit;
    fit.center = p(kCenter);
    fit.fwhm = std::abs(p(kFwhm));
    fit.amplitude = p(kAmplitude);
    fit.offset = p(kOffset);
    fit.rms_residual = std::sqrt(cost / static_cast<double>(x.size()));
    fit.converged = converged;
    fit.iterations = iteration;
    return fit;
}

LorentzianFit fit_lorentzian(const response::Spectrum& spectrum) {
    spectrum.validate();
    return fit_lorentzian(spectrum.delta_hz, spectrum.value);
}

}  // namespace eitlab::fit
