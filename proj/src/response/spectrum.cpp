#include "eitlab/response/spectrum.hpp"

#include "eitlab/errors.hpp"

#include <cmath>

namespace eitlab::response {

using core::complex;

MediumParameters MediumParameters::from_zero_coupling_transmission(double transmission,
                                                                   double cell_length_m) {
    if (!(transmission > 0.0 && transmission <= 1.0)) {
        throw DomainError("zero-coupling transmission must lie in (0, 1]");
    }
    MediumParameters medium{cell_length_m, -std::log(transmission)};
    medium.validate();
    return medium;
}

void MediumParameters::validate() const {
    if (!(od0 >= 0.0) || !std::isfinite(od0)) {
        throw DomainError("optical depth must be finite and >= 0");
    }
    if (!(cell_length_m > 0.0) || !std::isfinite(cell_length_m)) {
        throw DomainError("cell length must be positive");
    }
}

void Spectrum::validate() const {
    if (delta_hz.size() != value.size()) {
        throw DomainError("spectrum grid and values differ in length");
    }
    for (std::size_t i = 1; i < delta_hz.size(); ++i) {
        if (!(delta_hz[i] > delta_hz[i - 1])) {
            throw DomainError("spectrum grid must be strictly increasing");
        }
    }
    if (kind == SpectrumKind::kTransmission) {
        for (double t : value) {
            if (!(t > 0.0 && t <= 1.0)) {
                throw DomainError("transmission outside (0, 1]");
            }
        }
    }
}

std::vector<double> uniform_grid(double min_hz, double max_hz, int points) {
    if (points < 2 || !(max_hz > min_hz)) {
        throw DomainError("grid needs >= 2 points and max > min");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double step = (max_hz - min_hz) / (points - 1);
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = min_hz + step * i;
    }
    grid.back() = max_hz;
    return grid;
}

std::vector<complex> chi_scan(const core::LinearResponse& response,
                              std::span<const double> delta_hz) {
    std::vector<complex> out;
    out.reserve(delta_hz.size());
    for (double d : delta_hz) {
        out.push_back(response.chi(core::hz_to_rad(d)));
    }
    return out;
}

complex transfer_function(const MediumParameters& medium, complex chi) {
    return std::exp(complex(-0.5 * medium.od0 * chi.imag(), 0.5 * medium.od0 * chi.real()));
}

std::vector<std::pair<std::string, double>> describe(const core::DriveParameters& drive,
                                                     const core::PolarizationBasis& basis,
                                                     const core::RelaxationParameters& relax,
                                                     const MediumParameters& medium) {
    return {
        {"omega_c_hz", core::rad_to_hz(drive.omega_c)},
        {"omega_p_hz", core::rad_to_hz(drive.omega_p)},
        {"delta_hz", core::rad_to_hz(drive.delta_opt)},
        {"theta_rad", basis.theta()},
        {"gamma0_hz", core::rad_to_hz(relax.gamma0)},
        {"gamma_t_hz", core::rad_to_hz(relax.gamma_t)},
        {"gamma_r_hz", core::rad_to_hz(relax.gamma_r)},
        {"gamma_opt_hz", core::rad_to_hz(relax.gamma_opt)},
        {"w_eff_hz", core::rad_to_hz(relax.w_eff)},
        {"od0", medium.od0},
        {"cell_length_m", medium.cell_length_m},
    };
}

namespace {

Spectrum scan(SpectrumKind kind, const core::DriveParameters& drive,
              const core::PolarizationBasis& basis, const core::RelaxationParameters& relax,
              const MediumParameters& medium, std::span<const double> delta_hz) {
    medium.validate();
    const core::LinearResponse response(drive, basis, relax);
    const std::vector<complex> chi = chi_scan(response, delta_hz);

    Spectrum s;
    s.kind = kind;
    s.delta_hz.assign(delta_hz.begin(), delta_hz.end());
    s.value.reserve(chi.size());
    for (const complex& c : chi) {
        const double absorbance = medium.od0 * c.imag();
        s.value.push_back(kind == SpectrumKind::kTransmission ? std::exp(-absorbance) : absorbance);
    }
    s.metadata = describe(drive, basis, relax, medium);
    s.validate();
    return s;
}

}  // namespace

Spectrum transmission_spectrum(const core::DriveParameters& drive,
                               const core::PolarizationBasis& basis,
                               const core::RelaxationParameters& relax,
                               const MediumParameters& medium, std::span<const double> delta_hz) {
    return scan(SpectrumKind::kTransmission, drive, basis, relax, medium, delta_hz);
}

Spectrum absorbance_spectrum(const core::DriveParameters& drive,
                             const core::PolarizationBasis& basis,
                             const core::RelaxationParameters& relax,
                             const MediumParameters& medium, std::span<const double> delta_hz) {
    return scan(SpectrumKind::kAbsorbance, drive, basis, relax, medium, delta_hz);
}

}  // namespace eitlab::response
