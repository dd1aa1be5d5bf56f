#pragma once

#include "eitlab/core/susceptibility.hpp"
#include "eitlab/core/types.hpp"
#include "eitlab/response/medium.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace eitlab::response {

enum class SpectrumKind { kTransmission, kAbsorbance, kPhase };

// Sampled observable against Raman detuning delta/2pi (Hz).
struct Spectrum {
    SpectrumKind kind = SpectrumKind::kTransmission;
    std::vector<double> delta_hz;
    std::vector<double> value;
    std::vector<std::pair<std::string, double>> metadata;

    std::size_t size() const noexcept { return delta_hz.size(); }

    // Grid strictly increasing, sizes match, transmission values in (0, 1].
    void validate() const;
};

// `points` evenly spaced detunings from min_hz to max_hz inclusive.
std::vector<double> uniform_grid(double min_hz, double max_hz, int points);

// Normalized susceptibility on a grid given in Hz.
std::vector<core::complex> chi_scan(const core::LinearResponse& response,
                                    std::span<const double> delta_hz);

// exp(i (od0/2) Re chi - (od0/2) Im chi): field transfer of the cell.
core::complex transfer_function(const MediumParameters& medium, core::complex chi);

// T(delta) = exp(-od0 Im chi(delta)).
Spectrum transmission_spectrum(const core::DriveParameters& drive,
                               const core::PolarizationBasis& basis,
                               const core::RelaxationParameters& relax,
                               const MediumParameters& medium, std::span<const double> delta_hz);

// -ln T = od0 Im chi. The EIT window is a Lorentzian dip in this quantity
// for any optical depth, which is why the width pipeline fits it rather
// than T itself.
Spectrum absorbance_spectrum(const core::DriveParameters& drive,
                             const core::PolarizationBasis& basis,
                             const core::RelaxationParameters& relax,
                             const MediumParameters& medium, std::span<const double> delta_hz);

std::vector<std::pair<std::string, double>> describe(const core::DriveParameters& drive,
                                                     const core::PolarizationBasis& basis,
                                                     const core::RelaxationParameters& relax,
                                                     const MediumParameters& medium);

}  // namespace eitlab::response
