#pragma once

#include "eitlab/core/types.hpp"
#include "eitlab/response/medium.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eitlab::harness {

// Bad key, value or combination in a run configuration. line is 0 when the
// problem is not tied to a single line (e.g. a missing key).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, int line, const std::string& what);

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    std::string key_;
    int line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Flat run configuration. External units: frequencies and rates are
// value/2pi in Hz, intensities in W/m^2, kappa in (rad/s)^2 per W/m^2.
struct RunConfig {
    // Exactly one of these two is set.
    std::optional<double> omega_c_hz;
    std::optional<double> coupling_intensity_w_m2;
    std::optional<double> kappa_rabi2_per_intensity;

    double omega_p_hz = 0.0;
    double delta_hz = 0.0;
    double gamma_r_hz = 0.0;
    double gamma_opt_hz = 1.6e6;
    double gamma0_hz = 1.6e6;   // defaults to gamma_opt_hz
    double gamma_t_hz = 0.0;    // defaults to gamma_r_hz
    double w_eff_hz = 0.46e9;
    double theta_rad = 0.0;
    double cell_length_m = 0.025;
    double zero_coupling_transmission = 0.4;
    double grid_min_hz = -150e3;
    double grid_max_hz = 150e3;
    int grid_points = 301;
    double fmod_hz = 5e3;
    std::vector<double> sweep_intensities_w_m2;
    std::vector<double> sweep_thetas_rad;

    // Omega_C/2pi from whichever of omega_c_hz / coupling intensity is set.
    double coupling_rabi_hz() const;

    core::DriveParameters drive() const;
    // Same fields with Omega_C^2 = kappa * intensity. Needs kappa.
    core::DriveParameters drive_at_intensity(double intensity_w_m2) const;
    core::RelaxationParameters relaxation() const;
    core::PolarizationBasis basis() const;
    response::MediumParameters medium() const;
    std::vector<double> grid() const;

    // key = value lines in a fixed order, 17 significant digits.
    std::string canonical_text() const;
};

inline constexpr double kGridGuardHz = 10e6;
inline constexpr int kMinGridPoints = 7;
inline constexpr int kMaxGridPoints = 1'000'000;

// One `key = value` per line, '#' starts a comment, blank lines ignored.
// List values are comma separated. Unknown or repeated keys, unparsable
// numbers and out-of-range values throw ConfigError.
RunConfig parse_config(std::string_view text);

// Reads the file (IoError on failure) and parses it.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace eitlab::harness
