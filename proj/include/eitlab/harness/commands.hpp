#pragma once

#include "eitlab/fit/linear.hpp"
#include "eitlab/harness/config.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eitlab::harness {

enum class Command { kSpectrum, kSweepIntensity, kSweepBasis, kDelay };

std::optional<Command> command_from_name(std::string_view name);
std::string_view command_name(Command command);

struct IntensitySweepRow {
    double intensity_w_m2 = 0.0;
    double fwhm_hz = 0.0;
    double peak_transmission = 0.0;
    double delay_s = 0.0;
};

struct IntensitySweep {
    std::vector<IntensitySweepRow> rows;
    fit::LinearFit line;
    double gamma_r_hz = 0.0;
    bool raman_rate_unphysical = false;
    double w_eff_hz = 0.0;
};

// Needs kappa and at least one intensity; fewer than two distinct
// intensities surface as RankDeficiency from the linear fit.
IntensitySweep run_intensity_sweep(const RunConfig& config, int threads);

struct BasisSweepRow {
    double theta_rad = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double fwhm_hz = 0.0;
    double peak_transmission = 0.0;
    double delay_s = 0.0;
};

struct BasisSweep {
    std::vector<BasisSweepRow> rows;
    // (max - min) / |mean| over the rows.
    double spread_fwhm = 0.0;
    double spread_peak_transmission = 0.0;
    double spread_delay = 0.0;
};

// Needs at least two thetas.
BasisSweep run_basis_sweep(const RunConfig& config, int threads);

struct DelayRow {
    double intensity_w_m2 = 0.0;
    double delay_analytic_s = 0.0;
    double delay_envelope_s = 0.0;
    double fmod_hz = 0.0;
    bool beyond_window = false;
};

std::vector<DelayRow> run_delay_sweep(const RunConfig& config, int threads);

std::string spectrum_csv(const RunConfig& config, int threads);
std::string intensity_sweep_csv(const IntensitySweep& sweep);
std::string basis_sweep_csv(const BasisSweep& sweep);
std::string delay_csv(const std::vector<DelayRow>& rows);

struct CommandOutput {
    std::string csv;
    // key=value pairs, one line; empty for commands without a summary.
    std::string summary;
    std::vector<std::string> warnings;
};

CommandOutput run_command(Command command, const RunConfig& config, int threads);

// Writes the CSV to `out` and run metadata to `out` + ".meta". IoError on
// failure.
void write_outputs(const std::filesystem::path& out, Command command, const RunConfig& config,
                   int threads, const CommandOutput& output);

}  // namespace eitlab::harness
