#include "eitlab/harness/commands.hpp"

#include "eitlab/core/basis.hpp"
#include "eitlab/core/susceptibility.hpp"
#include "eitlab/errors.hpp"
#include "eitlab/fit/extract.hpp"
#include "eitlab/harness/csv.hpp"
#include "eitlab/harness/parallel.hpp"
#include "eitlab/harness/pipeline.hpp"
#include "eitlab/response/delay.hpp"
#include "eitlab/response/spectrum.hpp"
#include "eitlab/response/width_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace eitlab::harness {

namespace {

double relative_spread(const std::vector<double>& values) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    if (mean == 0.0) return *hi == *lo ? 0.0 : INFINITY;
    return (*hi - *lo) / std::abs(mean);
}

void require_intensities(const RunConfig& config) {
    if (config.sweep_intensities_w_m2.empty()) {
        throw ConfigError("sweep_intensities_w_m2", 0, "required for intensity sweeps");
    }
    if (!config.kappa_rabi2_per_intensity) {
        throw ConfigError("kappa_rabi2_per_intensity", 0, "required for intensity sweeps");
    }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::optional<Command> command_from_name(std::string_view name) {
    if (name == "spectrum") return Command::kSpectrum;
    if (name == "sweep-intensity") return Command::kSweepIntensity;
    if (name == "sweep-basis") return Command::kSweepBasis;
    if (name == "delay") return Command::kDelay;
    return std::nullopt;
}

std::string_view command_name(Command command) {
    switch (command) {
        case Command::kSpectrum: return "spectrum";
        case Command::kSweepIntensity: return "sweep-intensity";
        case Command::kSweepBasis: return "sweep-basis";
        case Command::kDelay: return "delay";
    }
    return "";
}

std::string spectrum_csv(const RunConfig& config, int threads) {
    const core::LinearResponse response(config.drive(), config.basis(), config.relaxation());
    const response::MediumParameters medium = config.medium();
    const std::vector<double> grid = config.grid();

    const auto chi = parallel_map(grid.size(), threads, [&](std::size_t i) {
        return response.chi(core::hz_to_rad(grid[i]));
    });

    CsvWriter csv({"delta_hz", "transmission", "im_chi", "re_chi"});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        csv.row({grid[i], std::exp(-medium.od0 * chi[i].imag()), chi[i].imag(), chi[i].real()});
    }
    return csv.text();
}

IntensitySweep run_intensity_sweep(const RunConfig& config, int threads) {
    require_intensities(config);
    const core::PolarizationBasis basis = config.basis();
    const core::RelaxationParameters relax = config.relaxation();
    const response::MediumParameters medium = config.medium();
    const std::vector<double> grid = config.grid();
    const auto& intensities = config.sweep_intensities_w_m2;

    const auto observed = parallel_map(intensities.size(), threads, [&](std::size_t i) {
        return measure_point(config.drive_at_intensity(intensities[i]), basis, relax, medium, grid,
                             config.fmod_hz);
    });

    IntensitySweep sweep;
    std::vector<fit::WidthPoint> points;
    for (std::size_t i = 0; i < intensities.size(); ++i) {
        sweep.rows.push_back({intensities[i], observed[i].fwhm_hz, observed[i].peak_transmission,
                              observed[i].delay_analytic_s});
        points.push_back({intensities[i], observed[i].fwhm_hz});
    }
    sweep.line = fit::fit_linear(points);
    const fit::RamanRate raman = fit::extract_raman_rate(sweep.line);
    sweep.gamma_r_hz = raman.gamma_r_hz;
    sweep.raman_rate_unphysical = raman.unphysical;
    sweep.w_eff_hz =
        fit::extract_pumping_width(sweep.line, *config.kappa_rabi2_per_intensity, relax.gamma_opt);
    return sweep;
}

BasisSweep run_basis_sweep(const RunConfig& config, int threads) {
    const auto& thetas = config.sweep_thetas_rad;
    if (thetas.size() < 2) {
        throw ConfigError("sweep_thetas_rad", 0, "basis sweep needs at least two thetas");
    }
    const core::DriveParameters drive = config.drive();
    const core::RelaxationParameters relax = config.relaxation();
    const response::MediumParameters medium = config.medium();
    const std::vector<double> grid = config.grid();

    const auto observed = parallel_map(thetas.size(), threads, [&](std::size_t i) {
        return measure_point(drive, core::make_basis(thetas[i]), relax, medium, grid,
                             config.fmod_hz);
    });

    BasisSweep sweep;
    std::vector<double> fwhm, peak, delay;
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const core::PolarizationBasis basis = core::make_basis(thetas[i]);
        sweep.rows.push_back({thetas[i], basis.alpha(), basis.beta(), observed[i].fwhm_hz,
                              observed[i].peak_transmission, observed[i].delay_analytic_s});
        fwhm.push_back(observed[i].fwhm_hz);
        peak.push_back(observed[i].peak_transmission);
        delay.push_back(observed[i].delay_analytic_s);
    }
    sweep.spread_fwhm = relative_spread(fwhm);
    sweep.spread_peak_transmission = relative_spread(peak);
    sweep.spread_delay = relative_spread(delay);
    return sweep;
}

std::vector<DelayRow> run_delay_sweep(const RunConfig& config, int threads) {
    require_intensities(config);
    const core::PolarizationBasis basis = config.basis();
    const core::RelaxationParameters relax = config.relaxation();
    const response::MediumParameters medium = config.medium();
    const auto& intensities = config.sweep_intensities_w_m2;

    return parallel_map(intensities.size(), threads, [&](std::size_t i) {
        const core::DriveParameters drive = config.drive_at_intensity(intensities[i]);
        const core::LinearResponse response(drive, basis, relax);
        const double fwhm = response::width_model_fwhm(response::WidthModel::from(drive, relax));
        const response::EnvelopeDelay envelope =
            response::envelope_delay(response, 0.0, medium, config.fmod_hz, fwhm);
        return DelayRow{intensities[i],
                        response::group_delay_analytic(response, 0.0, fwhm / 100.0, medium),
                        envelope.delay_s, config.fmod_hz, envelope.beyond_window};
    });
}

std::string intensity_sweep_csv(const IntensitySweep& sweep) {
    CsvWriter csv({"intensity_w_m2", "fwhm_hz", "peak_transmission", "delay_s"});
    for (const auto& r : sweep.rows) {
        csv.row({r.intensity_w_m2, r.fwhm_hz, r.peak_transmission, r.delay_s});
    }
    return csv.text();
}

std::string basis_sweep_csv(const BasisSweep& sweep) {
    CsvWriter csv({"theta_rad", "alpha", "beta", "fwhm_hz", "peak_transmission", "delay_s"});
    for (const auto& r : sweep.rows) {
        csv.row({r.theta_rad, r.alpha, r.beta, r.fwhm_hz, r.peak_transmission, r.delay_s});
    }
    csv.row(std::vector<std::string>{"max_rel_spread", "", "", format_double(sweep.spread_fwhm),
                                     format_double(sweep.spread_peak_transmission),
                                     format_double(sweep.spread_delay)});
    return csv.text();
}

std::string delay_csv(const std::vector<DelayRow>& rows) {
    CsvWriter csv({"intensity_w_m2", "delay_analytic_s", "delay_envelope_s", "fmod_hz"});
    for (const auto& r : rows) {
        csv.row({r.intensity_w_m2, r.delay_analytic_s, r.delay_envelope_s, r.fmod_hz});
    }
    return csv.text();
}

CommandOutput run_command(Command command, const RunConfig& config, int threads) {
    CommandOutput out;
    switch (command) {
        case Command::kSpectrum:
            out.csv = spectrum_csv(config, threads);
            break;
        case Command::kSweepIntensity: {
            const IntensitySweep sweep = run_intensity_sweep(config, threads);
            out.csv = intensity_sweep_csv(sweep);
            out.summary = "slope_hz_per_w_m2=" + format_double(sweep.line.slope) +
                          " intercept_hz=" + format_double(sweep.line.intercept) +
                          " r_squared=" + format_double(sweep.line.r_squared) +
                          " gamma_r_hz=" + format_double(sweep.gamma_r_hz) +
                          " w_eff_hz=" + format_double(sweep.w_eff_hz);
            if (sweep.raman_rate_unphysical) {
                out.warnings.push_back("negative intercept: extracted Raman rate is unphysical");
            }
            break;
        }
        case Command::kSweepBasis: {
            const BasisSweep sweep = run_basis_sweep(config, threads);
            out.csv = basis_sweep_csv(sweep);
            out.summary = "max_rel_spread_fwhm=" + format_double(sweep.spread_fwhm) +
                          " max_rel_spread_peak_transmission=" +
                          format_double(sweep.spread_peak_transmission) +
                          " max_rel_spread_delay=" + format_double(sweep.spread_delay);
            break;
        }
        case Command::kDelay: {
            const std::vector<DelayRow> rows = run_delay_sweep(config, threads);
            out.csv = delay_csv(rows);
            for (const auto& r : rows) {
                if (r.beyond_window) {
                    out.warnings.push_back("fmod exceeds the transparency window at intensity " +
                                           format_double(r.intensity_w_m2) +
                                           " W/m^2; envelope delay is not a group delay");
                }
            }
            break;
        }
    }
    return out;
}

void write_outputs(const std::filesystem::path& out, Command command, const RunConfig& config,
                   int threads, const CommandOutput& output) {
    write_file(out, output.csv);
    std::string meta = "command = " + std::string(command_name(command)) + "\n";
    meta += "threads = " + std::to_string(resolve_threads(threads)) + "\n";
    if (!output.summary.empty()) meta += "summary = " + output.summary + "\n";
    for (const auto& w : output.warnings) meta += "warning = " + w + "\n";
    meta += "# resolved configuration\n";
    meta += config.canonical_text();
    std::filesystem::path sidecar = out;
    sidecar += ".meta";
    write_file(sidecar, meta);
}

}  // namespace eitlab::harness
