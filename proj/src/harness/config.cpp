#include "eitlab/harness/config.hpp"

#include "eitlab/core/basis.hpp"
#include "eitlab/errors.hpp"
#include "eitlab/harness/csv.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace eitlab::harness {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string value;
    int line = 0;
};

double number(const std::string& key, const Entry& e) {
    const auto parsed = parse_double(trim(e.value));
    if (!parsed) {
        throw ConfigError(key, e.line, "value '" + e.value + "' is not a number");
    }
    return *parsed;
}

std::vector<double> number_list(const std::string& key, const Entry& e) {
    std::vector<double> out;
    std::string_view rest = e.value;
    while (true) {
        const std::size_t comma = rest.find(',');
        const std::string_view item = trim(rest.substr(0, comma));
        const auto parsed = parse_double(item);
        if (!parsed) {
            throw ConfigError(key, e.line, "list item '" + std::string(item) + "' is not a number");
        }
        out.push_back(*parsed);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return out;
}

void require(bool ok, const std::string& key, int line, const std::string& message) {
    if (!ok) throw ConfigError(key, line, message);
}

bool theta_in_range(double theta) { return theta >= -kQuarterPi && theta <= kQuarterPi; }

}  // namespace

ConfigError::ConfigError(std::string key, int line, const std::string& what)
    : std::runtime_error("config key '" + key + "'" +
                         (line > 0 ? " (line " + std::to_string(line) + ")" : std::string()) +
                         ": " + what),
      key_(std::move(key)),
      line_(line) {}

RunConfig parse_config(std::string_view text) {
    std::map<std::string, Entry> entries;
    int line_number = 0;
    while (!text.empty()) {
        ++line_number;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(std::string(line), line_number, "expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ConfigError("", line_number, "empty key");
        if (value.empty()) throw ConfigError(key, line_number, "empty value");
        if (entries.contains(key)) {
            throw ConfigError(key, line_number, "repeated key (first on line " +
                                                    std::to_string(entries[key].line) + ")");
        }
        entries[key] = {value, line_number};
    }

    RunConfig cfg;
    std::set<std::string> seen;
    const auto scalar = [&](const char* key, auto&& assign) {
        if (auto it = entries.find(key); it != entries.end()) {
            assign(number(key, it->second), it->second.line);
            seen.insert(key);
            return true;
        }
        return false;
    };
    const auto line_of = [&](const std::string& key) {
        auto it = entries.find(key);
        return it == entries.end() ? 0 : it->second.line;
    };
    const auto non_negative = [](const char* key, double& field) {
        return [key, &field](double v, int line) {
            require(v >= 0.0, key, line, "must be >= 0");
            field = v;
        };
    };

    scalar("omega_c_hz", [&](double v, int line) {
        require(v >= 0.0, "omega_c_hz", line, "must be >= 0");
        cfg.omega_c_hz = v;
    });
    scalar("coupling_intensity_w_m2", [&](double v, int line) {
        require(v >= 0.0, "coupling_intensity_w_m2", line, "must be >= 0");
        cfg.coupling_intensity_w_m2 = v;
    });
    scalar("kappa_rabi2_per_intensity", [&](double v, int line) {
        require(v > 0.0, "kappa_rabi2_per_intensity", line, "must be > 0");
        cfg.kappa_rabi2_per_intensity = v;
    });
    scalar("omega_p_hz", non_negative("omega_p_hz", cfg.omega_p_hz));
    scalar("delta_hz", [&](double v, int) { cfg.delta_hz = v; });
    const bool has_gamma_r = scalar("gamma_r_hz", non_negative("gamma_r_hz", cfg.gamma_r_hz));
    scalar("gamma_opt_hz", non_negative("gamma_opt_hz", cfg.gamma_opt_hz));
    const bool has_gamma0 = scalar("gamma0_hz", non_negative("gamma0_hz", cfg.gamma0_hz));
    const bool has_gamma_t = scalar("gamma_t_hz", non_negative("gamma_t_hz", cfg.gamma_t_hz));
    scalar("w_eff_hz", non_negative("w_eff_hz", cfg.w_eff_hz));
    scalar("theta_rad", [&](double v, int line) {
        require(theta_in_range(v), "theta_rad", line, "theta must lie in [-pi/4, pi/4]");
        cfg.theta_rad = v;
    });
    scalar("cell_length_m", [&](double v, int line) {
        require(v > 0.0, "cell_length_m", line, "must be > 0");
        cfg.cell_length_m = v;
    });
    scalar("zero_coupling_transmission", [&](double v, int line) {
        require(v > 0.0 && v <= 1.0, "zero_coupling_transmission", line, "must lie in (0, 1]");
        cfg.zero_coupling_transmission = v;
    });
    scalar("grid_min_hz", [&](double v, int line) {
        require(std::abs(v) <= kGridGuardHz, "grid_min_hz", line, "outside the +-10 MHz guard");
        cfg.grid_min_hz = v;
    });
    scalar("grid_max_hz", [&](double v, int line) {
        require(std::abs(v) <= kGridGuardHz, "grid_max_hz", line, "outside the +-10 MHz guard");
        cfg.grid_max_hz = v;
    });
    scalar("grid_points", [&](double v, int line) {
        require(v == std::floor(v) && v >= kMinGridPoints && v <= kMaxGridPoints, "grid_points",
                line, "must be an integer in [7, 1000000]");
        cfg.grid_points = static_cast<int>(v);
    });
    scalar("fmod_hz", [&](double v, int line) {
        require(v > 0.0, "fmod_hz", line, "must be > 0");
        cfg.fmod_hz = v;
    });
    if (auto it = entries.find("sweep_intensities_w_m2"); it != entries.end()) {
        cfg.sweep_intensities_w_m2 = number_list(it->first, it->second);
        for (double v : cfg.sweep_intensities_w_m2) {
            require(v >= 0.0, it->first, it->second.line, "intensities must be >= 0");
        }
        seen.insert(it->first);
    }
    if (auto it = entries.find("sweep_thetas_rad"); it != entries.end()) {
        cfg.sweep_thetas_rad = number_list(it->first, it->second);
        for (double v : cfg.sweep_thetas_rad) {
            require(theta_in_range(v), it->first, it->second.line,
                    "every theta must lie in [-pi/4, pi/4]");
        }
        seen.insert(it->first);
    }

    for (const auto& [key, entry] : entries) {
        if (!seen.contains(key)) throw ConfigError(key, entry.line, "unknown key");
    }

    if (!has_gamma_r) throw ConfigError("gamma_r_hz", 0, "required key is missing");
    if (cfg.omega_c_hz.has_value() == cfg.coupling_intensity_w_m2.has_value()) {
        throw ConfigError("omega_c_hz", 0,
                          "exactly one of omega_c_hz and coupling_intensity_w_m2 must be given");
    }
    if (cfg.coupling_intensity_w_m2 && !cfg.kappa_rabi2_per_intensity) {
        throw ConfigError("kappa_rabi2_per_intensity", 0,
                          "required when coupling_intensity_w_m2 is given");
    }
    if (!has_gamma0) cfg.gamma0_hz = cfg.gamma_opt_hz;
    if (!has_gamma_t) cfg.gamma_t_hz = cfg.gamma_r_hz;
    require(cfg.gamma_r_hz <= cfg.gamma_opt_hz, "gamma_r_hz", line_of("gamma_r_hz"),
            "must not exceed gamma_opt_hz");
    require(cfg.grid_min_hz < cfg.grid_max_hz, "grid_max_hz", line_of("grid_max_hz"),
            "must exceed grid_min_hz");
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read config file " + path.string());
    return parse_config(buffer.str());
}

double RunConfig::coupling_rabi_hz() const {
    if (omega_c_hz) return *omega_c_hz;
    return core::rad_to_hz(std::sqrt(kappa_rabi2_per_intensity.value() *
                                     coupling_intensity_w_m2.value()));
}

core::DriveParameters RunConfig::drive() const {
    core::DriveParameters d;
    d.omega_c = core::hz_to_rad(coupling_rabi_hz());
    d.omega_p = core::hz_to_rad(omega_p_hz);
    d.delta_opt = core::hz_to_rad(delta_hz);
    d.delta_raman = 0.0;
    return d;
}

core::DriveParameters RunConfig::drive_at_intensity(double intensity_w_m2) const {
    if (!kappa_rabi2_per_intensity) {
        throw ConfigError("kappa_rabi2_per_intensity", 0, "required for intensity sweeps");
    }
    core::DriveParameters d = drive();
    d.omega_c = std::sqrt(*kappa_rabi2_per_intensity * intensity_w_m2);
    return d;
}

core::RelaxationParameters RunConfig::relaxation() const {
    core::RelaxationParameters r;
    r.gamma0 = core::hz_to_rad(gamma0_hz);
    r.gamma_t = core::hz_to_rad(gamma_t_hz);
    r.gamma_r = core::hz_to_rad(gamma_r_hz);
    r.gamma_opt = core::hz_to_rad(gamma_opt_hz);
    r.w_eff = core::hz_to_rad(w_eff_hz);
    return r;
}

core::PolarizationBasis RunConfig::basis() const { return core::make_basis(theta_rad); }

response::MediumParameters RunConfig::medium() const {
    return response::MediumParameters::from_zero_coupling_transmission(zero_coupling_transmission,
                                                                       cell_length_m);
}

std::vector<double> RunConfig::grid() const {
    const double step = (grid_max_hz - grid_min_hz) / (grid_points - 1);
    std::vector<double> g(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) g[static_cast<std::size_t>(i)] = grid_min_hz + step * i;
    g.back() = grid_max_hz;
    return g;
}

std::string RunConfig::canonical_text() const {
    std::string out;
    const auto put = [&](const char* key, double v) {
        out += key;
        out += " = ";
        out += format_double(v);
        out += '\n';
    };
    const auto put_list = [&](const char* key, const std::vector<double>& v) {
        if (v.empty()) return;
        out += key;
        out += " = ";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ", ";
            out += format_double(v[i]);
        }
        out += '\n';
    };
    if (omega_c_hz) put("omega_c_hz", *omega_c_hz);
    if (coupling_intensity_w_m2) put("coupling_intensity_w_m2", *coupling_intensity_w_m2);
    if (kappa_rabi2_per_intensity) put("kappa_rabi2_per_intensity", *kappa_rabi2_per_intensity);
    put("omega_p_hz", omega_p_hz);
    put("delta_hz", delta_hz);
    put("gamma_r_hz", gamma_r_hz);
    put("gamma_opt_hz", gamma_opt_hz);
    put("gamma0_hz", gamma0_hz);
    put("gamma_t_hz", gamma_t_hz);
    put("w_eff_hz", w_eff_hz);
    put("theta_rad", theta_rad);
    put("cell_length_m", cell_length_m);
    put("zero_coupling_transmission", zero_coupling_transmission);
    put("grid_min_hz", grid_min_hz);
    put("grid_max_hz", grid_max_hz);
    put("grid_points", grid_points);
    put("fmod_hz", fmod_hz);
    put_list("sweep_intensities_w_m2", sweep_intensities_w_m2);
    put_list("sweep_thetas_rad", sweep_thetas_rad);
    return out;
}

}  // namespace eitlab::harness
