#include "eitlab/harness/cli.hpp"

#include "eitlab/errors.hpp"
#include "eitlab/harness/commands.hpp"
#include "eitlab/harness/config.hpp"

#include <CLI11.hpp>

#include <string>

namespace eitlab::harness {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"three-level EIT simulator and sweep harness", "eitlab"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    int threads = 0;

    const std::pair<Command, const char*> commands[] = {
        {Command::kSpectrum, "probe transmission and susceptibility over the detuning grid"},
        {Command::kSweepIntensity, "window width, peak transmission and delay vs coupling intensity"},
        {Command::kSweepBasis, "same observables across polarization bases"},
        {Command::kDelay, "analytic and modulation delays vs coupling intensity"},
    };
    for (const auto& [command, help] : commands) {
        CLI::App* sub = app.add_subcommand(std::string(command_name(command)), help);
        sub->add_option("--config", config_path, "key = value run configuration")->required();
        sub->add_option("--out", out_path, "CSV output path; metadata goes to <out>.meta")
            ->required();
        sub->add_option("--threads", threads, "worker threads, 0 = one per core")
            ->check(CLI::NonNegativeNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    const Command command = *command_from_name(app.get_subcommands().front()->get_name());
    try {
        const RunConfig config = load_config(config_path);
        const CommandOutput result = run_command(command, config, threads);
        write_outputs(out_path, command, config, threads, result);
        if (!result.summary.empty()) out << result.summary << "\n";
        for (const auto& w : result.warnings) err << "warning: " << w << "\n";
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const PhysicsError& e) {
        err << "error: " << e.what() << "\n";
        return kExitPhysics;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitPhysics;
    }
}

}  // namespace eitlab::harness
