// floquet_cli.cpp -- command-line entry points:
//   floquet direct --config F | invert --config F | crosscheck --config F
//   floquet moment --config F | selftest [--preset NAME] [--perturb-kernel]
// Exit codes: 0 success, 2 validation/config, 3 numerical tolerance, 4 exceptional parameter.

#include "floquet/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Floquet scattering and inverse-scattering engine"};
    app.require_subcommand(1);

    std::string config;
    auto* direct = app.add_subcommand("direct", "assemble the scattering matrix and check unitarity");
    auto* invert = app.add_subcommand("invert", "reconstruct the potential's space-time Fourier transform");
    auto* cross = app.add_subcommand("crosscheck", "compare wavepacket amplitudes with the stationary S-matrix");
    auto* moment = app.add_subcommand("moment", "evaluate one CGO pairing integral");
    for (auto* sc : {direct, invert, cross, moment}) sc->add_option("--config", config, "configuration file")->required();

    flq::SelftestOptions st;
    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant suite");
    selftest->add_option("--preset", st.preset, "potential preset");
    selftest->add_flag("--perturb-kernel", st.perturb_kernel, "inject a perturbed scattering kernel (must fail)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (selftest->parsed()) return flq::run_selftest(st, std::cout);
        flq::RunConfig cfg = flq::load_config(config);
        const std::string name = app.get_subcommands().front()->get_name();
        if (!cfg.command.empty() && cfg.command != name)
            throw flq::Error(flq::ErrorKind::Config, config + ": command '" + cfg.command + "' does not match '" + name + "'");
        cfg.command = name;
        return flq::run_command(cfg, std::cout);
    } catch (const flq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return flq::exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
