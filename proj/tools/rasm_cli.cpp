#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rasm/runspec.hpp"

int main(int argc, char** argv) {
    CLI::App app{"RIS-assisted spatial-modulation link simulator and ABER bound evaluator"};

    std::string config_path;
    std::string mode_override;
    std::string out_override;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    int nodes = 0;
    app.add_option("--config", config_path, "run configuration file (INI-style)")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--mode", mode_override, "override run mode")
        ->check(CLI::IsMember({"simulate", "analyze", "compare"}));
    auto* seed_opt = app.add_option("--seed", seed, "override master seed");
    auto* trials_opt = app.add_option("--trials", trials, "override trials per SNR point");
    app.add_option("--out", out_override, "override output directory");
    auto* nodes_opt =
        app.add_option("--quadrature-nodes", nodes, "override Gauss-Legendre node count")
            ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        std::ifstream in(config_path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        if (!in) throw std::runtime_error("cannot read config file: " + config_path);

        rasm::RunSpec spec = rasm::parse_run_spec(buffer.str());
        if (!mode_override.empty()) {
            if (mode_override == "simulate") spec.mode = rasm::RunSpec::Mode::Simulate;
            else if (mode_override == "analyze") spec.mode = rasm::RunSpec::Mode::Analyze;
            else spec.mode = rasm::RunSpec::Mode::Compare;
        }
        if (*seed_opt) {
            spec.seed = seed;
            for (auto& entry : spec.entries) entry.config.master_seed = seed;
        }
        if (*trials_opt) {
            if (trials < 1) throw std::runtime_error("--trials must be at least 1");
            spec.trials = trials;
        }
        if (*nodes_opt) spec.quadrature_nodes = nodes;
        if (!out_override.empty()) spec.out_dir = out_override;

        for (const std::string& path : rasm::run_spec(spec))
            std::cout << path << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
