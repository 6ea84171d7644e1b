#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rasm/montecarlo.hpp"

namespace rasm {

// One experiment description: which schemes to run, over which SNR grid,
// and where the CSVs go. Parsed from a flat INI-style document where each
// section describes one scheme configuration.
struct RunSpec {
    enum class Mode { Simulate, Analyze, Compare };

    struct Entry {
        std::string label;   // section name; used for file names / columns
        SystemConfig config;
    };

    Mode mode = Mode::Simulate;
    std::vector<Entry> entries;
    double snr_start = 0.0;
    double snr_stop = 0.0;
    double snr_step = 2.0;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0;
    int quadrature_nodes = 64;
    std::string out_dir = ".";

    std::vector<double> snr_grid() const;
};

// Parses and validates a run document. Throws std::runtime_error with the
// offending line number on unknown keys, missing fields, or bad values.
RunSpec parse_run_spec(const std::string& text);

// Executes the run and writes one CSV per config (simulate/analyze) or one
// merged CSV (compare) under spec.out_dir. Throws on unwritable outputs.
// Returns the list of files written.
std::vector<std::string> run_spec(const RunSpec& spec);

} // namespace rasm
