#pragma once

#include <cstdint>
#include <vector>

#include "rasm/mapping.hpp"
#include "rasm/modem.hpp"

namespace rasm {

enum class SchemeKind { Rasm, Rsm, Rgsm, Rgssk };

struct SystemConfig {
    SchemeKind scheme = SchemeKind::Rasm;
    int n_res = 8;            // N
    int n_rx = 4;             // N_r (the scheme-visible antenna count)
    int n_selected = 0;       // N_s, RGSM/RGSSK only
    ModulationKind modulation = ModulationKind::Psk;
    int order = 2;            // M (forced to 1 for RGSSK)
    bool gray = false;
    std::uint64_t master_seed = 0;
    double symbol_energy = 1.0;

    void validate() const;
};

// bits per channel use for the configured scheme
int bpcu(const SystemConfig& config);

// Everything derived from a config that is shared across trials.
struct SchemeSetup {
    SystemConfig config;
    AcTable table;
    SymbolMap symbols;
    Constellation constellation;
    int bits = 0;
};

SchemeSetup make_setup(const SystemConfig& config);

struct BerPoint {
    double snr_db = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t bit_errors = 0;
    double ber = 0.0;
    double ci95 = 0.0;   // Wilson 95% half-width on the bit-error proportion
};

struct BerCurve {
    std::vector<BerPoint> points;
};

// One end-to-end realization: random bits -> mapping -> channel -> RIS ->
// transmit at N0 = 1/10^(snr/10) -> joint ML detection. Returns the Hamming
// distance between transmitted and detected bit words. Fully determined by
// (master seed, snr_db, trial_index).
int run_trial(const SchemeSetup& setup, double snr_db, std::uint64_t trial_index);
int run_trial(const SystemConfig& config, double snr_db, std::uint64_t trial_index);

// Parallel sweep; results are identical for any thread count.
BerCurve run_ber(const SystemConfig& config, const std::vector<double>& snr_grid_db,
                 std::uint64_t trials_per_point, int n_threads = 0);

// 95% Wilson half-width for errs successes out of n
double wilson_half_width(std::uint64_t errs, std::uint64_t n);

// thread count from the RASM_THREADS environment variable, else hardware
int default_thread_count();

} // namespace rasm
