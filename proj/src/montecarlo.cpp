#include "rasm/montecarlo.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "rasm/baselines.hpp"

namespace rasm {

void SystemConfig::validate() const {
    if (n_res < 1 || n_rx < 1) throw std::invalid_argument("counts must be at least 1");
    if (order < 1 || (order & (order - 1)) != 0)
        throw std::invalid_argument("modulation order must be a power of 2");
    if (scheme == SchemeKind::Rgsm || scheme == SchemeKind::Rgssk) {
        if (n_selected < 1 || n_selected > n_rx)
            throw std::invalid_argument("N_s must be in [1, N_r] for RGSM/RGSSK");
    }
    if (symbol_energy <= 0.0) throw std::invalid_argument("symbol energy must be positive");
}

int bpcu(const SystemConfig& config) {
    config.validate();
    const int b2 = std::countr_zero(static_cast<unsigned>(config.order));
    switch (config.scheme) {
    case SchemeKind::Rasm:
        return index_bits(config.n_rx) + b2;
    case SchemeKind::Rsm:
        if ((config.n_rx & (config.n_rx - 1)) != 0)
            throw std::invalid_argument("RSM needs a power-of-2 receive antenna count");
        return std::countr_zero(static_cast<unsigned>(config.n_rx)) + b2;
    case SchemeKind::Rgsm:
        return fixed_size_index_bits(config.n_rx, config.n_selected) + b2;
    case SchemeKind::Rgssk:
        return fixed_size_index_bits(config.n_rx, config.n_selected);
    }
    throw std::logic_error("unknown scheme");
}

SchemeSetup make_setup(const SystemConfig& config) {
    SchemeSetup setup;
    setup.config = config;
    auto [table, symbols] = make_scheme_table(config);
    setup.table = std::move(table);
    setup.symbols = symbols;
    setup.constellation = make_constellation(config.modulation, setup.symbols.order);
    setup.bits = setup.table.b1 + setup.symbols.bits();
    return setup;
}

int run_trial(const SchemeSetup& setup, double snr_db, std::uint64_t trial_index) {
    const auto& cfg = setup.config;
    const double n0 = 1.0 / std::pow(10.0, snr_db / 10.0);
    auto rng = RngStream::for_trial(cfg.master_seed, std::bit_cast<std::uint64_t>(snr_db),
                                    trial_index);

    const std::uint32_t word =
        static_cast<std::uint32_t>(rng.next_below(1ull << setup.bits));
    const IndexPair tx = bits_to_indices(word, setup.bits, setup.table, setup.symbols);

    const ChannelRealization ch = draw_channels(cfg.n_res, cfg.n_rx, rng);
    const RisPhaseProfile profile = configure_phases(ch, setup.table.ac(tx.r));
    const ReceivedSignal y = transmit(ch, profile, tx.r, tx.k, setup.constellation, n0, rng);
    const IndexPair rx = ml_detect(y, setup.table, ch, setup.constellation);

    const std::uint32_t detected = indices_to_bits(rx.r, rx.k, setup.table, setup.symbols);
    return std::popcount(word ^ detected);
}

int run_trial(const SystemConfig& config, double snr_db, std::uint64_t trial_index) {
    return run_trial(make_setup(config), snr_db, trial_index);
}

double wilson_half_width(std::uint64_t errs, std::uint64_t n) {
    if (n == 0) return 0.5;
    const double z = 1.959963984540054;
    const double z2 = z * z;
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(errs) / nn;
    const double denom = 1.0 + z2 / nn;
    return z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
}

int default_thread_count() {
    if (const char* env = std::getenv("RASM_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

BerCurve run_ber(const SystemConfig& config, const std::vector<double>& snr_grid_db,
                 std::uint64_t trials_per_point, int n_threads) {
    if (trials_per_point < 1) throw std::invalid_argument("need at least one trial per point");
    const SchemeSetup setup = make_setup(config);
    const int bits = setup.bits;
    if (n_threads <= 0) n_threads = default_thread_count();

    BerCurve curve;
    for (const double snr_db : snr_grid_db) {
        std::atomic<std::uint64_t> total_errors{0};
        std::atomic<std::uint64_t> next_block{0};
        constexpr std::uint64_t kBlock = 4096;
        auto worker = [&] {
            std::uint64_t local = 0;
            for (;;) {
                const std::uint64_t begin = next_block.fetch_add(kBlock);
                if (begin >= trials_per_point) break;
                const std::uint64_t end = std::min(begin + kBlock, trials_per_point);
                for (std::uint64_t t = begin; t < end; ++t)
                    local += static_cast<std::uint64_t>(run_trial(setup, snr_db, t));
            }
            total_errors.fetch_add(local);
        };
        std::vector<std::thread> pool;
        for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();

        BerPoint point;
        point.snr_db = snr_db;
        point.trials = trials_per_point;
        point.bit_errors = total_errors.load();
        const std::uint64_t n_bits = trials_per_point * static_cast<std::uint64_t>(bits);
        point.ber = static_cast<double>(point.bit_errors) / static_cast<double>(n_bits);
        point.ci95 = wilson_half_width(point.bit_errors, n_bits);
        curve.points.push_back(point);
    }
    return curve;
}

} // namespace rasm
