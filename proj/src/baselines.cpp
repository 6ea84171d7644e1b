#include "rasm/baselines.hpp"

#include <algorithm>
#include <stdexcept>

#include "rasm/rng.hpp"

namespace rasm {

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t c = 1;
    for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
}

void sort_canonical(std::vector<AntennaCombination>& acs) {
    std::sort(acs.begin(), acs.end(), [](const auto& a, const auto& b) {
        if (a.antennas.size() != b.antennas.size()) return a.antennas.size() < b.antennas.size();
        return a.antennas < b.antennas;
    });
}

} // namespace

int fixed_size_index_bits(int n, int k) {
    const std::uint64_t c = binomial(n, k);
    if (c == 0) throw std::invalid_argument("invalid antenna subset size");
    int b = 0;
    while ((2ull << b) <= c) ++b;
    return b;
}

std::pair<AcTable, SymbolMap> make_scheme_table(const SystemConfig& config) {
    config.validate();
    SymbolMap symbols;
    symbols.order = config.scheme == SchemeKind::Rgssk ? 1 : config.order;
    symbols.gray = config.gray;

    AcTable table;
    table.n_rx = config.n_rx;
    table.seed = config.master_seed;

    switch (config.scheme) {
    case SchemeKind::Rasm:
        return {select_acs(config.n_rx, config.master_seed), symbols};
    case SchemeKind::Rsm: {
        if ((config.n_rx & (config.n_rx - 1)) != 0)
            throw std::invalid_argument("RSM needs a power-of-2 receive antenna count");
        for (int m = 1; m <= config.n_rx; ++m)
            table.entries.push_back(AntennaCombination{{m}});
        table.b1 = fixed_size_index_bits(config.n_rx, 1);
        return {std::move(table), symbols};
    }
    case SchemeKind::Rgsm:
    case SchemeKind::Rgssk: {
        const int n_s = config.n_selected;
        std::vector<AntennaCombination> pool;
        for (const auto& ac : enumerate_acs(config.n_rx))
            if (ac.size() == n_s) pool.push_back(ac);
        table.b1 = fixed_size_index_bits(config.n_rx, n_s);
        const std::size_t d = 1ull << table.b1;
        RngStream rng(config.master_seed ^ 0x5ac5ac5ac5ac5ac5ULL);
        for (std::size_t i = 0; i < d; ++i) {
            const std::size_t j = i + rng.next_below(pool.size() - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(d);
        sort_canonical(pool);
        table.entries = std::move(pool);
        return {std::move(table), symbols};
    }
    }
    throw std::logic_error("unknown scheme");
}

} // namespace rasm
