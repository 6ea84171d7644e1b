#include "rasm/mapping.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "rasm/rng.hpp"

namespace rasm {

int SymbolMap::bits() const {
    if (order < 1 || (order & (order - 1)) != 0)
        throw std::invalid_argument("modulation order must be a power of 2");
    return std::countr_zero(static_cast<unsigned>(order));
}

namespace {

std::uint32_t gray_encode(std::uint32_t v) { return v ^ (v >> 1); }

std::uint32_t gray_decode(std::uint32_t g) {
    std::uint32_t v = 0;
    for (; g != 0; g >>= 1) v ^= g;
    return v;
}

} // namespace

int SymbolMap::word_to_index(std::uint32_t word) const {
    if (word >= static_cast<std::uint32_t>(order))
        throw std::invalid_argument("symbol word out of range");
    const std::uint32_t idx = gray ? gray_decode(word) : word;
    return static_cast<int>(idx) + 1;
}

std::uint32_t SymbolMap::index_to_word(int k) const {
    if (k < 1 || k > order) throw std::invalid_argument("constellation index out of range");
    const std::uint32_t idx = static_cast<std::uint32_t>(k - 1);
    return gray ? gray_encode(idx) : idx;
}

std::vector<AntennaCombination> enumerate_acs(int n_rx) {
    if (n_rx < 1) throw std::invalid_argument("receive antenna count must be at least 1");
    if (n_rx > 30) throw std::invalid_argument("receive antenna count too large");
    std::vector<AntennaCombination> out;
    out.reserve((1u << n_rx) - 1);
    for (std::uint32_t mask = 1; mask < (1u << n_rx); ++mask) {
        AntennaCombination ac;
        for (int i = 0; i < n_rx; ++i)
            if (mask & (1u << i)) ac.antennas.push_back(i + 1);
        out.push_back(std::move(ac));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.antennas.size() != b.antennas.size()) return a.antennas.size() < b.antennas.size();
        return a.antennas < b.antennas;
    });
    return out;
}

int index_bits(int n_rx) {
    if (n_rx < 1) throw std::invalid_argument("receive antenna count must be at least 1");
    const std::uint64_t j = (1ull << n_rx) - 1;
    return 63 - std::countl_zero(j);  // floor(log2 J)
}

AcTable select_acs(int n_rx, std::uint64_t seed) {
    auto all = enumerate_acs(n_rx);
    const int b1 = index_bits(n_rx);
    const std::size_t d = 1ull << b1;

    // partial Fisher-Yates over the enumeration
    RngStream rng(seed ^ 0x5ac5ac5ac5ac5ac5ULL);
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t j = i + rng.next_below(all.size() - i);
        std::swap(all[i], all[j]);
    }
    all.resize(d);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.antennas.size() != b.antennas.size()) return a.antennas.size() < b.antennas.size();
        return a.antennas < b.antennas;
    });

    AcTable table;
    table.entries = std::move(all);
    table.n_rx = n_rx;
    table.b1 = b1;
    table.seed = seed;
    return table;
}

IndexPair bits_to_indices(std::uint32_t bits, int bit_count, const AcTable& table,
                          const SymbolMap& symbols) {
    const int b2 = symbols.bits();
    if (bit_count != table.b1 + b2) throw std::invalid_argument("bit word length mismatch");
    if (bit_count < 32 && bits >> bit_count)
        throw std::invalid_argument("bit word has stray high bits");
    const std::uint32_t ac_word = bits >> b2;
    const std::uint32_t sym_word = bits & ((1u << b2) - 1u);
    return IndexPair{static_cast<int>(ac_word) + 1, symbols.word_to_index(sym_word)};
}

std::uint32_t indices_to_bits(int r, int k, const AcTable& table, const SymbolMap& symbols) {
    if (r < 1 || r > table.count()) throw std::invalid_argument("AC index out of range");
    const int b2 = symbols.bits();
    return (static_cast<std::uint32_t>(r - 1) << b2) | symbols.index_to_word(k);
}

std::string AcTable::serialize() const {
    std::ostringstream os;
    for (const auto& ac : entries) {
        for (std::size_t i = 0; i < ac.antennas.size(); ++i) {
            if (i) os << ',';
            os << ac.antennas[i];
        }
        os << '\n';
    }
    return os.str();
}

} // namespace rasm
