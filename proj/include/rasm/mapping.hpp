#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rasm {

// One antenna combination: the set of receive antennas jointly targeted by
// the RIS in a channel use. Indices are 1-based and kept sorted.
struct AntennaCombination {
    std::vector<int> antennas;

    int size() const { return static_cast<int>(antennas.size()); }
    bool operator==(const AntennaCombination&) const = default;
};

// bits <-> constellation index map for the symbol field of the bit word.
// M = 1 is the no-symbol-bits sentinel (space-shift-keying style schemes).
struct SymbolMap {
    int order = 2;       // M
    bool gray = false;   // optional Gray labeling, natural binary by default

    int bits() const;                       // b2 = log2 M
    int word_to_index(std::uint32_t word) const;  // b2-bit word -> k in [1, M]
    std::uint32_t index_to_word(int k) const;
};

// The D selected antenna combinations plus the bit-word assignment.
// Entry r (1-based) corresponds to the b1-bit word r-1 in natural binary.
struct AcTable {
    std::vector<AntennaCombination> entries;
    int n_rx = 0;
    int b1 = 0;
    std::uint64_t seed = 0;

    int count() const { return static_cast<int>(entries.size()); }  // D
    const AntennaCombination& ac(int r) const { return entries.at(r - 1); }

    // one AC per line, comma-separated antenna indices
    std::string serialize() const;
};

// All non-empty subsets of {1..n_rx}, ordered by size then lexicographically.
std::vector<AntennaCombination> enumerate_acs(int n_rx);

// Number of index bits available from J = 2^n_rx - 1 combinations.
int index_bits(int n_rx);

// Seeded uniform selection of D = 2^b1 ACs without replacement; the selected
// set is re-sorted canonically before bit words are assigned, so the
// bits<->AC contract is independent of draw order.
AcTable select_acs(int n_rx, std::uint64_t seed);

// Splits a b-bit word into (r, k), both 1-based; first b1 bits pick the AC.
struct IndexPair {
    int r;
    int k;
};

IndexPair bits_to_indices(std::uint32_t bits, int bit_count, const AcTable& table,
                          const SymbolMap& symbols);
std::uint32_t indices_to_bits(int r, int k, const AcTable& table, const SymbolMap& symbols);

} // namespace rasm
