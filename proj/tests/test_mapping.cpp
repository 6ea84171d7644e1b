#include <doctest.h>

#include <set>

#include "rasm/mapping.hpp"

using namespace rasm;

TEST_CASE("enumerate_acs lists every non-empty subset, smallest first") {
    const auto acs = enumerate_acs(4);
    REQUIRE(acs.size() == 15);
    // singletons first, in antenna order
    CHECK(acs[0].antennas == std::vector<int>{1});
    CHECK(acs[3].antennas == std::vector<int>{4});
    CHECK(acs[4].antennas == std::vector<int>{1, 2});
    CHECK(acs[14].antennas == std::vector<int>{1, 2, 3, 4});
    for (std::size_t i = 1; i < acs.size(); ++i) {
        const bool ordered = acs[i - 1].size() < acs[i].size() ||
                             (acs[i - 1].size() == acs[i].size() &&
                              acs[i - 1].antennas < acs[i].antennas);
        CHECK(ordered);
    }
}

TEST_CASE("index_bits counts the usable AC index bits") {
    CHECK(index_bits(4) == 3);   // floor(log2 15)
    CHECK(index_bits(5) == 4);   // floor(log2 31)
    CHECK(index_bits(1) == 0);
    CHECK(index_bits(7) == 6);   // floor(log2 127)
}

TEST_CASE("select_acs picks 2^b1 distinct combinations deterministically") {
    const auto table = select_acs(4, 7);
    CHECK(table.b1 == 3);
    REQUIRE(table.count() == 8);
    std::set<std::vector<int>> seen;
    for (const auto& ac : table.entries) seen.insert(ac.antennas);
    CHECK(seen.size() == 8);

    const auto again = select_acs(4, 7);
    CHECK(table.entries == again.entries);

    // bit words attach to the canonically sorted table, not the draw order
    for (std::size_t i = 1; i < table.entries.size(); ++i) {
        const auto& a = table.entries[i - 1];
        const auto& b = table.entries[i];
        CHECK((a.size() < b.size() || (a.size() == b.size() && a.antennas < b.antennas)));
    }
}

TEST_CASE("symbol map round-trips words and indices") {
    const SymbolMap bpsk{2, false};
    CHECK(bpsk.bits() == 1);
    CHECK(bpsk.word_to_index(0) == 1);
    CHECK(bpsk.word_to_index(1) == 2);

    SymbolMap qam16{16, false};
    CHECK(qam16.bits() == 4);
    for (std::uint32_t w = 0; w < 16; ++w)
        CHECK(qam16.index_to_word(qam16.word_to_index(w)) == w);

    SymbolMap gray4{4, true};
    // adjacent words map to Gray-adjacent indices: 00,01,11,10
    CHECK(gray4.word_to_index(0) == 1);
    CHECK(gray4.word_to_index(1) == 2);
    CHECK(gray4.word_to_index(2) == 4);
    CHECK(gray4.word_to_index(3) == 3);

    const SymbolMap pilot{1, false};
    CHECK(pilot.bits() == 0);
    CHECK(pilot.word_to_index(0) == 1);
}

TEST_CASE("bit words split into AC index then symbol index") {
    const auto table = select_acs(4, 0);
    const SymbolMap symbols{2, false};
    const int bits = table.b1 + symbols.bits();
    REQUIRE(bits == 4);
    for (std::uint32_t w = 0; w < (1u << bits); ++w) {
        const auto pair = bits_to_indices(w, bits, table, symbols);
        CHECK(pair.r >= 1);
        CHECK(pair.r <= table.count());
        CHECK(pair.k >= 1);
        CHECK(pair.k <= 2);
        CHECK(indices_to_bits(pair.r, pair.k, table, symbols) == w);
        // first b1 bits select the AC
        CHECK(pair.r == static_cast<int>(w >> symbols.bits()) + 1);
    }
}
