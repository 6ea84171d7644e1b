#include <doctest.h>

#include <cmath>
#include <complex>

#include "rasm/ris.hpp"

using namespace rasm;

TEST_CASE("element partition is balanced and covers every element") {
    const AntennaCombination ac{{2, 3, 5}};
    const auto parts = partition_elements(8, ac);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].size() == 3);   // the two leftover elements go to the
    CHECK(parts[1].size() == 3);   // first parts
    CHECK(parts[2].size() == 2);
    int covered = 0;
    for (const auto& p : parts) {
        CHECK(p.begin == covered);
        covered = p.end;
    }
    CHECK(covered == 8);

    const auto even = partition_elements(8, AntennaCombination{{1, 2}});
    CHECK(even[0].size() == 4);
    CHECK(even[1].size() == 4);
}

TEST_CASE("configured phases make every serving-antenna term real non-negative") {
    RngStream rng(11);
    const auto ch = draw_channels(8, 4, rng);
    const AntennaCombination ac{{1, 3}};
    const auto profile = configure_phases(ch, ac);
    REQUIRE(profile.phases.size() == 8);
    for (int i = 0; i < 8; ++i) {
        const int l = profile.serving_antenna(i);
        const cplx term = ch.h2(l, i) * std::exp(cplx(0.0, profile.phases[i])) * ch.h1(i);
        CHECK(term.imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(term.real() >= 0.0);
        CHECK(term.real() == doctest::Approx(ch.beta(i, l) * ch.alpha(i)));
    }
}

TEST_CASE("per-antenna decomposition equals the matrix-product gains") {
    RngStream rng(23);
    for (int rep = 0; rep < 50; ++rep) {
        const auto ch = draw_channels(rep % 2 ? 8 : 16, 4, rng);
        const AntennaCombination ac{{1, 2, 4}};
        const auto profile = configure_phases(ch, ac);
        const auto gains = effective_gain(ch, profile);
        for (int m = 0; m < 4; ++m) {
            const auto dec = per_antenna_gain(ch, profile, m);
            CHECK(std::abs(dec.total - gains.g[m]) < 1e-10);
            CHECK(std::abs(dec.constructive + dec.non_constructive - dec.total) < 1e-10);
        }
    }
}

TEST_CASE("phase alignment beats any misaligned configuration at the target") {
    RngStream rng(31);
    const auto ch = draw_channels(8, 2, rng);
    const AntennaCombination ac{{1}};
    const auto aligned = configure_phases(ch, ac);
    const auto best = per_antenna_gain(ch, aligned, 0);

    // the aligned gain is the sum of magnitudes, an upper bound on the
    // modulus of any other phase choice
    RisPhaseProfile other = aligned;
    for (double& phi : other.phases) phi += rng.next_double() * 3.0;
    const auto worse = per_antenna_gain(ch, other, 0);
    CHECK(std::abs(worse.total) <= best.constructive + 1e-12);
}

TEST_CASE("per-antenna SNR guards the noise variance") {
    RngStream rng(3);
    const auto ch = draw_channels(8, 2, rng);
    const auto profile = configure_phases(ch, AntennaCombination{{1}});
    const auto gains = effective_gain(ch, profile);
    CHECK(snr_at_antenna(gains, 0, cplx(1.0, 0.0), 1.0) ==
          doctest::Approx(std::norm(gains.g[0])));
    CHECK_THROWS(snr_at_antenna(gains, 0, cplx(1.0, 0.0), 0.0));
}
