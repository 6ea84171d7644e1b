#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "rasm/modem.hpp"
#include "rasm/mapping.hpp"

using namespace rasm;

TEST_CASE("constellations are unit average energy") {
    const auto bpsk = make_constellation(ModulationKind::Psk, 2);
    CHECK(bpsk.point(1) == cplx(1.0, 0.0));
    CHECK(bpsk.point(2) == cplx(-1.0, 0.0));

    const auto qpsk = make_constellation(ModulationKind::Psk, 4);
    for (int k = 1; k <= 4; ++k) CHECK(std::abs(qpsk.point(k)) == doctest::Approx(1.0));

    const auto qam16 = make_constellation(ModulationKind::Qam, 16);
    double energy = 0.0;
    for (int k = 1; k <= 16; ++k) energy += std::norm(qam16.point(k));
    CHECK(energy / 16.0 == doctest::Approx(1.0));

    const auto pilot = make_constellation(ModulationKind::Psk, 1);
    CHECK(pilot.point(1) == cplx(1.0, 0.0));
}

TEST_CASE("noiseless transmission is detected exactly") {
    RngStream rng(17);
    const auto table = select_acs(4, 0);
    const auto constellation = make_constellation(ModulationKind::Psk, 2);
    for (int rep = 0; rep < 20; ++rep) {
        const auto ch = draw_channels(8, 4, rng);
        for (int r = 1; r <= table.count(); ++r) {
            for (int k = 1; k <= 2; ++k) {
                const auto profile = configure_phases(ch, table.ac(r));
                const auto y = transmit(ch, profile, r, k, constellation, 0.0, rng);
                const auto detected = ml_detect(y, table, ch, constellation);
                CHECK(detected.r == r);
                CHECK(detected.k == k);
            }
        }
    }
}

TEST_CASE("joint detector agrees with an exhaustive metric search") {
    RngStream rng(29);
    const auto table = select_acs(4, 0);
    const auto constellation = make_constellation(ModulationKind::Qam, 4);
    for (int rep = 0; rep < 200; ++rep) {
        const auto ch = draw_channels(8, 4, rng);
        const int r = 1 + static_cast<int>(rng.next_below(table.count()));
        const int k = 1 + static_cast<int>(rng.next_below(4));
        const auto profile = configure_phases(ch, table.ac(r));
        const auto y = transmit(ch, profile, r, k, constellation, 1.0, rng);

        const auto candidates = candidate_gains(ch, table);
        double best = std::numeric_limits<double>::infinity();
        IndexPair want{0, 0};
        for (int rr = 1; rr <= table.count(); ++rr) {
            for (int kk = 1; kk <= 4; ++kk) {
                double metric = 0.0;
                for (int m = 0; m < 4; ++m)
                    metric += std::norm(y.y[m] -
                                        candidates[rr - 1].g[m] * constellation.point(kk));
                if (metric < best) {
                    best = metric;
                    want = {rr, kk};
                }
            }
        }
        const auto got = ml_detect(y, candidates, constellation);
        CHECK(got.r == want.r);
        CHECK(got.k == want.k);
    }
}
