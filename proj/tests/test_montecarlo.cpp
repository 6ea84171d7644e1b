#include <doctest.h>

#include "rasm/montecarlo.hpp"

using namespace rasm;

namespace {

SystemConfig rasm_config(int n, int n_rx, int m) {
    SystemConfig config;
    config.scheme = SchemeKind::Rasm;
    config.n_res = n;
    config.n_rx = n_rx;
    config.order = m;
    return config;
}

} // namespace

TEST_CASE("bits per channel use by scheme") {
    CHECK(bpcu(rasm_config(16, 4, 2)) == 4);
    CHECK(bpcu(rasm_config(8, 5, 2)) == 5);

    SystemConfig rgssk;
    rgssk.scheme = SchemeKind::Rgssk;
    rgssk.n_res = 8;
    rgssk.n_rx = 7;
    rgssk.n_selected = 3;
    rgssk.order = 1;
    CHECK(bpcu(rgssk) == 5);   // floor(log2 C(7,3)) = floor(log2 35)

    SystemConfig rsm;
    rsm.scheme = SchemeKind::Rsm;
    rsm.n_res = 8;
    rsm.n_rx = 16;
    rsm.order = 2;
    CHECK(bpcu(rsm) == 5);

    SystemConfig rgsm;
    rgsm.scheme = SchemeKind::Rgsm;
    rgsm.n_res = 8;
    rgsm.n_rx = 6;
    rgsm.n_selected = 3;
    rgsm.order = 2;
    CHECK(bpcu(rgsm) == 5);   // floor(log2 20) + 1
}

TEST_CASE("config validation rejects bad parameters") {
    CHECK_THROWS_WITH(bpcu(rasm_config(8, 4, 3)), "modulation order must be a power of 2");
    SystemConfig bad = rasm_config(8, 4, 2);
    bad.n_res = 0;
    CHECK_THROWS(bad.validate());
    SystemConfig rgsm;
    rgsm.scheme = SchemeKind::Rgsm;
    rgsm.n_res = 8;
    rgsm.n_rx = 6;
    rgsm.n_selected = 0;
    CHECK_THROWS(rgsm.validate());
}

TEST_CASE("single trials are deterministic and bounded") {
    const auto setup = make_setup(rasm_config(8, 4, 2));
    for (std::uint64_t t = 0; t < 50; ++t) {
        const int e1 = run_trial(setup, 2.0, t);
        const int e2 = run_trial(setup, 2.0, t);
        CHECK(e1 == e2);
        CHECK(e1 >= 0);
        CHECK(e1 <= setup.bits);
    }
}

TEST_CASE("noiseless trials never err") {
    const auto setup = make_setup(rasm_config(8, 4, 2));
    int errors = 0;
    for (std::uint64_t t = 0; t < 1000; ++t) errors += run_trial(setup, 300.0, t);
    CHECK(errors == 0);
}

TEST_CASE("BER curve trends and the guessing floor") {
    const auto config = rasm_config(8, 4, 2);
    const auto curve = run_ber(config, {-40.0, -10.0, 10.0}, 4000);
    REQUIRE(curve.points.size() == 3);
    CHECK(curve.points[0].ber == doctest::Approx(0.5).epsilon(0.1));
    CHECK(std::abs(curve.points[0].ber - 0.5) < 0.05);
    CHECK(curve.points[2].ber < curve.points[1].ber);
}

TEST_CASE("sweeps are independent of the thread count") {
    const auto config = rasm_config(8, 4, 2);
    const auto one = run_ber(config, {0.0, 4.0}, 20000, 1);
    const auto three = run_ber(config, {0.0, 4.0}, 20000, 3);
    REQUIRE(one.points.size() == three.points.size());
    for (std::size_t i = 0; i < one.points.size(); ++i) {
        CHECK(one.points[i].bit_errors == three.points[i].bit_errors);
        CHECK(one.points[i].ber == three.points[i].ber);
        CHECK(one.points[i].ci95 == three.points[i].ci95);
    }
}

TEST_CASE("confidence half-width shrinks like one over root n") {
    const double narrow = wilson_half_width(400, 400000);
    const double wide = wilson_half_width(100, 100000);
    CHECK(narrow / wide == doctest::Approx(0.5).epsilon(0.02));
    CHECK(wilson_half_width(0, 0) == 0.5);
}
