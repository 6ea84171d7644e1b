#include "rasm/ris.hpp"

#include <cmath>
#include <stdexcept>

namespace rasm {

std::vector<ElementRange> partition_elements(int n, const AntennaCombination& ac) {
    const int n_a = ac.size();
    if (n_a < 1) throw std::invalid_argument("antenna combination is empty");
    if (n < n_a) throw std::invalid_argument("fewer reflecting elements than antennas");
    const int base = n / n_a;
    const int leftover = n % n_a;
    std::vector<ElementRange> parts(n_a);
    int start = 0;
    for (int z = 0; z < n_a; ++z) {
        const int size = base + (z < leftover ? 1 : 0);
        parts[z] = ElementRange{start, start + size};
        start += size;
    }
    return parts;
}

int RisPhaseProfile::serving_antenna(int i) const {
    for (std::size_t z = 0; z < parts.size(); ++z)
        if (i >= parts[z].begin && i < parts[z].end) return ac.antennas[z] - 1;
    throw std::out_of_range("element index outside every part");
}

RisPhaseProfile configure_phases(const ChannelRealization& ch, const AntennaCombination& ac) {
    const int n = ch.n_elements();
    RisPhaseProfile profile;
    profile.ac = ac;
    profile.parts = partition_elements(n, ac);
    profile.phases.resize(n);
    for (std::size_t z = 0; z < profile.parts.size(); ++z) {
        const int l = ac.antennas[z] - 1;
        for (int i = profile.parts[z].begin; i < profile.parts[z].end; ++i)
            profile.phases[i] = ch.omega(i, l) + ch.theta(i);
    }
    return profile;
}

EffectiveGain effective_gain(const ChannelRealization& ch, const RisPhaseProfile& profile,
                             double es) {
    const int n = ch.n_elements();
    const int n_rx = ch.n_rx();
    if (static_cast<int>(profile.phases.size()) != n)
        throw std::invalid_argument("profile length does not match element count");
    std::vector<cplx> eff(n);
    for (int i = 0; i < n; ++i)
        eff[i] = std::polar(1.0, profile.phases[i]) * ch.h1(i);
    EffectiveGain out;
    out.symbol_energy = es;
    out.g.assign(n_rx, cplx{});
    for (int m = 0; m < n_rx; ++m) {
        cplx acc{};
        for (int i = 0; i < n; ++i) acc += ch.h2(m, i) * eff[i];
        out.g[m] = es * acc;
    }
    return out;
}

GainDecomposition per_antenna_gain(const ChannelRealization& ch, const RisPhaseProfile& profile,
                                   int antenna, double es) {
    const int n = ch.n_elements();
    GainDecomposition d{};
    bool selected = false;
    ElementRange own{0, 0};
    for (std::size_t z = 0; z < profile.parts.size(); ++z) {
        if (profile.ac.antennas[z] - 1 == antenna) {
            selected = true;
            own = profile.parts[z];
        }
    }
    cplx total{};
    for (int i = 0; i < n; ++i) {
        const cplx term = ch.h2(antenna, i) * std::polar(1.0, profile.phases[i]) * ch.h1(i);
        if (selected && i >= own.begin && i < own.end)
            d.constructive += ch.beta(i, antenna) * ch.alpha(i);
        else
            d.non_constructive += term;
        total += term;
    }
    d.total = es * total;
    d.constructive *= es;
    d.non_constructive *= es;
    return d;
}

double snr_at_antenna(const EffectiveGain& gain, int antenna, cplx symbol, double n0) {
    if (n0 <= 0.0) throw std::invalid_argument("noise power must be positive");
    const double mag = std::abs(gain.g.at(antenna) * symbol);
    return mag * mag / n0;
}

} // namespace rasm
