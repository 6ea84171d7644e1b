#pragma once

#include <vector>

#include "rasm/channel.hpp"
#include "rasm/mapping.hpp"

namespace rasm {

// Contiguous 0-based element index range [begin, end).
struct ElementRange {
    int begin;
    int end;

    int size() const { return end - begin; }
};

// Per-AC phase configuration of the reflecting elements (diagonal of Phi_r).
struct RisPhaseProfile {
    std::vector<double> phases;        // length N, radians
    AntennaCombination ac;
    std::vector<ElementRange> parts;   // parts[z] serves ac.antennas[z]

    // 0-based antenna served by element i
    int serving_antenna(int i) const;
};

// Splits the N elements into |ac| contiguous parts. Base size floor(N/N_a);
// the N mod N_a leftover elements go round-robin to the first parts, so
// sizes differ by at most 1 and no element is wasted.
std::vector<ElementRange> partition_elements(int n, const AntennaCombination& ac);

// phi_i = omega(i, l) + theta(i) for the antenna l served by element i, which
// makes every cascaded term for the serving antenna real and non-negative.
RisPhaseProfile configure_phases(const ChannelRealization& ch, const AntennaCombination& ac);

// Effective receive gains G_n for one phase profile.
struct EffectiveGain {
    std::vector<cplx> g;   // length N_r, includes the symbol-energy scale
    double symbol_energy;
};

// g = E_s * H2 * diag(exp(j phi)) * H1 (matrix-product route)
EffectiveGain effective_gain(const ChannelRealization& ch, const RisPhaseProfile& profile,
                             double es = 1.0);

// Same gains assembled from the per-antenna sum decomposition (constructive
// part over the serving elements plus the residual). Used as the algebraic
// cross-check of the matrix product.
struct GainDecomposition {
    cplx total;
    double constructive;       // sum of beta*alpha over the serving part, real
    cplx non_constructive;
};

GainDecomposition per_antenna_gain(const ChannelRealization& ch, const RisPhaseProfile& profile,
                                   int antenna, double es = 1.0);

// |g_n * symbol|^2 / n0
double snr_at_antenna(const EffectiveGain& gain, int antenna, cplx symbol, double n0);

} // namespace rasm
