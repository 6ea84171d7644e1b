#pragma once

#include <vector>

#include "rasm/channel.hpp"
#include "rasm/mapping.hpp"
#include "rasm/ris.hpp"

namespace rasm {

enum class ModulationKind { Psk, Qam };

// Unit-average-energy constellation. PSK points are unit-modulus; QAM points
// are scaled so (1/M) * sum |x_k|^2 = 1.
struct Constellation {
    ModulationKind kind = ModulationKind::Psk;
    int order = 2;
    std::vector<cplx> points;

    cplx point(int k) const { return points.at(k - 1); }  // k is 1-based
};

Constellation make_constellation(ModulationKind kind, int order);

struct ReceivedSignal {
    std::vector<cplx> y;
    int true_r = 0;
    int true_k = 0;
    double n0 = 0.0;
};

// y = effective_gain(ch, profile) * x_k + CN(0, n0) noise
ReceivedSignal transmit(const ChannelRealization& ch, const RisPhaseProfile& profile, int r,
                        int k, const Constellation& constellation, double n0, RngStream& rng);

// Candidate gain vectors for all D hypotheses of one channel realization,
// computed once and reused across the symbol loop.
std::vector<EffectiveGain> candidate_gains(const ChannelRealization& ch, const AcTable& table,
                                           double es = 1.0);

// Joint ML detection: argmin over (r, k) of ||y - G_r x_k||^2, ties broken
// toward the smallest (r, k) pair.
IndexPair ml_detect(const ReceivedSignal& y, const std::vector<EffectiveGain>& candidates,
                    const Constellation& constellation);

IndexPair ml_detect(const ReceivedSignal& y, const AcTable& table, const ChannelRealization& ch,
                    const Constellation& constellation);

} // namespace rasm
