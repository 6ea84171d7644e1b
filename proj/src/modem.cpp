#include "rasm/modem.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rasm {

namespace {

bool is_power_of_two(int v) { return v >= 1 && (v & (v - 1)) == 0; }

Constellation make_psk(int order) {
    Constellation c;
    c.kind = ModulationKind::Psk;
    c.order = order;
    c.points.resize(order);
    for (int k = 0; k < order; ++k) {
        double angle = 2.0 * M_PI * k / order;
        if (order == 4) angle += M_PI / 4.0;  // QPSK on the diagonals
        c.points[k] = std::polar(1.0, angle);
    }
    if (order == 2) {
        c.points[0] = cplx(1.0, 0.0);
        c.points[1] = cplx(-1.0, 0.0);
    }
    return c;
}

Constellation make_qam(int order) {
    // rectangular grid, wider in-phase side for non-square orders
    int cols = 1;
    while (cols * cols < order) cols <<= 1;
    const int rows = order / cols;
    Constellation c;
    c.kind = ModulationKind::Qam;
    c.order = order;
    c.points.reserve(order);
    double energy = 0.0;
    for (int r = 0; r < rows; ++r) {
        for (int q = 0; q < cols; ++q) {
            const cplx p(2 * q - (cols - 1), 2 * r - (rows - 1));
            energy += std::norm(p);
            c.points.push_back(p);
        }
    }
    const double scale = std::sqrt(order / energy);
    for (auto& p : c.points) p *= scale;
    return c;
}

} // namespace

Constellation make_constellation(ModulationKind kind, int order) {
    if (!is_power_of_two(order)) throw std::invalid_argument("modulation order must be a power of 2");
    if (order == 1) {
        // degenerate unit pilot for schemes with no symbol bits
        Constellation c;
        c.kind = kind;
        c.order = 1;
        c.points = {cplx(1.0, 0.0)};
        return c;
    }
    if (kind == ModulationKind::Psk) return make_psk(order);
    if (order < 4) throw std::invalid_argument("QAM order must be at least 4");
    return make_qam(order);
}

ReceivedSignal transmit(const ChannelRealization& ch, const RisPhaseProfile& profile, int r,
                        int k, const Constellation& constellation, double n0, RngStream& rng) {
    const EffectiveGain gain = effective_gain(ch, profile);
    const cplx x = constellation.point(k);
    ReceivedSignal out;
    out.true_r = r;
    out.true_k = k;
    out.n0 = n0;
    out.y = draw_noise(ch.n_rx(), n0, rng);
    for (std::size_t m = 0; m < out.y.size(); ++m) out.y[m] += gain.g[m] * x;
    return out;
}

std::vector<EffectiveGain> candidate_gains(const ChannelRealization& ch, const AcTable& table,
                                           double es) {
    std::vector<EffectiveGain> gains;
    gains.reserve(table.count());
    for (int r = 1; r <= table.count(); ++r)
        gains.push_back(effective_gain(ch, configure_phases(ch, table.ac(r)), es));
    return gains;
}

IndexPair ml_detect(const ReceivedSignal& y, const std::vector<EffectiveGain>& candidates,
                    const Constellation& constellation) {
    double best = std::numeric_limits<double>::infinity();
    IndexPair best_pair{1, 1};
    for (std::size_t r = 0; r < candidates.size(); ++r) {
        const auto& g = candidates[r].g;
        for (int k = 1; k <= constellation.order; ++k) {
            const cplx x = constellation.point(k);
            double metric = 0.0;
            for (std::size_t m = 0; m < y.y.size(); ++m) metric += std::norm(y.y[m] - g[m] * x);
            if (metric < best) {
                best = metric;
                best_pair = IndexPair{static_cast<int>(r) + 1, k};
            }
        }
    }
    return best_pair;
}

IndexPair ml_detect(const ReceivedSignal& y, const AcTable& table, const ChannelRealization& ch,
                    const Constellation& constellation) {
    return ml_detect(y, candidate_gains(ch, table), constellation);
}

} // namespace rasm
