#include "rasm/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace rasm {

ChannelRealization::ChannelRealization(std::vector<cplx> h1, std::vector<cplx> h2, int n_rx)
    : h1_(std::move(h1)), h2_(std::move(h2)), n_rx_(n_rx) {
    if (h1_.empty() || n_rx_ < 1 || h2_.size() != h1_.size() * static_cast<std::size_t>(n_rx_))
        throw std::invalid_argument("inconsistent channel dimensions");
}

ChannelRealization draw_channels(int n, int n_rx, RngStream& rng) {
    if (n < 1 || n_rx < 1) throw std::invalid_argument("channel dimensions must be at least 1");
    const double s = std::sqrt(0.5);  // unit total variance per complex entry
    std::vector<cplx> h1(n);
    for (auto& v : h1) v = cplx(s * rng.next_normal(), s * rng.next_normal());
    std::vector<cplx> h2(static_cast<std::size_t>(n) * n_rx);
    for (auto& v : h2) v = cplx(s * rng.next_normal(), s * rng.next_normal());
    return ChannelRealization(std::move(h1), std::move(h2), n_rx);
}

std::vector<cplx> draw_noise(int n_rx, double n0, RngStream& rng) {
    if (n0 < 0.0) throw std::invalid_argument("noise power must be non-negative");
    std::vector<cplx> out(n_rx);
    if (n0 == 0.0) return out;
    const double s = std::sqrt(n0 / 2.0);
    for (auto& v : out) v = cplx(s * rng.next_normal(), s * rng.next_normal());
    return out;
}

} // namespace rasm
