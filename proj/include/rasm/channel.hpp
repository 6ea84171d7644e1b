#pragma once

#include <complex>
#include <vector>

#include "rasm/rng.hpp"

namespace rasm {

using cplx = std::complex<double>;

// One draw of the two Rayleigh links: h1 (transmitter -> RIS, length N) and
// h2 (RIS -> receiver, N_r x N, row-major). Polar accessors follow the
// convention h1[i] = alpha_i * exp(-j theta_i), h2[m][i] = beta * exp(-j omega).
class ChannelRealization {
public:
    ChannelRealization(std::vector<cplx> h1, std::vector<cplx> h2, int n_rx);

    int n_elements() const { return static_cast<int>(h1_.size()); }
    int n_rx() const { return n_rx_; }

    // i is 0-based element index, m is 0-based antenna index
    cplx h1(int i) const { return h1_[i]; }
    cplx h2(int m, int i) const { return h2_[static_cast<std::size_t>(m) * h1_.size() + i]; }

    double alpha(int i) const { return std::abs(h1_[i]); }
    double theta(int i) const { return -std::arg(h1_[i]); }
    double beta(int i, int m) const { return std::abs(h2(m, i)); }
    double omega(int i, int m) const { return -std::arg(h2(m, i)); }

private:
    std::vector<cplx> h1_;
    std::vector<cplx> h2_;  // row-major, n_rx rows of n_elements
    int n_rx_;
};

// Every entry i.i.d. circularly symmetric complex Gaussian CN(0, 1).
ChannelRealization draw_channels(int n, int n_rx, RngStream& rng);

// i.i.d. CN(0, n0) noise vector of length n_rx.
std::vector<cplx> draw_noise(int n_rx, double n0, RngStream& rng);

} // namespace rasm
