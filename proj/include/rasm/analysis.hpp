#pragma once

#include <functional>
#include <vector>

#include "rasm/channel.hpp"
#include "rasm/mapping.hpp"
#include "rasm/montecarlo.hpp"

namespace rasm {

// Mean vector and covariance matrix of a real Gaussian vector whose squared
// norm is the quadratic form of interest.
struct QuadraticFormStats {
    std::vector<double> mu;
    std::vector<std::vector<double>> sigma;   // symmetric, PSD

    int dim() const { return static_cast<int>(mu.size()); }
};

// MGF of |z|^2 for z ~ N(mu, sigma):
//   det(I - 2t Sigma)^(-1/2) * exp(t mu^T (I - 2t Sigma)^(-1) mu)
// The (I - 2t Sigma) form stays well defined for singular covariances; any
// component of mu in Sigma's null space contributes the deterministic offset
// exp(t*|mu0|^2). Throws std::domain_error when I - 2t Sigma is not positive
// definite (possible only for t > 0 past the domain edge).
double mgf_quadratic_gaussian(double t, const QuadraticFormStats& stats);

// How the 4x4 covariance of the cross-detection Gaussian vector is filled in.
//   ClosedForm    - the compact diagonal formula (per-side AC size and even
//                   element split), cross terms from the moment tables.
//   MomentMatched - every entry from the per-element moment bookkeeping;
//                   matches sampled covariances entrywise.
// The two agree for single-antenna combinations and differ once an AC has
// two or more antennas.
enum class CovarianceModel { ClosedForm, MomentMatched };

// Statistics of z1 = [(q1)_re, (q1)_im, (q2)_re, (q2)_im], where q1 collects
// the detection-metric difference over the transmitted AC's antennas and q2
// over the hypothesized AC's antennas (r != r_hat case).
QuadraticFormStats z1_stats(int n_res, const AntennaCombination& vr,
                            const AntennaCombination& vrh, cplx xk, cplx xkh,
                            CovarianceModel model = CovarianceModel::ClosedForm);

// MGF factor for the residual antennas in the cross case:
//   [1 / (1 - t N (|xk|^2 + |xkh|^2))]^(n_l / 2)
// The half-exponent count n_l is supplied by the caller; see AnalysisOptions
// for the two conventions.
double mgf_z1_cross(double t, int n_res, cplx xk, cplx xkh, int n_l);

// Options for the r == r_hat MGF.
struct Z2Options {
    // model the aligned-antenna sum per antenna (moment-matched) instead of
    // as one aggregate Gaussian
    bool per_component = false;
    // drop the AC-size factor from the residual-antenna variance
    bool tail_single_antenna = false;
};

// MGF of the symbol-error-only squared distance (same AC, xk != xkh):
// aligned part (aggregate mean Na*Ne*pi*|dx|/4, variance |dx|^2*Na*Ne*(32-pi^2)/16,
// or the per-antenna product when per_component is set) times the central
// chi-square factor for the n_rx - n_a residual antennas.
double mgf_z2(double t, int n_res, int n_rx, cplx xk, cplx xkh,
              const AntennaCombination& vr, const Z2Options& options = {});

using MgfFunction = std::function<double(double)>;

// (1/pi) * integral over (0, pi/2) of mgf(-1 / (4 sin^2(tau) n0)) dtau,
// fixed-node Gauss-Legendre, clamped to [0, 0.5]. Throws std::runtime_error
// naming the offending tau if the mgf evaluates non-finite.
double pep_quadrature(const MgfFunction& mgf, double n0, int nodes = 64);

// Closed-form surrogate from the three-term exponential bound on Q(x):
//   (1/6) M(-1/n0) + (1/12) M(-1/(2 n0)) + (1/4) M(-1/(4 n0))
double pep_closed_bound(const MgfFunction& mgf, double n0);

struct PepEntry {
    int r, k;        // transmitted pair (1-based)
    int rh, kh;      // hypothesized pair
    bool cross_ac;   // true: r != rh path, false: same-AC path
    double pep;
    int weight;      // Hamming distance between the two bit words
};

struct AberResult {
    double aber = 0.0;
    std::vector<PepEntry> pairs;   // populated when requested
};

struct AnalysisOptions {
    CovarianceModel covariance = CovarianceModel::ClosedForm;
    // residual-factor exponent convention for the cross case: the overlap
    // count |Vr n Vrh| as published, or two per antenna outside both ACs
    // (the count the residual sum actually runs over)
    bool cross_dof_unselected = false;
    Z2Options z2;
    int quadrature_nodes = 64;
    bool keep_pep_table = false;
};

// Union bound on the average BER: (1 / (M D log2(M D))) * sum over ordered
// pairs {r,k} != {rh,kh} of PEP * (bit-word Hamming distance). PEP uses the
// same-AC path when r == rh and the cross path otherwise.
AberResult union_bound_aber(const SystemConfig& config, const AcTable& table,
                            const SymbolMap& symbols, const Constellation& constellation,
                            double n0, const AnalysisOptions& options = {});

} // namespace rasm
