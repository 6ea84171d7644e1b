#include "rasm/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rasm/quadrature.hpp"
#include "rasm/ris.hpp"

namespace rasm {

namespace {

// Cholesky factor of a symmetric positive-definite matrix (in place, lower).
// Returns false when the matrix is not PD.
bool cholesky(std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    for (int j = 0; j < n; ++j) {
        double d = a[j][j];
        for (int k = 0; k < j; ++k) d -= a[j][k] * a[j][k];
        if (!(d > 0.0)) return false;
        a[j][j] = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double s = a[i][j];
            for (int k = 0; k < j; ++k) s -= a[i][k] * a[j][k];
            a[i][j] = s / a[j][j];
        }
    }
    return true;
}

// Solves L L^T x = b given the lower Cholesky factor.
std::vector<double> cholesky_solve(const std::vector<std::vector<double>>& l,
                                   std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < i; ++k) b[i] -= l[i][k] * b[k];
        b[i] /= l[i][i];
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) b[i] -= l[k][i] * b[k];
        b[i] /= l[i][i];
    }
    return b;
}

// 0-based serving antenna per element for one AC's balanced partition.
std::vector<int> serving_map(int n_res, const AntennaCombination& ac) {
    const auto parts = partition_elements(n_res, ac);
    std::vector<int> serve(n_res, -1);
    for (std::size_t z = 0; z < parts.size(); ++z)
        for (int i = parts[z].begin; i < parts[z].end; ++i)
            serve[i] = ac.antennas[z] - 1;
    return serve;
}

// One aggregate cascade sum per (antenna, phase profile). Second moments of
// the per-element products follow from phase cancellation: a cross moment
// survives only when the profile phases for the two factors cancel exactly,
// and its value is 1 when both factors share the receive antenna (|h2|^2)
// and pi/4 otherwise (product of two Rayleigh means).
struct Component {
    int antenna;   // 0-based receive antenna of the h2 row
    int profile;   // 0 = transmitted AC's phases, 1 = hypothesized AC's
};

struct ComplexMoments {
    std::vector<std::complex<double>> mean;
    std::vector<std::vector<std::complex<double>>> plain;   // Cov(W_p, W_q)
    std::vector<std::vector<std::complex<double>>> conj;    // Cov(W_p, conj W_q)
};

ComplexMoments cascade_moments(int n_res, const AntennaCombination& vr,
                               const AntennaCombination& vrh,
                               const std::vector<Component>& comps) {
    const auto sr = serving_map(n_res, vr);
    const auto srh = serving_map(n_res, vrh);
    const int kcount = static_cast<int>(comps.size());
    ComplexMoments m;
    m.mean.assign(kcount, 0.0);
    m.plain.assign(kcount, std::vector<std::complex<double>>(kcount, 0.0));
    m.conj = m.plain;

    // phase exponents cancel iff the signed antenna counts all vanish
    const auto cancels = [](int a1, int s1, int a2, int s2, int a3, int s3, int a4, int s4) {
        int count[4] = {0, 0, 0, 0};
        int label[4];
        int used = 0;
        const auto add = [&](int antenna, int sign) {
            for (int u = 0; u < used; ++u)
                if (label[u] == antenna) {
                    count[u] += sign;
                    return;
                }
            label[used] = antenna;
            count[used++] = sign;
        };
        add(a1, s1);
        add(a2, s2);
        add(a3, s3);
        add(a4, s4);
        for (int u = 0; u < used; ++u)
            if (count[u] != 0) return false;
        return true;
    };

    constexpr double kQuarterPi = M_PI / 4.0;
    for (int i = 0; i < n_res; ++i) {
        const int sv[2] = {sr[i], srh[i]};
        for (int p = 0; p < kcount; ++p) {
            const int sp = sv[comps[p].profile];
            const double ep = (sp == comps[p].antenna) ? kQuarterPi : 0.0;
            m.mean[p] += ep;
            for (int q = 0; q < kcount; ++q) {
                const int sq = sv[comps[q].profile];
                const double eq = (sq == comps[q].antenna) ? kQuarterPi : 0.0;
                const double bb = (comps[p].antenna == comps[q].antenna) ? 1.0 : kQuarterPi;
                if (cancels(sp, 1, comps[p].antenna, -1, sq, 1, comps[q].antenna, -1))
                    m.plain[p][q] += bb;
                if (cancels(sp, 1, comps[p].antenna, -1, sq, -1, comps[q].antenna, 1))
                    m.conj[p][q] += bb;
                m.plain[p][q] -= ep * eq;
                m.conj[p][q] -= ep * eq;
            }
        }
    }
    return m;
}

// Real mean/covariance of [re q_1, im q_1, ..., re q_J, im q_J] for complex
// linear combinations q_j = sum_p coeffs[j][p] W_p.
QuadraticFormStats real_stats(const std::vector<std::vector<std::complex<double>>>& coeffs,
                              const ComplexMoments& m) {
    const int j_count = static_cast<int>(coeffs.size());
    const int kcount = static_cast<int>(m.mean.size());
    std::vector<std::complex<double>> mq(j_count, 0.0);
    std::vector<std::vector<std::complex<double>>> q1(
        j_count, std::vector<std::complex<double>>(j_count, 0.0));
    auto q2 = q1;
    for (int a = 0; a < j_count; ++a) {
        for (int p = 0; p < kcount; ++p) mq[a] += coeffs[a][p] * m.mean[p];
        for (int b = 0; b < j_count; ++b)
            for (int p = 0; p < kcount; ++p)
                for (int q = 0; q < kcount; ++q) {
                    q1[a][b] += coeffs[a][p] * m.plain[p][q] * coeffs[b][q];
                    q2[a][b] += coeffs[a][p] * m.conj[p][q] * std::conj(coeffs[b][q]);
                }
    }
    QuadraticFormStats stats;
    stats.mu.assign(2 * j_count, 0.0);
    stats.sigma.assign(2 * j_count, std::vector<double>(2 * j_count, 0.0));
    for (int a = 0; a < j_count; ++a) {
        stats.mu[2 * a] = mq[a].real();
        stats.mu[2 * a + 1] = mq[a].imag();
        for (int b = 0; b < j_count; ++b) {
            const auto pq = q1[a][b];
            const auto pqc = q2[a][b];
            stats.sigma[2 * a][2 * b] = 0.5 * (pq + pqc).real();
            stats.sigma[2 * a + 1][2 * b + 1] = 0.5 * (pqc - pq).real();
            stats.sigma[2 * a][2 * b + 1] = 0.5 * (pq.imag() - pqc.imag());
            stats.sigma[2 * a + 1][2 * b] = 0.5 * (pq.imag() + pqc.imag());
        }
    }
    return stats;
}

// (1 - 2 t s2)^(-1/2) * exp(t mu^2 / (1 - 2 t s2)), the scalar case
double scalar_gaussian_mgf(double t, double mu, double s2) {
    const double a = 1.0 - 2.0 * t * s2;
    return std::exp(t * mu * mu / a) / std::sqrt(a);
}

} // namespace

double mgf_quadratic_gaussian(double t, const QuadraticFormStats& stats) {
    const int n = stats.dim();
    if (static_cast<int>(stats.sigma.size()) != n)
        throw std::invalid_argument("mu/sigma dimension mismatch");
    if (t == 0.0) return 1.0;
    // A = I - 2 t Sigma
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(stats.sigma[i].size()) != n)
            throw std::invalid_argument("sigma is not square");
        for (int j = 0; j < n; ++j) a[i][j] = -2.0 * t * stats.sigma[i][j];
        a[i][i] += 1.0;
    }
    if (!cholesky(a))
        throw std::domain_error("I - 2t*sigma is not positive definite at this t");
    const auto x = cholesky_solve(a, stats.mu);
    double quad = 0.0;
    double logdet_half = 0.0;
    for (int i = 0; i < n; ++i) {
        quad += stats.mu[i] * x[i];
        logdet_half += std::log(a[i][i]);
    }
    return std::exp(t * quad - logdet_half);
}

QuadraticFormStats z1_stats(int n_res, const AntennaCombination& vr,
                            const AntennaCombination& vrh, cplx xk, cplx xkh,
                            CovarianceModel model) {
    // components: both profiles' aggregate gains at every involved antenna
    std::vector<int> involved;
    for (int a : vr.antennas) involved.push_back(a);
    for (int a : vrh.antennas)
        if (std::find(involved.begin(), involved.end(), a) == involved.end())
            involved.push_back(a);
    std::sort(involved.begin(), involved.end());
    const int kc = static_cast<int>(involved.size());
    std::vector<Component> comps;
    comps.reserve(2 * kc);
    for (int a : involved) comps.push_back({a - 1, 0});
    for (int a : involved) comps.push_back({a - 1, 1});
    const auto moments = cascade_moments(n_res, vr, vrh, comps);

    // q1 sums the metric difference over the transmitted AC's antennas,
    // q2 over the hypothesized AC's antennas
    std::vector<std::vector<std::complex<double>>> coeffs(
        2, std::vector<std::complex<double>>(2 * kc, 0.0));
    for (int j = 0; j < kc; ++j) {
        const int antenna = involved[j];
        const bool in_r = std::find(vr.antennas.begin(), vr.antennas.end(), antenna) !=
                          vr.antennas.end();
        const bool in_rh = std::find(vrh.antennas.begin(), vrh.antennas.end(), antenna) !=
                           vrh.antennas.end();
        if (in_r) {
            coeffs[0][j] += xk;
            coeffs[0][kc + j] -= xkh;
        }
        if (in_rh) {
            coeffs[1][j] += xk;
            coeffs[1][kc + j] -= xkh;
        }
    }
    QuadraticFormStats stats = real_stats(coeffs, moments);

    if (model == CovarianceModel::ClosedForm) {
        // closed-form mean: the aligned sums contribute N pi/4 with the
        // transmitted symbol on the q1 side and the hypothesized symbol,
        // negated, on the q2 side (exact for disjoint ACs)
        const double scale = n_res * M_PI / 4.0;
        stats.mu = {scale * xk.real(), scale * xk.imag(), -scale * xkh.real(),
                    -scale * xkh.imag()};

        const auto diag = [n_res](int na, double comp_sq, double other_abs_sq) {
            const double ne = static_cast<double>(n_res) / na;
            return na * ((na - M_PI * M_PI / 16.0) * ne * comp_sq +
                         n_res * other_abs_sq / 2.0);
        };
        double printed[4];
        printed[0] = diag(vr.size(), xk.real() * xk.real(), std::norm(xkh));
        printed[1] = diag(vr.size(), xk.imag() * xk.imag(), std::norm(xkh));
        printed[2] = diag(vrh.size(), xkh.real() * xkh.real(), std::norm(xk));
        printed[3] = diag(vrh.size(), xkh.imag() * xkh.imag(), std::norm(xk));
        // transfer the bookkeeping correlations onto the closed-form
        // variances; rescaling a PSD matrix by positive diagonal weights
        // keeps it PSD, which pasting raw cross terms next to a different
        // diagonal would not
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                if (i == j) continue;
                const double denom = stats.sigma[i][i] * stats.sigma[j][j];
                const double rho =
                    denom > 0.0 ? stats.sigma[i][j] / std::sqrt(denom) : 0.0;
                stats.sigma[i][j] = rho * std::sqrt(printed[i] * printed[j]);
            }
        }
        for (int i = 0; i < 4; ++i) stats.sigma[i][i] = printed[i];
    }
    return stats;
}

double mgf_z1_cross(double t, int n_res, cplx xk, cplx xkh, int n_l) {
    if (n_l == 0 || t == 0.0) return 1.0;
    const double base = 1.0 / (1.0 - t * n_res * (std::norm(xk) + std::norm(xkh)));
    return std::pow(base, n_l / 2.0);
}

double mgf_z2(double t, int n_res, int n_rx, cplx xk, cplx xkh,
              const AntennaCombination& vr, const Z2Options& options) {
    const double dx = std::abs(xk - xkh);
    if (dx == 0.0 || t == 0.0) return 1.0;
    const double dx2 = dx * dx;
    const int na = vr.size();
    double value = 1.0;
    if (options.per_component) {
        // one aligned (real) term and one residual complex term per selected
        // antenna, each with its own part size
        for (const auto& part : partition_elements(n_res, vr)) {
            const double ne = part.size();
            value *= scalar_gaussian_mgf(t, dx * ne * M_PI / 4.0,
                                         dx2 * ne * (16.0 - M_PI * M_PI) / 16.0);
            const double resid_var = dx2 * (n_res - ne) / 2.0;
            value *= scalar_gaussian_mgf(t, 0.0, resid_var);
            value *= scalar_gaussian_mgf(t, 0.0, resid_var);
        }
    } else {
        // one aggregate Gaussian across all selected antennas
        const double mu = n_res * M_PI * dx / 4.0;                       // Na*Ne = N
        const double s2 = dx2 * n_res * (32.0 - M_PI * M_PI) / 16.0;
        value *= scalar_gaussian_mgf(t, mu, s2);
    }
    // central chi-square factor for the antennas outside the AC,
    // 2 real degrees of freedom each
    const double tail_var =
        options.tail_single_antenna ? n_res * dx2 / 2.0 : n_res * na * dx2 / 2.0;
    for (int u = 0; u < n_rx - na; ++u) {
        value *= scalar_gaussian_mgf(t, 0.0, tail_var);
        value *= scalar_gaussian_mgf(t, 0.0, tail_var);
    }
    return value;
}

double pep_quadrature(const MgfFunction& mgf, double n0, int nodes) {
    if (n0 <= 0.0) throw std::domain_error("noise variance must be positive");
    const auto& rule = gauss_legendre(nodes);
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double tau = (rule.nodes[i] + 1.0) * (M_PI / 4.0);
        const double s = std::sin(tau);
        const double value = mgf(-1.0 / (4.0 * s * s * n0));
        if (!std::isfinite(value)) {
            std::ostringstream oss;
            oss << "mgf evaluated non-finite at tau=" << tau;
            throw std::runtime_error(oss.str());
        }
        sum += rule.weights[i] * (M_PI / 4.0) * value;
    }
    return std::clamp(sum / M_PI, 0.0, 0.5);
}

double pep_closed_bound(const MgfFunction& mgf, double n0) {
    if (n0 <= 0.0) throw std::domain_error("noise variance must be positive");
    return mgf(-1.0 / n0) / 6.0 + mgf(-0.5 / n0) / 12.0 + mgf(-0.25 / n0) / 4.0;
}

AberResult union_bound_aber(const SystemConfig& config, const AcTable& table,
                            const SymbolMap& symbols, const Constellation& constellation,
                            double n0, const AnalysisOptions& options) {
    const int d = table.count();
    const int m = symbols.order;
    const int b2 = symbols.bits();
    const int b = table.b1 + b2;
    AberResult result;
    double total = 0.0;
    for (int r = 1; r <= d; ++r) {
        for (int k = 1; k <= m; ++k) {
            const std::uint32_t word =
                (static_cast<std::uint32_t>(r - 1) << b2) | symbols.index_to_word(k);
            const cplx xk = constellation.point(k);
            for (int rh = 1; rh <= d; ++rh) {
                for (int kh = 1; kh <= m; ++kh) {
                    if (r == rh && k == kh) continue;
                    const std::uint32_t word_h =
                        (static_cast<std::uint32_t>(rh - 1) << b2) | symbols.index_to_word(kh);
                    const int weight = std::popcount(word ^ word_h);
                    const cplx xkh = constellation.point(kh);
                    double pep = 0.0;
                    if (r == rh) {
                        const auto& vr = table.ac(r);
                        pep = pep_quadrature(
                            [&](double t) {
                                return mgf_z2(t, config.n_res, config.n_rx, xk, xkh, vr,
                                              options.z2);
                            },
                            n0, options.quadrature_nodes);
                    } else {
                        const auto& vr = table.ac(r);
                        const auto& vrh = table.ac(rh);
                        const auto stats =
                            z1_stats(config.n_res, vr, vrh, xk, xkh, options.covariance);
                        std::set<int> joint(vr.antennas.begin(), vr.antennas.end());
                        int overlap = 0;
                        for (int a : vrh.antennas)
                            if (!joint.insert(a).second) ++overlap;
                        const int unselected = config.n_rx - static_cast<int>(joint.size());
                        const int n_l =
                            options.cross_dof_unselected ? 2 * unselected : overlap;
                        pep = pep_quadrature(
                            [&](double t) {
                                return mgf_quadratic_gaussian(t, stats) *
                                       mgf_z1_cross(t, config.n_res, xk, xkh, n_l);
                            },
                            n0, options.quadrature_nodes);
                    }
                    total += pep * weight;
                    if (options.keep_pep_table)
                        result.pairs.push_back({r, k, rh, kh, r != rh, pep, weight});
                }
            }
        }
    }
    result.aber = total / (static_cast<double>(m) * d * b);
    return result;
}

} // namespace rasm
