#include "kitaev/hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace kitaev {

CouplingMatrix momentum_coupling(const ChainParams& c) {
    c.validate();
    const int L = c.L;
    CouplingMatrix out;
    out.repr = Representation::momentum;
    out.params = c;
    out.m = Eigen::MatrixXd::Zero(L, L);

    Eigen::VectorXd C(L), S(L);
    for (int z = 0; z < L; ++z) {
        const double arg = M_PI * double(z + 1) / (L + 1);
        C(z) = std::cos(arg);
        S(z) = std::sin(arg);
    }
    for (int z = 0; z < L; ++z) out.m(z, z) = -c.mu - 2.0 * c.t * C(z);

    // Skew pairing block, nonzero only for odd zeta+zeta'. The + sign makes
    // momentum_coupling == conjugate(position_coupling) an exact identity;
    // each pair is assigned once so the block is antisymmetric to the bit.
    const double pref = 2.0 * c.delta * 2.0 / (L + 1);
    for (int a = 0; a < L; ++a) {
        for (int b = a + 1; b < L; ++b) {
            if (((a + b) & 1) == 0) continue; // (a+1)+(b+1) even
            const double f = pref * S(a) * S(b) / (C(a) - C(b));
            out.m(a, b) += f;
            out.m(b, a) -= f;
        }
    }
    return out;
}

CouplingMatrix position_coupling(const ChainParams& c) {
    c.validate();
    const int L = c.L;
    CouplingMatrix out;
    out.repr = Representation::position;
    out.params = c;
    out.m = Eigen::MatrixXd::Zero(L, L);
    for (int j = 0; j < L; ++j) out.m(j, j) = -c.mu;
    for (int j = 0; j + 1 < L; ++j) {
        out.m(j, j + 1) = -(c.t + c.delta);
        out.m(j + 1, j) = -(c.t - c.delta);
    }
    return out;
}

BdgRealSpace bdg_realspace(const ChainParams& c) {
    c.validate();
    const int L = c.L;
    BdgRealSpace out;
    out.params = c;
    out.m = Eigen::MatrixXd::Zero(2 * L, 2 * L);
    // basis: particle sites 1..L, then hole sites 1..L
    for (int j = 0; j < L; ++j) {
        out.m(j, j) = -c.mu;
        out.m(L + j, L + j) = c.mu;
    }
    for (int j = 0; j + 1 < L; ++j) {
        out.m(j, j + 1) = out.m(j + 1, j) = -c.t;
        out.m(L + j, L + j + 1) = out.m(L + j + 1, L + j) = c.t;
        // pairing block P and its mirror -P
        out.m(j, L + j + 1) = c.delta;
        out.m(j + 1, L + j) = -c.delta;
        out.m(L + j, j + 1) = -c.delta;
        out.m(L + j + 1, j) = c.delta;
    }
    return out;
}

PbcDispersion pbc_dispersion(const ChainParams& c, double k) {
    c.validate();
    if (!(k > -M_PI && k <= M_PI + 1e-12))
        throw std::invalid_argument("pbc_dispersion: k must lie in (-pi, pi]");
    PbcDispersion d;
    d.k = k;
    d.eps_k = -c.mu - 2.0 * c.t * std::cos(k);
    d.delta_k_abs = c.delta * std::abs(std::sin(k));
    const double e = std::sqrt(d.eps_k * d.eps_k + d.delta_k_abs * d.delta_k_abs);
    d.lambda_plus = -e;
    d.lambda_minus = e;
    return d;
}

std::vector<std::pair<double, double>> pbc_gap_profile(const ChainParams& c,
                                                       const std::vector<double>& mu_grid) {
    c.validate();
    if (mu_grid.empty()) throw std::invalid_argument("pbc_gap_profile: empty mu grid");
    const int L = c.L;
    // k_n = 2 pi n / L; n = 0 keeps the gap closing exact at mu = -2t
    std::vector<double> cs(L), ss(L);
    for (int n = 0; n < L; ++n) {
        const double k = 2.0 * M_PI * n / L;
        cs[n] = std::cos(k);
        ss[n] = std::sin(k);
    }

    std::vector<std::pair<double, double>> out;
    out.reserve(mu_grid.size());
    for (double mu : mu_grid) {
        double best = std::numeric_limits<double>::infinity();
        for (int n = 0; n < L; ++n) {
            const double eps = -mu - 2.0 * c.t * cs[n];
            const double dk = c.delta * std::abs(ss[n]);
            best = std::min(best, 2.0 * std::sqrt(eps * eps + dk * dk));
        }
        out.emplace_back(mu, best);
    }
    return out;
}

} // namespace kitaev
