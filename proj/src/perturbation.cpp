#include "kitaev/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kitaev {

PerturbativeSpectrum third_order_spectrum(const ChainParams& c) {
    c.validate();
    if (!(c.t > 0.0)) throw std::invalid_argument("third_order_spectrum: t must be > 0");
    const int L = c.L;
    std::vector<double> C(L), S(L);
    for (int z = 0; z < L; ++z) {
        const double arg = M_PI * double(z + 1) / (L + 1);
        C[z] = std::cos(arg);
        S[z] = std::sin(arg);
    }
    const double pref = 8.0 * c.delta * c.delta / (c.t * double(L + 1) * double(L + 1));
    PerturbativeSpectrum out;
    out.params = c;
    out.t_eff = c.t - 2.0 * c.delta * c.delta / c.t;
    out.energies.resize(L);
    for (int z = 0; z < L; ++z) {
        double sum = 0.0;
        for (int zp = 0; zp < L; ++zp) {
            if (((z + zp) & 1) == 0) continue;
            const double dc = C[z] - C[zp];
            sum += S[z] * S[z] * S[zp] * S[zp] / (dc * dc * dc);
        }
        out.energies[z] = -c.mu - 2.0 * c.t * C[z] + pref * sum;
    }
    return out;
}

PerturbativeSpectrum effective_spectrum(const ChainParams& c) {
    c.validate();
    if (!(c.t > 0.0)) throw std::invalid_argument("effective_spectrum: t must be > 0");
    const int L = c.L;
    PerturbativeSpectrum out;
    out.params = c;
    out.t_eff = c.t - 2.0 * c.delta * c.delta / c.t;
    out.energies.resize(L);
    for (int z = 0; z < L; ++z)
        out.energies[z] = -c.mu - 2.0 * out.t_eff * std::cos(M_PI * double(z + 1) / (L + 1));
    return out;
}

std::vector<double> zero_mode_mu_predictions(int L, double t_eff) {
    if (L < 1) throw std::invalid_argument("zero_mode_mu_predictions: L must be >= 1");
    if (t_eff == 0.0) throw std::invalid_argument("zero_mode_mu_predictions: t_eff must be nonzero");
    std::vector<double> out(L);
    for (int z = 0; z < L; ++z)
        out[z] = -2.0 * t_eff * std::cos(M_PI * double(z + 1) / (L + 1));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace kitaev
