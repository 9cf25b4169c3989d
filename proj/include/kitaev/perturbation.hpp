#pragma once

#include <vector>

#include "kitaev/model.hpp"

namespace kitaev {

/// Perturbative spectrum in the weak-coupling regime, indexed by zeta = 1..L.
struct PerturbativeSpectrum {
    std::vector<double> energies;
    double t_eff = 0.0;
    ChainParams params;
};

/// Second-order correction to the free hard-wall band (odd orders vanish for
/// a purely skew off-diagonal perturbation):
///
///   E_z^(3) = E_z + (8 delta^2 / (t (L+1)^2)) * sum_{z': z+z' odd}
///             S_z^2 S_z'^2 / (C_z - C_z')^3
///
/// Terms with z+z' even are excluded before any denominator is formed, so no
/// guard against (C_z - C_z')^3 -> 0 is needed. Requires t > 0.
PerturbativeSpectrum third_order_spectrum(const ChainParams& c);

/// Large-L collapse of the correction onto a renormalized band:
///   t_eff = t - 2 delta^2 / t,   E_z = -mu - 2 t_eff cos(pi z/(L+1)).
PerturbativeSpectrum effective_spectrum(const ChainParams& c);

/// Chemical potentials (in t_eff's own units) at which a weak-coupling zero
/// mode exists:  mu_z = -2 t_eff cos(pi z/(L+1)), zeta = 1..L, sorted
/// ascending. Pass t_eff/E0 to obtain mu_tilde values. Requires t_eff != 0.
std::vector<double> zero_mode_mu_predictions(int L, double t_eff);

} // namespace kitaev
