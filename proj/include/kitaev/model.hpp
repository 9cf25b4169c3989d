#pragma once

#include <stdexcept>
#include <string>

namespace kitaev {

/// Physical parameters of a uniform open Kitaev chain.
/// Energies are expressed in whatever unit the caller chooses (typically t=1
/// or E0=1); the builders never rescale.
struct ChainParams {
    int L = 1;          ///< number of lattice sites, L >= 1
    double t = 1.0;     ///< nearest-neighbour hopping, t >= 0
    double delta = 0.0; ///< p-wave pairing amplitude, delta >= 0
    double mu = 0.0;    ///< chemical potential

    void validate() const {
        if (L < 1) throw std::invalid_argument("ChainParams: L must be >= 1");
        if (t < 0.0) throw std::invalid_argument("ChainParams: t must be >= 0");
        if (delta < 0.0) throw std::invalid_argument("ChainParams: delta must be >= 0");
    }
};

/// A point of the reduced coupling space: t = E0 cos^2(pi eta / 2),
/// delta = E0 sin^2(pi eta / 2), mu = mu_tilde * E0.
struct EtaPoint {
    double eta = 0.0;      ///< in [0, 1]; 0 = free electrons, 1 = pairing only
    double mu_tilde = 0.0; ///< mu / E0
    double E0 = 1.0;       ///< energy scale t + delta, > 0

    void validate() const {
        if (!(eta >= 0.0 && eta <= 1.0))
            throw std::invalid_argument("EtaPoint: eta must lie in [0, 1]");
        if (!(E0 > 0.0)) throw std::invalid_argument("EtaPoint: E0 must be > 0");
    }
};

enum class Regime { free_fermions, weak_coupling, dimerized, pairing_only };

/// Map an EtaPoint onto raw chain parameters. L is a lattice property and is
/// supplied by the caller.
ChainParams from_eta(const EtaPoint& p, int L);

/// Inverse map; requires t + delta > 0. eta = (2/pi) atan(sqrt(delta/t)),
/// with eta = 1 at t = 0.
EtaPoint to_eta(const ChainParams& c);

/// Classify the coupling regime of a point. The weak-coupling/dimerized
/// border is not sharp; eta_weak is the configurable cut (default 0.15).
Regime classify_regime(const EtaPoint& p, double eta_weak = 0.15);

std::string to_string(Regime r);

} // namespace kitaev
