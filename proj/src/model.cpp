#include "kitaev/model.hpp"

#include <cmath>

namespace kitaev {

ChainParams from_eta(const EtaPoint& p, int L) {
    p.validate();
    if (L < 1) throw std::invalid_argument("from_eta: L must be >= 1");
    const double c = std::cos(M_PI * p.eta / 2.0);
    const double s = std::sin(M_PI * p.eta / 2.0);
    ChainParams out;
    out.L = L;
    out.t = p.E0 * c * c;
    out.delta = p.E0 * s * s;
    out.mu = p.mu_tilde * p.E0;
    return out;
}

EtaPoint to_eta(const ChainParams& c) {
    c.validate();
    const double E0 = c.t + c.delta;
    if (!(E0 > 0.0)) throw std::invalid_argument("to_eta: t + delta must be > 0");
    EtaPoint p;
    p.E0 = E0;
    p.mu_tilde = c.mu / E0;
    p.eta = (c.t == 0.0) ? 1.0 : (2.0 / M_PI) * std::atan(std::sqrt(c.delta / c.t));
    return p;
}

Regime classify_regime(const EtaPoint& p, double eta_weak) {
    p.validate();
    if (p.eta == 0.0) return Regime::free_fermions;
    if (p.eta == 1.0) return Regime::pairing_only;
    if (p.eta <= eta_weak) return Regime::weak_coupling;
    return Regime::dimerized;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::free_fermions: return "free";
        case Regime::weak_coupling: return "weak_coupling";
        case Regime::dimerized: return "dimerized";
        case Regime::pairing_only: return "pairing_only";
    }
    return "unknown";
}

} // namespace kitaev
