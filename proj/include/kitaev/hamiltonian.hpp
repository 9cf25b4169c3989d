#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "kitaev/model.hpp"

namespace kitaev {

enum class Representation { position, momentum };

/// Real L x L matrix M of the quadratic Majorana form H = i Gamma^A . M . Gamma^B.
/// Its singular values are the quasiparticle excitation energies.
///
/// position: tridiagonal, diag = -mu, super = -(t+delta), sub = -(t-delta).
/// momentum: diag(E_zeta) plus a skew part that vanishes for zeta+zeta' even,
///           obtained from the position matrix by DST-I conjugation. The two
///           representations are related by an exact matrix identity
///           momentum = s * position * s.
struct CouplingMatrix {
    Representation repr = Representation::position;
    ChainParams params;
    Eigen::MatrixXd m;
};

/// 2L x 2L real symmetric single-particle matrix in the doubled
/// particle/hole position basis (sites 1..L particles, then 1..L holes).
/// Serves as the independent position-space oracle: its non-negative
/// eigenvalues equal the singular values of either coupling matrix.
struct BdgRealSpace {
    ChainParams params;
    Eigen::MatrixXd m;
};

/// Dispersion data of the translation-invariant (periodic) chain at momentum k.
struct PbcDispersion {
    double k = 0.0;
    double eps_k = 0.0;       ///< -mu - 2 t cos k
    double delta_k_abs = 0.0; ///< delta * |sin k|
    double lambda_plus = 0.0; ///< -sqrt(eps^2 + |delta_k|^2)
    double lambda_minus = 0.0;
};

/// Momentum-representation coupling matrix:
///   M[z][z'] = E_z delta_{zz'} + 2 delta F_{zz'},
///   E_z = -mu - 2 t cos(pi z/(L+1)),
///   F_{zz'} = (2/(L+1)) S_z S_z' / (C_z - C_z') for z+z' odd, else 0.
/// The sign of the skew part is fixed so that the matrix equals the DST-I
/// conjugation of position_coupling exactly.
CouplingMatrix momentum_coupling(const ChainParams& c);

/// Position-representation (Majorana) coupling matrix, tridiagonal.
CouplingMatrix position_coupling(const ChainParams& c);

/// Hard-wall Bogoliubov-de Gennes matrix [[h, P], [-P, -h]] with
/// h = tridiag(-t, -mu, -t) and P[j][j+1] = +delta, P[j+1][j] = -delta.
BdgRealSpace bdg_realspace(const ChainParams& c);

/// Periodic-chain dispersion at momentum k in (-pi, pi].
PbcDispersion pbc_dispersion(const ChainParams& c, double k);

/// Minimal excitation gap  min_n 2 sqrt(eps_{k_n}^2 + |delta_{k_n}|^2)  over
/// the discrete momenta k_n = 2 pi n / L, n = 0..L-1, for each mu in the grid.
/// For odd L the grid misses k = pi, so the gap at mu = +2t stays small but
/// finite; at mu = -2t it vanishes exactly (k = 0 is always present).
std::vector<std::pair<double, double>> pbc_gap_profile(const ChainParams& c,
                                                       const std::vector<double>& mu_grid);

} // namespace kitaev
