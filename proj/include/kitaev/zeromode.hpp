#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "kitaev/dst.hpp"
#include "kitaev/hamiltonian.hpp"

namespace kitaev {

/// Zero-energy Majorana pair of a (numerically) singular coupling matrix.
/// phi_A is the left null vector (A species contracts the row index of
/// H = i Gamma^A . M . Gamma^B), phi_B the right one, both unit norm in the
/// representation of the source matrix. psi_A/psi_B hold the DST-I transforms
/// once to_position has been called.
struct ZeroModePair {
    Eigen::VectorXd phi_A;
    Eigen::VectorXd phi_B;
    Eigen::VectorXd psi_A;
    Eigen::VectorXd psi_B;
    double residual_left = 0.0;  ///< ||M^T phi_A||
    double residual_right = 0.0; ///< ||M  phi_B||
    /// Minimal singular value for the SVD route; for the projection route the
    /// residual-based upper bound max(residual_left, residual_right), since
    /// that route never performs an SVD.
    double d0 = 0.0;
};

/// Exponential-decay fit of an edge mode profile.
struct DecayFit {
    enum class Edge { left, right };
    double xi = 0.0;        ///< decay length in lattice units; 0 for single-site support
    double amplitude = 0.0; ///< fitted |psi| at the edge site
    double r_squared = 1.0;
    Edge edge = Edge::left;
    int support_sites = 0;
};

/// Retrieve the null pair by seeded random-vector projection: the start
/// vector is repeatedly swept through projections onto the complement of
/// every row direction (rows for phi_B, columns for phi_A) until its
/// direction stabilizes. Sweeping crushes all row-space components
/// geometrically while the near-null component survives, so the fixed point
/// is the null direction; no SVD is involved. Throws std::runtime_error when
/// the remainder norm falls below 1e-8 (matrix not rank-deficient: no zero
/// mode at these parameters) or when the direction fails to settle
/// (degenerate or near-degenerate null space). Deterministic given (m, seed).
ZeroModePair null_pair_projection(const CouplingMatrix& m, std::uint64_t seed);

/// Cross-validation route: the minimal singular triplet of a full SVD.
/// Always returns; the caller judges d0.
ZeroModePair null_pair_svd(const CouplingMatrix& m);

/// Fill psi_X = s * phi_X and fix global signs by making the
/// largest-magnitude position-space component of each species positive.
ZeroModePair to_position(const ZeroModePair& pair, const SineBasis& basis);

/// Log-linear least-squares fit of |psi_l| against distance from the given
/// edge. Sites below 1e-12 * max|psi| are dropped; for oscillatory profiles
/// only the envelope (local maxima of |psi_l|) enters the fit. Monotone
/// profiles are their own envelope and are fitted on every kept site, which
/// `envelope = false` forces for any profile.
DecayFit fit_decay(const Eigen::VectorXd& psi, DecayFit::Edge edge, bool envelope = true);

} // namespace kitaev
