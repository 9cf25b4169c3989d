#pragma once

#include <Eigen/Dense>

namespace kitaev {

/// Orthonormal sine discrete Fourier transform of type I for a chain of L
/// sites with hard-wall boundary conditions:
///
///   s[l][zeta] = sqrt(2/(L+1)) * sin(pi * l * zeta / (L+1)),  l, zeta = 1..L
///
/// The matrix is symmetric, orthogonal and involutory (s*s = I), so it is its
/// own inverse: the same application maps position -> momentum and back.
struct SineBasis {
    int L = 0;
    Eigen::MatrixXd s; ///< L x L, stored 0-based; s(i, j) holds l = i+1, zeta = j+1
};

/// Build the dense DST-I matrix. Rejects L = 0.
SineBasis build_dst(int L);

/// Apply the transform to a vector: returns s * v.
Eigen::VectorXd apply(const SineBasis& basis, const Eigen::VectorXd& v);

/// Conjugate an operator: returns s * m * s^T. Orthogonal equivalence, so the
/// singular spectrum of m is preserved.
Eigen::MatrixXd conjugate(const SineBasis& basis, const Eigen::MatrixXd& m);

} // namespace kitaev
