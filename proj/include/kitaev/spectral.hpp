#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "kitaev/hamiltonian.hpp"

namespace kitaev {

/// Full singular spectrum of a coupling matrix, sorted descending.
/// d0 is the smallest value; it vanishes (exponentially in L) in the
/// topological phase and stays finite in the trivial one.
struct SingularSpectrum {
    std::vector<double> values; ///< descending, all >= 0
    double d0 = 0.0;
    /// Left/right singular vectors of the minimal triplet, if requested.
    std::optional<Eigen::VectorXd> u_min;
    std::optional<Eigen::VectorXd> v_min;
};

/// Eigenvalues of the (generally non-symmetric) real coupling matrix.
/// Real at eta = 0, purely imaginary at eta = 1 with mu = 0.
struct ComplexSpectrum {
    std::vector<std::complex<double>> values;
};

struct PhaseDiagram {
    std::vector<double> eta_grid;
    std::vector<double> mu_grid;              ///< mu_tilde values
    std::vector<std::vector<double>> d0_grid; ///< [eta][mu]
    std::vector<std::vector<bool>> topological;
    double threshold = 1e-6;
    int L = 0;
    double E0 = 1.0;
};

/// Dense full SVD (Jacobi; accuracy near machine epsilon matters for d0).
SingularSpectrum singular_spectrum(const CouplingMatrix& m, bool with_vectors = false);

/// Eigenvalues, sorted by (Re, Im) ascending for deterministic output.
ComplexSpectrum complex_spectrum(const CouplingMatrix& m);

/// Count eigenvalues that are numerically real: |Im| <= tol.
int count_real(const ComplexSpectrum& spec, double tol);

/// Scan the (eta, mu_tilde) plane: at each grid point build the momentum
/// coupling matrix via from_eta and record d0; label topological iff
/// d0 < threshold. Grid points are computed in parallel over `workers`
/// threads (0 = hardware concurrency); output is ordered row-major over eta
/// then mu_tilde and is independent of the worker count.
PhaseDiagram scan_phase_diagram(int L, double E0,
                                const std::vector<double>& eta_grid,
                                const std::vector<double>& mu_grid,
                                double threshold, int workers = 0);

/// Infinite-chain phase boundary: mu_tilde = +/- 2 cos^2(pi eta / 2).
std::pair<double, double> analytic_boundary(double eta);

} // namespace kitaev
