#include "kitaev/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "kitaev/model.hpp"

namespace kitaev {

SingularSpectrum singular_spectrum(const CouplingMatrix& m, bool with_vectors) {
    SingularSpectrum out;
    const unsigned opts = with_vectors ? (Eigen::ComputeFullU | Eigen::ComputeFullV) : 0u;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.m, opts);
    const auto& sv = svd.singularValues();
    out.values.assign(sv.data(), sv.data() + sv.size());
    out.d0 = out.values.back();
    if (with_vectors) {
        const Eigen::Index last = sv.size() - 1;
        out.u_min = svd.matrixU().col(last);
        out.v_min = svd.matrixV().col(last);
    }
    return out;
}

ComplexSpectrum complex_spectrum(const CouplingMatrix& m) {
    Eigen::EigenSolver<Eigen::MatrixXd> es(m.m, /*computeEigenvectors=*/false);
    ComplexSpectrum out;
    out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(out.values.begin(), out.values.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

int count_real(const ComplexSpectrum& spec, double tol) {
    int n = 0;
    for (const auto& z : spec.values)
        if (std::abs(z.imag()) <= tol) ++n;
    return n;
}

PhaseDiagram scan_phase_diagram(int L, double E0, const std::vector<double>& eta_grid,
                                const std::vector<double>& mu_grid, double threshold,
                                int workers) {
    if (eta_grid.empty() || mu_grid.empty())
        throw std::invalid_argument("scan_phase_diagram: empty grid");
    if (!(threshold > 0.0))
        throw std::invalid_argument("scan_phase_diagram: threshold must be > 0");
    // validate before spawning workers: a throw inside a thread would terminate
    for (double eta : eta_grid) EtaPoint{eta, 0.0, E0}.validate();
    if (L < 1) throw std::invalid_argument("scan_phase_diagram: L must be >= 1");

    PhaseDiagram pd;
    pd.eta_grid = eta_grid;
    pd.mu_grid = mu_grid;
    pd.threshold = threshold;
    pd.L = L;
    pd.E0 = E0;
    const std::size_t ne = eta_grid.size(), nm = mu_grid.size();
    pd.d0_grid.assign(ne, std::vector<double>(nm, 0.0));
    pd.topological.assign(ne, std::vector<bool>(nm, false));

    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    const std::size_t total = ne * nm;
    std::atomic<std::size_t> counter{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = counter.fetch_add(1);
            if (idx >= total) return;
            const std::size_t i = idx / nm, j = idx % nm;
            EtaPoint p{eta_grid[i], mu_grid[j], E0};
            const CouplingMatrix m = momentum_coupling(from_eta(p, L));
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.m);
            pd.d0_grid[i][j] = svd.singularValues()(svd.singularValues().size() - 1);
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < ne; ++i)
        for (std::size_t j = 0; j < nm; ++j)
            pd.topological[i][j] = pd.d0_grid[i][j] < threshold;
    return pd;
}

std::pair<double, double> analytic_boundary(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::invalid_argument("analytic_boundary: eta must lie in [0, 1]");
    const double c = std::cos(M_PI * eta / 2.0);
    return {2.0 * c * c, -2.0 * c * c};
}

} // namespace kitaev
