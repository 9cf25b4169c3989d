#include "kitaev/dst.hpp"

#include <cmath>
#include <stdexcept>

namespace kitaev {

SineBasis build_dst(int L) {
    if (L < 1) throw std::invalid_argument("build_dst: L must be >= 1");
    SineBasis basis;
    basis.L = L;
    basis.s.resize(L, L);
    const double norm = std::sqrt(2.0 / (L + 1));
    for (int i = 0; i < L; ++i) {
        for (int j = i; j < L; ++j) {
            const double v = norm * std::sin(M_PI * double(i + 1) * double(j + 1) / (L + 1));
            basis.s(i, j) = v;
            basis.s(j, i) = v; // symmetric by construction
        }
    }
    return basis;
}

Eigen::VectorXd apply(const SineBasis& basis, const Eigen::VectorXd& v) {
    if (v.size() != basis.L) throw std::invalid_argument("dst apply: vector length != L");
    return basis.s * v;
}

Eigen::MatrixXd conjugate(const SineBasis& basis, const Eigen::MatrixXd& m) {
    if (m.rows() != basis.L || m.cols() != basis.L)
        throw std::invalid_argument("dst conjugate: matrix must be L x L");
    return basis.s * m * basis.s.transpose();
}

} // namespace kitaev
