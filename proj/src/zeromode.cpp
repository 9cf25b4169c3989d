#include "kitaev/zeromode.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kitaev/rng.hpp"

namespace kitaev {

namespace {

constexpr double kNoNullRemainder = 1e-8;
constexpr double kDirectionTol = 1e-13;
constexpr int kMaxSweeps = 500;

// Fixed point of repeated projection sweeps against the row directions of m:
// every row-space component decays geometrically under the sweeps, the
// near-null component survives, so the normalized iterate converges to the
// right null direction of m.
Eigen::VectorXd project_out_rows(const Eigen::MatrixXd& m, std::uint64_t seed) {
    const Eigen::Index L = m.rows();
    std::vector<Eigen::VectorXd> rows;
    rows.reserve(L);
    for (Eigen::Index i = 0; i < L; ++i) {
        Eigen::VectorXd r = m.row(i).transpose();
        const double n = r.norm();
        if (n > 0.0) rows.push_back(r / n);
    }

    SplitMix64 rng(seed);
    Eigen::VectorXd v(L);
    for (Eigen::Index i = 0; i < L; ++i) v(i) = rng.next_symmetric();

    Eigen::VectorXd u_prev;
    for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
        for (const auto& r : rows) v -= r.dot(v) * r;
        const double rem = v.norm();
        if (rem < kNoNullRemainder)
            throw std::runtime_error(
                "null_pair_projection: remainder vanished; matrix is not rank-deficient "
                "(no zero mode at these parameters)");
        Eigen::VectorXd u = v / rem;
        if (u_prev.size() > 0) {
            const double delta = std::min((u - u_prev).norm(), (u + u_prev).norm());
            if (delta <= kDirectionTol) return u;
        }
        u_prev = std::move(u);
    }
    throw std::runtime_error(
        "null_pair_projection: direction did not settle; null space degenerate or "
        "nearly degenerate");
}

void fix_sign(Eigen::VectorXd& v) {
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0.0) v = -v;
}

} // namespace

ZeroModePair null_pair_projection(const CouplingMatrix& m, std::uint64_t seed) {
    ZeroModePair pair;
    pair.phi_B = project_out_rows(m.m, seed);
    pair.phi_A = project_out_rows(m.m.transpose(), seed);
    fix_sign(pair.phi_A);
    fix_sign(pair.phi_B);
    pair.residual_right = (m.m * pair.phi_B).norm();
    pair.residual_left = (m.m.transpose() * pair.phi_A).norm();
    pair.d0 = std::max(pair.residual_left, pair.residual_right);
    return pair;
}

ZeroModePair null_pair_svd(const CouplingMatrix& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Index last = svd.singularValues().size() - 1;
    ZeroModePair pair;
    pair.phi_A = svd.matrixU().col(last);
    pair.phi_B = svd.matrixV().col(last);
    fix_sign(pair.phi_A);
    fix_sign(pair.phi_B);
    pair.residual_right = (m.m * pair.phi_B).norm();
    pair.residual_left = (m.m.transpose() * pair.phi_A).norm();
    pair.d0 = svd.singularValues()(last);
    return pair;
}

ZeroModePair to_position(const ZeroModePair& pair, const SineBasis& basis) {
    if (pair.phi_A.size() != basis.L || pair.phi_B.size() != basis.L)
        throw std::invalid_argument("to_position: basis size mismatch");
    ZeroModePair out = pair;
    out.psi_A = basis.s * pair.phi_A;
    out.psi_B = basis.s * pair.phi_B;
    // global sign: largest-magnitude position component positive, per species
    Eigen::Index ia = 0, ib = 0;
    out.psi_A.cwiseAbs().maxCoeff(&ia);
    out.psi_B.cwiseAbs().maxCoeff(&ib);
    if (out.psi_A(ia) < 0.0) {
        out.psi_A = -out.psi_A;
        out.phi_A = -out.phi_A;
    }
    if (out.psi_B(ib) < 0.0) {
        out.psi_B = -out.psi_B;
        out.phi_B = -out.phi_B;
    }
    return out;
}

DecayFit fit_decay(const Eigen::VectorXd& psi, DecayFit::Edge edge, bool envelope) {
    const Eigen::Index L = psi.size();
    const Eigen::VectorXd a = psi.cwiseAbs();
    const double amax = a.maxCoeff();
    if (!(amax > 0.0)) throw std::invalid_argument("fit_decay: input vector is zero");
    const double floor = 1e-12 * amax;

    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = 0; i < L; ++i)
        if (a(i) > floor) kept.push_back(i);

    std::vector<Eigen::Index> pts;
    if (envelope) {
        // local maxima of |psi|, one-sided at the chain ends
        for (Eigen::Index i : kept) {
            const bool up = (i == 0) || (a(i) >= a(i - 1));
            const bool down = (i == L - 1) || (a(i) >= a(i + 1));
            if (up && down) pts.push_back(i);
        }
    }
    // monotone profiles are their own envelope: fit every kept site
    if (pts.size() < 2) pts = kept;

    DecayFit fit;
    fit.edge = edge;
    fit.support_sites = static_cast<int>(pts.size());
    if (pts.size() == 1) {
        fit.xi = 0.0;
        fit.amplitude = a(pts[0]);
        fit.r_squared = 1.0;
        return fit;
    }

    // least squares of ln|psi| against distance from the edge
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(pts.size());
    for (Eigen::Index i : pts) {
        const double x = (edge == DecayFit::Edge::left) ? double(i) : double(L - 1 - i);
        const double y = std::log(a(i));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;

    double ss_res = 0, ss_tot = 0;
    const double ybar = sy / n;
    for (Eigen::Index i : pts) {
        const double x = (edge == DecayFit::Edge::left) ? double(i) : double(L - 1 - i);
        const double y = std::log(a(i));
        const double e = y - (slope * x + intercept);
        ss_res += e * e;
        ss_tot += (y - ybar) * (y - ybar);
    }

    fit.xi = (slope < 0.0) ? -1.0 / slope : 0.0;
    fit.amplitude = std::exp(intercept);
    fit.r_squared = (ss_tot > 0.0) ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
    return fit;
}

} // namespace kitaev
