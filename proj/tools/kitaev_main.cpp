// kitaev: command-line front end producing deterministic CSV outputs.
//
// Subcommands: pbc-gap, spectrum, phase-diagram, zero-modes, zero-mode-mus.
// All real fields are written as %.16e (17 significant digits, round-trip
// exact), LF newlines, no trailing separator, so identical flags and seeds
// yield byte-identical files regardless of worker count.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kitaev/csv.hpp"
#include "kitaev/dst.hpp"
#include "kitaev/hamiltonian.hpp"
#include "kitaev/model.hpp"
#include "kitaev/perturbation.hpp"
#include "kitaev/spectral.hpp"
#include "kitaev/zeromode.hpp"

namespace {

// n == 1 pins the grid at the lower bound (single-point scans)
std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) throw std::invalid_argument("grid needs at least 1 step");
    if (n == 1) return {lo};
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * double(i) / double(n - 1);
    return out;
}

int resolve_workers(int flag_value, bool flag_given) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("KITAEV_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 0; // library default: hardware concurrency
}

std::string fmt(double x) { return kitaev::format_double(x); }

int cmd_pbc_gap(int L, double t, double delta, double mu_min, double mu_max, int mu_steps,
                const std::string& out) {
    if (mu_steps < 2) throw std::invalid_argument("pbc-gap: --mu-steps must be >= 2");
    kitaev::ChainParams c{L, t, delta, 0.0};
    const auto profile = kitaev::pbc_gap_profile(c, linspace(mu_min, mu_max, mu_steps));
    kitaev::CsvWriter csv("mu,gap");
    for (const auto& [mu, gap] : profile) csv.add_row({fmt(mu), fmt(gap)});
    csv.write_file(out);
    return 0;
}

int cmd_spectrum(int L, double t, double delta, double mu, const std::string& representation,
                 const std::string& kind, const std::string& out) {
    kitaev::ChainParams c{L, t, delta, mu};
    const auto build = [&]() {
        return representation == "position" ? kitaev::position_coupling(c)
                                            : kitaev::momentum_coupling(c);
    };
    if (kind == "singular") {
        const auto spec = kitaev::singular_spectrum(build());
        kitaev::CsvWriter csv("zeta,value");
        for (std::size_t i = 0; i < spec.values.size(); ++i)
            csv.add_row({std::to_string(i + 1), fmt(spec.values[i])});
        csv.write_file(out);
    } else if (kind == "eigen") {
        const auto spec = kitaev::complex_spectrum(build());
        kitaev::CsvWriter csv("zeta,re,im");
        for (std::size_t i = 0; i < spec.values.size(); ++i)
            csv.add_row({std::to_string(i + 1), fmt(spec.values[i].real()),
                         fmt(spec.values[i].imag())});
        csv.write_file(out);
    } else if (kind == "perturbative" || kind == "effective") {
        const auto spec = (kind == "perturbative") ? kitaev::third_order_spectrum(c)
                                                   : kitaev::effective_spectrum(c);
        kitaev::CsvWriter csv("zeta,value");
        for (std::size_t i = 0; i < spec.energies.size(); ++i)
            csv.add_row({std::to_string(i + 1), fmt(spec.energies[i])});
        csv.write_file(out);
    } else {
        throw std::invalid_argument("unknown spectrum kind: " + kind);
    }
    return 0;
}

int cmd_phase_diagram(int L, double E0, double eta_min, double eta_max, int eta_steps,
                      double mu_min, double mu_max, int mu_steps, double threshold, int workers,
                      const std::string& out) {
    const auto pd = kitaev::scan_phase_diagram(L, E0, linspace(eta_min, eta_max, eta_steps),
                                               linspace(mu_min, mu_max, mu_steps),
                                               threshold * E0, workers);
    kitaev::CsvWriter csv("eta,mu_tilde,d0,topological");
    for (std::size_t i = 0; i < pd.eta_grid.size(); ++i)
        for (std::size_t j = 0; j < pd.mu_grid.size(); ++j)
            csv.add_row({fmt(pd.eta_grid[i]), fmt(pd.mu_grid[j]), fmt(pd.d0_grid[i][j]),
                         pd.topological[i][j] ? "1" : "0"});
    csv.write_file(out);
    return 0;
}

int cmd_zero_modes(int L, double eta, double mu_tilde, double E0, std::uint64_t seed,
                   const std::string& method, const std::string& fit_mode, double threshold,
                   const std::string& out) {
    const kitaev::EtaPoint p{eta, mu_tilde, E0};
    const auto m = kitaev::momentum_coupling(kitaev::from_eta(p, L));
    const auto spec = kitaev::singular_spectrum(m);

    if (!(spec.d0 < threshold * E0))
        throw std::runtime_error("no zero mode: parameters lie in the trivial phase (d0=" +
                                 kitaev::format_double(spec.d0) + ")");
    if (spec.values.size() >= 2 && spec.values[spec.values.size() - 2] < threshold * E0)
        throw std::runtime_error("degenerate null space: second singular value below threshold");

    auto pair = (method == "projection") ? kitaev::null_pair_projection(m, seed)
                                         : kitaev::null_pair_svd(m);
    const auto basis = kitaev::build_dst(L);
    pair = kitaev::to_position(pair, basis);

    const bool envelope = fit_mode != "plain";
    const int half = L / 2;
    const double wA_left = pair.psi_A.head(half).squaredNorm();
    const double wB_left = pair.psi_B.head(half).squaredNorm();
    const auto fitA = kitaev::fit_decay(
        pair.psi_A, wA_left > 0.5 ? kitaev::DecayFit::Edge::left : kitaev::DecayFit::Edge::right,
        envelope);
    const auto fitB = kitaev::fit_decay(
        pair.psi_B, wB_left > 0.5 ? kitaev::DecayFit::Edge::left : kitaev::DecayFit::Edge::right,
        envelope);

    kitaev::CsvWriter csv("index,phiA,phiB,psiA,psiB");
    for (int i = 0; i < L; ++i)
        csv.add_row({std::to_string(i + 1), fmt(pair.phi_A(i)), fmt(pair.phi_B(i)),
                     fmt(pair.psi_A(i)), fmt(pair.psi_B(i))});
    csv.write_file(out);

    std::cerr << "d0=" << fmt(spec.d0) << "\n"
              << "residual_left=" << fmt(pair.residual_left) << "\n"
              << "residual_right=" << fmt(pair.residual_right) << "\n"
              << "xi_A=" << fmt(fitA.xi) << "\n"
              << "r2_A=" << fmt(fitA.r_squared) << "\n"
              << "xi_B=" << fmt(fitB.xi) << "\n"
              << "r2_B=" << fmt(fitB.r_squared) << "\n";
    return 0;
}

int cmd_zero_mode_mus(int L, double t, double delta, const std::string& out) {
    if (!(t > 0.0)) throw std::invalid_argument("zero-mode-mus: t must be > 0");
    const double t_eff = t - 2.0 * delta * delta / t;
    const double E0 = t + delta;
    const auto mus = kitaev::zero_mode_mu_predictions(L, t_eff / E0);
    kitaev::CsvWriter csv("zeta,mu_tilde");
    for (std::size_t i = 0; i < mus.size(); ++i)
        csv.add_row({std::to_string(i + 1), fmt(mus[i])});
    csv.write_file(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Finite Kitaev chain toolkit: momentum-space coupling matrices via the sine "
        "transform, SVD phase scans, perturbative spectra and Majorana edge modes.\n"
        "Outputs are deterministic CSV files (17-significant-digit scientific notation).\n"
        "Environment: KITAEV_WORKERS overrides the default worker count of phase-diagram; "
        "the --workers flag takes precedence."};
    app.require_subcommand(1);

    // pbc-gap
    int L = 51;
    double t = 1.0, delta = 0.2;
    double mu_min = -3.0, mu_max = 3.0;
    int mu_steps = 601;
    std::string out;
    auto* gap = app.add_subcommand("pbc-gap",
                                   "Excitation gap of the periodic chain over a mu grid");
    gap->add_option("--L", L, "number of sites")->capture_default_str();
    gap->add_option("--t", t, "hopping")->capture_default_str();
    gap->add_option("--delta", delta, "pairing")->capture_default_str();
    gap->add_option("--mu-min", mu_min, "grid start")->capture_default_str();
    gap->add_option("--mu-max", mu_max, "grid end")->capture_default_str();
    gap->add_option("--mu-steps", mu_steps, "grid points (>= 2)")->capture_default_str();
    gap->add_option("--out", out, "output CSV path")->required();

    // spectrum
    int sL = 51;
    double st = 1.0, sdelta = 0.35, smu = 0.0;
    std::string repr = "momentum", kind = "singular", sout;
    auto* spec = app.add_subcommand("spectrum", "Singular/eigen/perturbative spectra");
    spec->add_option("--L", sL, "number of sites")->capture_default_str();
    spec->add_option("--t", st, "hopping")->capture_default_str();
    spec->add_option("--delta", sdelta, "pairing")->capture_default_str();
    spec->add_option("--mu", smu, "chemical potential")->capture_default_str();
    spec->add_option("--representation", repr, "position|momentum")
        ->check(CLI::IsMember({"position", "momentum"}))
        ->capture_default_str();
    spec->add_option("--kind", kind, "singular|eigen|perturbative|effective")
        ->check(CLI::IsMember({"singular", "eigen", "perturbative", "effective"}))
        ->capture_default_str();
    spec->add_option("--out", sout, "output CSV path")->required();

    // phase-diagram
    int pL = 51, eta_steps = 101, pmu_steps = 101, workers = 0;
    double E0 = 1.0, eta_min = 0.0, eta_max = 1.0, pmu_min = -2.5, pmu_max = 2.5;
    double threshold = 1e-6;
    std::string pout;
    auto* pd = app.add_subcommand("phase-diagram",
                                  "d0 scan over the (eta, mu_tilde) plane with labels");
    pd->add_option("--L", pL, "number of sites")->capture_default_str();
    pd->add_option("--E0", E0, "energy scale t + delta")->capture_default_str();
    pd->add_option("--eta-min", eta_min)->capture_default_str();
    pd->add_option("--eta-max", eta_max)->capture_default_str();
    pd->add_option("--eta-steps", eta_steps, "grid points (>= 2)")->capture_default_str();
    pd->add_option("--mu-min", pmu_min, "mu_tilde grid start")->capture_default_str();
    pd->add_option("--mu-max", pmu_max, "mu_tilde grid end")->capture_default_str();
    pd->add_option("--mu-steps", pmu_steps, "grid points (>= 2)")->capture_default_str();
    pd->add_option("--threshold", threshold, "topological cut on d0, units of E0")
        ->capture_default_str();
    auto* workers_opt =
        pd->add_option("--workers", workers, "thread count (0 = hardware)")->capture_default_str();
    pd->add_option("--out", pout, "output CSV path")->required();

    // zero-modes
    int zL = 51;
    double zeta_ = 0.3, zmu = 0.1, zE0 = 1.0, zthreshold = 1e-6;
    std::uint64_t seed = 0;
    std::string method = "svd", fit_mode = "envelope", zout;
    auto* zm = app.add_subcommand("zero-modes",
                                  "Majorana pair retrieval with decay fits (topological "
                                  "parameters required)");
    zm->add_option("--L", zL, "number of sites")->capture_default_str();
    zm->add_option("--eta", zeta_, "coupling parameter in [0,1]")->capture_default_str();
    zm->add_option("--mu-tilde", zmu, "mu / E0")->capture_default_str();
    zm->add_option("--E0", zE0, "energy scale")->capture_default_str();
    zm->add_option("--seed", seed, "RNG seed for the projection method")->capture_default_str();
    zm->add_option("--method", method, "svd|projection")
        ->check(CLI::IsMember({"svd", "projection"}))
        ->capture_default_str();
    zm->add_option("--fit", fit_mode, "envelope|plain")
        ->check(CLI::IsMember({"envelope", "plain"}))
        ->capture_default_str();
    zm->add_option("--threshold", zthreshold, "topological cut on d0, units of E0")
        ->capture_default_str();
    zm->add_option("--out", zout, "output CSV path")->required();

    // zero-mode-mus
    int mL = 51;
    double mt = 1.0, mdelta = 0.2;
    std::string mout;
    auto* zmm = app.add_subcommand("zero-mode-mus",
                                   "Weak-coupling mu_tilde values hosting a zero mode");
    zmm->add_option("--L", mL, "number of sites")->capture_default_str();
    zmm->add_option("--t", mt, "hopping (> 0)")->capture_default_str();
    zmm->add_option("--delta", mdelta, "pairing")->capture_default_str();
    zmm->add_option("--out", mout, "output CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gap->parsed())
            return cmd_pbc_gap(L, t, delta, mu_min, mu_max, mu_steps, out);
        if (spec->parsed())
            return cmd_spectrum(sL, st, sdelta, smu, repr, kind, sout);
        if (pd->parsed())
            return cmd_phase_diagram(pL, E0, eta_min, eta_max, eta_steps, pmu_min, pmu_max,
                                     pmu_steps, threshold,
                                     resolve_workers(workers, workers_opt->count() > 0), pout);
        if (zm->parsed())
            return cmd_zero_modes(zL, zeta_, zmu, zE0, seed, method, fit_mode, zthreshold, zout);
        if (zmm->parsed())
            return cmd_zero_mode_mus(mL, mt, mdelta, mout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
