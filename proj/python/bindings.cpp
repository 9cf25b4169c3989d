#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kitaev/dst.hpp"
#include "kitaev/hamiltonian.hpp"
#include "kitaev/model.hpp"
#include "kitaev/perturbation.hpp"
#include "kitaev/spectral.hpp"
#include "kitaev/zeromode.hpp"

namespace py = pybind11;
using namespace kitaev;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite Kitaev chain: sine-transform momentum representation, SVD phase "
              "classification and Majorana edge modes.";

    py::class_<ChainParams>(m, "ChainParams")
        .def(py::init([](int L, double t, double delta, double mu) {
                 ChainParams c{L, t, delta, mu};
                 c.validate();
                 return c;
             }),
             py::arg("L"), py::arg("t"), py::arg("delta"), py::arg("mu") = 0.0)
        .def_readonly("L", &ChainParams::L)
        .def_readonly("t", &ChainParams::t)
        .def_readonly("delta", &ChainParams::delta)
        .def_readonly("mu", &ChainParams::mu)
        .def("__repr__", [](const ChainParams& c) {
            return "ChainParams(L=" + std::to_string(c.L) + ", t=" + std::to_string(c.t) +
                   ", delta=" + std::to_string(c.delta) + ", mu=" + std::to_string(c.mu) + ")";
        });

    py::class_<EtaPoint>(m, "EtaPoint")
        .def(py::init([](double eta, double mu_tilde, double E0) {
                 EtaPoint p{eta, mu_tilde, E0};
                 p.validate();
                 return p;
             }),
             py::arg("eta"), py::arg("mu_tilde") = 0.0, py::arg("E0") = 1.0)
        .def_readonly("eta", &EtaPoint::eta)
        .def_readonly("mu_tilde", &EtaPoint::mu_tilde)
        .def_readonly("E0", &EtaPoint::E0);

    py::enum_<Regime>(m, "Regime")
        .value("free_fermions", Regime::free_fermions)
        .value("weak_coupling", Regime::weak_coupling)
        .value("dimerized", Regime::dimerized)
        .value("pairing_only", Regime::pairing_only);

    m.def("from_eta", &from_eta, py::arg("point"), py::arg("L"));
    m.def("to_eta", &to_eta, py::arg("params"));
    m.def("classify_regime", &classify_regime, py::arg("point"), py::arg("eta_weak") = 0.15);

    m.def(
        "dst_matrix", [](int L) { return build_dst(L).s; }, py::arg("L"),
        "Dense orthonormal DST-I matrix (symmetric, involutory).");

    m.def(
        "momentum_coupling", [](const ChainParams& c) { return momentum_coupling(c).m; },
        py::arg("params"));
    m.def(
        "position_coupling", [](const ChainParams& c) { return position_coupling(c).m; },
        py::arg("params"));
    m.def(
        "bdg_realspace", [](const ChainParams& c) { return bdg_realspace(c).m; },
        py::arg("params"));

    m.def(
        "pbc_gap_profile",
        [](const ChainParams& c, const std::vector<double>& mu_grid) {
            return pbc_gap_profile(c, mu_grid);
        },
        py::arg("params"), py::arg("mu_grid"));

    m.def(
        "singular_values",
        [](const ChainParams& c, const std::string& representation) {
            const auto m_ = representation == "position" ? position_coupling(c)
                                                         : momentum_coupling(c);
            return singular_spectrum(m_).values;
        },
        py::arg("params"), py::arg("representation") = "momentum");

    m.def(
        "eigenvalues",
        [](const ChainParams& c, const std::string& representation) {
            const auto m_ = representation == "position" ? position_coupling(c)
                                                         : momentum_coupling(c);
            return complex_spectrum(m_).values;
        },
        py::arg("params"), py::arg("representation") = "momentum");

    m.def(
        "third_order_spectrum",
        [](const ChainParams& c) { return third_order_spectrum(c).energies; },
        py::arg("params"));
    m.def(
        "effective_spectrum", [](const ChainParams& c) { return effective_spectrum(c).energies; },
        py::arg("params"));
    m.def(
        "effective_hopping", [](const ChainParams& c) { return effective_spectrum(c).t_eff; },
        py::arg("params"));
    m.def("zero_mode_mu_predictions", &zero_mode_mu_predictions, py::arg("L"), py::arg("t_eff"));

    m.def("analytic_boundary", &analytic_boundary, py::arg("eta"),
          "Returns (+2 cos^2(pi eta/2), -2 cos^2(pi eta/2)).");

    py::class_<PhaseDiagram>(m, "PhaseDiagram")
        .def_readonly("eta_grid", &PhaseDiagram::eta_grid)
        .def_readonly("mu_grid", &PhaseDiagram::mu_grid)
        .def_readonly("d0_grid", &PhaseDiagram::d0_grid)
        .def_readonly("topological", &PhaseDiagram::topological)
        .def_readonly("threshold", &PhaseDiagram::threshold)
        .def_readonly("L", &PhaseDiagram::L)
        .def_readonly("E0", &PhaseDiagram::E0);

    m.def("scan_phase_diagram", &scan_phase_diagram, py::arg("L"), py::arg("E0"),
          py::arg("eta_grid"), py::arg("mu_grid"), py::arg("threshold") = 1e-6,
          py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());

    py::class_<ZeroModePair>(m, "ZeroModePair")
        .def_readonly("phi_A", &ZeroModePair::phi_A)
        .def_readonly("phi_B", &ZeroModePair::phi_B)
        .def_readonly("psi_A", &ZeroModePair::psi_A)
        .def_readonly("psi_B", &ZeroModePair::psi_B)
        .def_readonly("residual_left", &ZeroModePair::residual_left)
        .def_readonly("residual_right", &ZeroModePair::residual_right)
        .def_readonly("d0", &ZeroModePair::d0);

    py::class_<DecayFit>(m, "DecayFit")
        .def_readonly("xi", &DecayFit::xi)
        .def_readonly("amplitude", &DecayFit::amplitude)
        .def_readonly("r_squared", &DecayFit::r_squared)
        .def_readonly("support_sites", &DecayFit::support_sites);

    m.def(
        "zero_modes",
        [](const ChainParams& c, const std::string& method, std::uint64_t seed) {
            const auto m_ = momentum_coupling(c);
            auto pair = method == "projection" ? null_pair_projection(m_, seed)
                                               : null_pair_svd(m_);
            return to_position(pair, build_dst(c.L));
        },
        py::arg("params"), py::arg("method") = "svd", py::arg("seed") = 0,
        "Null pair of the momentum coupling matrix, with position-space profiles.");

    m.def(
        "fit_decay",
        [](const Eigen::VectorXd& psi, const std::string& edge, bool envelope) {
            return fit_decay(psi,
                             edge == "right" ? DecayFit::Edge::right : DecayFit::Edge::left,
                             envelope);
        },
        py::arg("psi"), py::arg("edge") = "left", py::arg("envelope") = true);
}
