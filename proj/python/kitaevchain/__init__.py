"""Finite Kitaev chain toolkit.

C++ core exposed through pybind11: coupling-matrix builders in position and
momentum (DST-I) representations, SVD phase classification over the
(eta, mu_tilde) plane, weak-coupling perturbative spectra and Majorana
edge-mode retrieval with exponential decay fits.
"""

from ._core import (
    ChainParams,
    DecayFit,
    EtaPoint,
    PhaseDiagram,
    Regime,
    ZeroModePair,
    analytic_boundary,
    bdg_realspace,
    classify_regime,
    dst_matrix,
    effective_hopping,
    effective_spectrum,
    eigenvalues,
    fit_decay,
    from_eta,
    momentum_coupling,
    pbc_gap_profile,
    position_coupling,
    scan_phase_diagram,
    singular_values,
    third_order_spectrum,
    to_eta,
    zero_mode_mu_predictions,
    zero_modes,
)

__all__ = [
    "ChainParams",
    "DecayFit",
    "EtaPoint",
    "PhaseDiagram",
    "Regime",
    "ZeroModePair",
    "analytic_boundary",
    "bdg_realspace",
    "classify_regime",
    "dst_matrix",
    "effective_hopping",
    "effective_spectrum",
    "eigenvalues",
    "fit_decay",
    "from_eta",
    "momentum_coupling",
    "pbc_gap_profile",
    "position_coupling",
    "scan_phase_diagram",
    "singular_values",
    "third_order_spectrum",
    "to_eta",
    "zero_mode_mu_predictions",
    "zero_modes",
]
