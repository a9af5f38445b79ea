"""Inertias of partially transposed bipartite operators.

Thin Python surface over the C++ core: inertia computation, partial
transposes, the 2 x n enumeration with certificates, X-state spectra,
product/copy inertia formulas, and the see-saw witness check.
"""

from inertia_lab._core import (  # noqa: F401
    DEFAULT_SEED,
    InertiaError,
    __version__,
    classify,
    eig,
    enumerate_n2n,
    inertia,
    inertia_exact_json,
    is_entanglement_witness,
    kron_inertia,
    ncopy_inertia,
    paper_examples_2x3,
    partial_transpose,
    pt_inertia,
    pure_state_inertia,
    sample_inertias,
    two_qubit_double_ew,
    xstate,
    xstate_pt_spectrum,
    xstate_with_k_negatives,
)
