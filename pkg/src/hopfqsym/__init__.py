"""Exact quasisymmetric invariants of Hopf species, their lattice-point
realizations, and Hilbert-function cross-checks."""

from .combinat import (
    Flag,
    GroundSet,
    SetComposition,
    coarsenings,
    composition_of_flag,
    flag_of,
    induced_composition,
    quasi_shuffles,
    refines,
    set_compositions,
    type_of,
)
from .ehrhart import (
    closed_cone_weight,
    ehrhart_qsym,
    euler_characteristic,
    lattice_count_box,
    lattice_count_simplex,
    negative_count,
)
from .hilbert import (
    EHRHART_SHIFT,
    cone_faces,
    dcone_faces,
    hilbert_bigraded,
    hilbert_q,
    hilbert_unigraded,
    module_faces,
)
from .hopf import (
    Character,
    check_hopf_axioms,
    check_product_axioms,
    convolve,
    indicator_character,
    invert,
    minors,
    p_gaussian,
    p_polynomial,
    psi,
    psi_via_colorings,
    q_series,
    unit_character,
    zeta_character,
)
from .qseries import (
    BinomialPoly,
    GaussianFn,
    LaurentPoly,
    QBinomialForm,
    SeriesTrunc,
    d_op,
    is_gaussian,
    ps,
    ps1,
    ps_gaussian,
    qbinomial,
    sps,
    to_qbinomial_basis,
)
from .qsym import QSym
from .species import (
    Graph,
    Matroid,
    Poset,
    RelComplex,
    coloring_complex,
    complex_product,
    delta_complex,
    forbidden_block,
    gamma_complex,
    is_forbidden_complex,
)

__version__ = "0.1.0"
