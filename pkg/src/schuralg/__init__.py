"""Exact-arithmetic computations in Schur algebras, their weight blocks,
codeterminant cell structures, and the modified enveloping algebra of gl_n.

Everything is integer or rational exact; no floating point anywhere.
"""

from .codet import (
    CellReport,
    Codeterminant,
    cell_datum_check,
    codet_basis,
    codet_count,
    codeterminant,
    dominant_shapes,
    weight_word,
)
from .enveloping import (
    PBWMonomial,
    UElement,
    divided_monomial,
    integrality_coords,
    matrix_unit,
    pbw_image,
    root_pairs,
    tensor_rep,
    u_multiply,
    u_one,
    verify_weight_idempotent,
)
from .errors import ResourceLimitError
from .exact_linalg import CoordinateSolver, exact_rank, integer_det, unimodular_change
from .schur import (
    SchurElement,
    SymmetricGroupTable,
    TensorEndo,
    element_from_endo,
    endo_of,
    hom_basis,
    idempotent,
    identity_element,
    involution,
    orbit_endo,
    schur_multiply,
    symmetric_group_iso,
    weight_components,
    weyl_relabel,
)
from .simples import (
    SimpleIndexReport,
    simple_dim_char0,
    simple_index_set,
    simple_index_set_window,
)
from .udot import (
    Gl2Table,
    SymQuotientReport,
    UdotElement,
    divided_generators,
    gl2_generic_table,
    shift,
    symmetric_group_quotient,
    to_schur,
    udot_basis_upto,
    udot_element,
    udot_multiply,
    udot_relabel,
    udot_zero,
)
from .verify import SUITES, VerificationReport, run_suite
from .weights import (
    Tableau,
    canonical_pair,
    compositions,
    dominance_leq,
    dominance_lt,
    is_composition,
    is_dominant,
    kostka,
    margin_matrices,
    orbit_size,
    pair_to_matrix,
    sort_dominant,
    ssyt,
    tableau_from_word,
    words_of_weight,
)

__version__ = "0.1.0"

__all__ = [
    "CellReport",
    "Codeterminant",
    "CoordinateSolver",
    "Gl2Table",
    "PBWMonomial",
    "ResourceLimitError",
    "SUITES",
    "SchurElement",
    "SimpleIndexReport",
    "SymQuotientReport",
    "SymmetricGroupTable",
    "Tableau",
    "TensorEndo",
    "UElement",
    "UdotElement",
    "VerificationReport",
    "canonical_pair",
    "cell_datum_check",
    "codet_basis",
    "codet_count",
    "codeterminant",
    "compositions",
    "divided_generators",
    "divided_monomial",
    "dominance_leq",
    "dominance_lt",
    "dominant_shapes",
    "element_from_endo",
    "endo_of",
    "exact_rank",
    "gl2_generic_table",
    "hom_basis",
    "idempotent",
    "identity_element",
    "integer_det",
    "integrality_coords",
    "involution",
    "is_composition",
    "is_dominant",
    "kostka",
    "margin_matrices",
    "matrix_unit",
    "orbit_endo",
    "orbit_size",
    "pair_to_matrix",
    "pbw_image",
    "root_pairs",
    "run_suite",
    "schur_multiply",
    "shift",
    "simple_dim_char0",
    "simple_index_set",
    "simple_index_set_window",
    "sort_dominant",
    "ssyt",
    "symmetric_group_iso",
    "symmetric_group_quotient",
    "tableau_from_word",
    "tensor_rep",
    "to_schur",
    "u_multiply",
    "u_one",
    "udot_basis_upto",
    "udot_element",
    "udot_multiply",
    "udot_relabel",
    "udot_zero",
    "unimodular_change",
    "verify_weight_idempotent",
    "weight_components",
    "weight_word",
    "weyl_relabel",
    "words_of_weight",
]
