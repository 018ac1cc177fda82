"""Exact-arithmetic construction and certification of tridiagonal pairs.

The package is organised bottom up: `exactla` supplies fraction and
prime-field linear algebra, `tdcore` the pair axioms, systems, and their
symmetry group, `polybasis` the vanishing-polynomial certificates,
`tensorspace` the relation-space machinery, and `catalog`/`cli` the
document and command-line plumbing.
"""

from .catalog import (
    DocumentError,
    PairDocument,
    RejectedNotTD,
    document_system,
    fixture_corpus,
    gen_krawtchouk,
    gen_split_form,
    load,
    save,
)
from .exactla import (
    EigenData,
    EigenFailure,
    ExactMatrix,
    FieldSpec,
    Polynomial,
    SubspaceBasis,
    char_poly,
    eigen_data,
    kernel_basis,
    matrices_span,
    rref,
    solve_row_combination,
    span_rank,
)
from .polybasis import (
    PolyFamily,
    build_poly_family,
    check_basis_replacement,
    check_basis_replacement_exhaustive,
    check_idempotent_expansions,
    check_tau_filtration,
    eval_at_matrix,
)
from .report import CertReport, CheckResult
from .tdcore import (
    Axiom,
    AxiomFailure,
    AxiomVerdict,
    ConjectureProbe,
    D4Element,
    IrreducibilityKind,
    IrreducibilityVerdict,
    TDSystemData,
    apply_transforms,
    build_system,
    check_irreducible,
    check_super_tridiagonal,
    d4_relative,
    detect_standard_orderings,
    idempotent_algebra_check,
    invariant_closure,
    orderings_check,
    primitive_idempotents,
    probe_corner_generation,
    relators_check,
    verify_tridiagonal_pair,
    word_span,
)
from .tensorspace import (
    MainTheoremCert,
    MiddleBasis,
    TensorElement,
    build_relation_slice,
    build_relation_space,
    certify_main_theorem,
    check_complements,
    check_corner_middle_reduction,
    check_dimension_laws,
    check_kernel,
    check_shift_triangularity,
    check_transpose_properties,
    corner_eval,
    corner_middle_scalar,
    idempotent_tensor_coords,
    outer_transpose,
    pure_tensor,
    shift_factor,
)

__version__ = "0.1.0"

__all__ = [
    "Axiom",
    "AxiomFailure",
    "AxiomVerdict",
    "CertReport",
    "CheckResult",
    "ConjectureProbe",
    "D4Element",
    "DocumentError",
    "EigenData",
    "EigenFailure",
    "ExactMatrix",
    "FieldSpec",
    "IrreducibilityKind",
    "IrreducibilityVerdict",
    "MainTheoremCert",
    "MiddleBasis",
    "PairDocument",
    "PolyFamily",
    "Polynomial",
    "RejectedNotTD",
    "SubspaceBasis",
    "TDSystemData",
    "TensorElement",
    "apply_transforms",
    "build_poly_family",
    "build_relation_slice",
    "build_relation_space",
    "build_system",
    "certify_main_theorem",
    "char_poly",
    "check_basis_replacement",
    "check_basis_replacement_exhaustive",
    "check_complements",
    "check_corner_middle_reduction",
    "check_dimension_laws",
    "check_idempotent_expansions",
    "check_irreducible",
    "check_kernel",
    "check_shift_triangularity",
    "check_super_tridiagonal",
    "check_tau_filtration",
    "check_transpose_properties",
    "corner_eval",
    "corner_middle_scalar",
    "d4_relative",
    "detect_standard_orderings",
    "document_system",
    "eigen_data",
    "eval_at_matrix",
    "fixture_corpus",
    "gen_krawtchouk",
    "gen_split_form",
    "idempotent_algebra_check",
    "idempotent_tensor_coords",
    "invariant_closure",
    "kernel_basis",
    "load",
    "matrices_span",
    "orderings_check",
    "outer_transpose",
    "primitive_idempotents",
    "probe_corner_generation",
    "pure_tensor",
    "relators_check",
    "rref",
    "save",
    "shift_factor",
    "solve_row_combination",
    "span_rank",
    "verify_tridiagonal_pair",
    "word_span",
    "__version__",
]
