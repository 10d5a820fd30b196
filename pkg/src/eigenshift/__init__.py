"""Inertia-index criteria for Hermitian eigenvalue shift inequalities.

The central fact this package makes executable: the i+m-th eigenvalue of B
never exceeds the i-th eigenvalue of A exactly when the positive-inertia
difference n_plus(B - rI) - n_plus(A - rI) stays at most m for every real
shift r.  Everything else here either feeds that criterion (exact and
floating inertia, graph Laplacian constructors) or stress-tests it (the
theorem fuzz suite).
"""

from .errors import (
    ConvergenceFailureError,
    DimensionMismatchError,
    EigenshiftError,
    EmptySelectionError,
    FieldMismatchError,
    FormatError,
    GapUnreachableError,
    IncompatibleOperatorError,
    MethodDisagreementError,
    MixedFieldError,
    NonRealDiagonalError,
    NotGeneralizedLaplacianError,
    NotPositiveDefiniteError,
    ShapeMismatchError,
    UnexpectedDifferenceShapeError,
)
from .graphs import (
    EdgeRecord,
    GraphSpec,
    OperatorKind,
    build_operator,
    degree_matrix,
    delete_record,
    dump_graph,
    is_generalized_laplacian,
    laplacian_difference,
    load_graph,
    normalizer,
    parse_graph,
    reduce_weight,
    save_graph,
)
from .hermitian import (
    HermitianMatrix,
    Spectrum,
    cholesky,
    diagonal,
    diagonal_part,
    dump_hmat,
    eigenvalues,
    from_entries,
    identity,
    load_hmat,
    make_hermitian,
    matrix_sum,
    parse_hmat,
    pencil_reduce,
    pencil_shift,
    principal_submatrix,
    save_hmat,
    scale,
    shift,
)
from .inertia import (
    Inertia,
    default_tolerance,
    inertia_exact,
    inertia_float,
    pencil_inertia,
    shifted_inertia,
)
from .interlace import (
    RealRootedPoly,
    RelationReport,
    Witness,
    compatible,
    extended_root,
    interlaces,
    matrix_shift_dominates,
    nu,
    shift_dominates_nu,
    shift_dominates_spectral,
)
from .scalars import (
    FIELD_COMPLEX,
    FIELD_GAUSS,
    FIELD_OMEGA,
    I_EXACT,
    OMEGA,
    QuadExt,
    abs_squared,
    conjugate,
    format_scalar,
    parse_scalar,
)
from .theorems import (
    FuzzReport,
    TheoremId,
    fuzz,
    negative_control,
    random_graph,
    random_hermitian,
    verify,
)

__version__ = "0.1.0"
