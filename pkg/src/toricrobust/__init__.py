"""Exact-integer toolkit for strong robustness of toric ideals.

Pipeline: kernel lattices -> Graver bases -> bouquet decomposition ->
Lawrence liftings -> indispensability -> the strongly robust complex of a
simple configuration.  All arithmetic is arbitrary-precision integer or
rational; all values are immutable.
"""

from .bouquet import (
    FREE,
    MIXED,
    NON_MIXED,
    Bouquet,
    BouquetDecomposition,
    bouquet_decomposition,
    bouquet_ideal,
    cyclic_configuration,
    gale_rows,
    is_general_position,
    is_simple,
)
from .errors import (
    BezoutMismatchError,
    EntryCountMismatchError,
    FirstComponentError,
    FreeBouquetError,
    FreeVectorError,
    FullSupportError,
    GcdNotOneError,
    MalformedHeaderError,
    NonIncreasingError,
    NonIntegerTokenError,
    NotInGraverError,
    NotPointedError,
    NotSimpleError,
    OracleMismatchError,
    SpecFileError,
    TooFewColumnsError,
    ToricError,
)
from .graver import GraverBasis, graver_basis, graver_brute_force, normal_form
from .lattice import (
    IntMatrix,
    IntVec,
    KernelBasis,
    canon_sign,
    conformal_leq,
    determinant,
    dot,
    infinity_norm,
    intvec,
    is_pointed,
    is_semiconformal_sum,
    kernel_lattice_basis,
    negative_part,
    positive_part,
    primitive_part,
    support,
    vec_add,
    vec_neg,
    vec_scale,
    vec_sub,
    xgcd,
)
from .lawrence import (
    GLMSpec,
    OmegaSet,
    bezout_coefficients,
    build_generalized_lawrence,
    d_omega,
    lawrence_lift,
    lawrence_lift_omega,
    lifted_graver,
)
from .matio import parse_matrix, read_matrix_file, write_matrix, write_matrix_file
from .robustness import (
    IndispensableSet,
    SimplicialComplex,
    indispensable_set,
    induced_subcomplex,
    is_indispensable,
    is_strongly_robust,
    omega_is_face,
    strongly_robust_complex,
)

__version__ = "0.1.0"
