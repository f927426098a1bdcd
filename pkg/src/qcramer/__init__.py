"""Exact generalized inverses and Cramer-rule solvers for quaternion matrices."""

from .determinants import (
    bordered_column_sum,
    bordered_row_sum,
    cdet,
    ddet,
    det_hermitian,
    max_n,
    minor_sum,
    principal_minor,
    rdet,
    set_max_n,
    size_cap,
)
from .errors import (
    DeterminantEngineError,
    DimensionError,
    InconsistentEquationError,
    NotHermitianError,
    NotSquareError,
    ParseError,
    QCramerError,
    RouteError,
    SingularMatrixError,
    SizeCapError,
    ZeroDivisorError,
)
from .ginverse import InverseResult, drazin, drazin_via_mp, inverse, inverse_right, mp_inverse
from .oracle import AxiomReport, classical_det_oracle, verify_drazin, verify_penrose, verify_wdrazin
from .qmatrix import (
    QMatrix,
    format_matrix,
    in_left_row_space,
    in_right_column_space,
    is_hermitian,
    left_null_space,
    mat_mul,
    mat_pow,
    matrix_from_json,
    matrix_index,
    matrix_to_json,
    parse_matrix,
    rank,
    right_null_space,
)
from .quaternion import I, J, K, ONE, ZERO, Quaternion
from .solvers import DVectors, SolveReport, build_d_vectors, check_consistency, solve_left, solve_right, solve_two_sided
from .wdrazin import WDrazinResult, wdrazin, wdrazin_via_cline, wdrazin_via_mp, weighted_projectors

__all__ = [
    "bordered_column_sum",
    "bordered_row_sum",
    "cdet",
    "ddet",
    "det_hermitian",
    "max_n",
    "minor_sum",
    "principal_minor",
    "rdet",
    "set_max_n",
    "size_cap",
    "DeterminantEngineError",
    "DimensionError",
    "InconsistentEquationError",
    "NotHermitianError",
    "NotSquareError",
    "ParseError",
    "QCramerError",
    "RouteError",
    "SingularMatrixError",
    "SizeCapError",
    "ZeroDivisorError",
    "InverseResult",
    "drazin",
    "drazin_via_mp",
    "inverse",
    "inverse_right",
    "mp_inverse",
    "AxiomReport",
    "classical_det_oracle",
    "verify_drazin",
    "verify_penrose",
    "verify_wdrazin",
    "QMatrix",
    "format_matrix",
    "in_left_row_space",
    "in_right_column_space",
    "is_hermitian",
    "left_null_space",
    "mat_mul",
    "mat_pow",
    "matrix_from_json",
    "matrix_index",
    "matrix_to_json",
    "parse_matrix",
    "rank",
    "right_null_space",
    "I",
    "J",
    "K",
    "ONE",
    "ZERO",
    "Quaternion",
    "DVectors",
    "SolveReport",
    "build_d_vectors",
    "check_consistency",
    "solve_left",
    "solve_right",
    "solve_two_sided",
    "WDrazinResult",
    "wdrazin",
    "wdrazin_via_cline",
    "wdrazin_via_mp",
    "weighted_projectors",
]

__version__ = "0.1.0"
