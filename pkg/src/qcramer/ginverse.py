"""Moore-Penrose and Drazin inverses from bordered principal-minor sums."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .determinants import bordered_column_sum, bordered_row_sum, cdet, ddet, minor_sum, rdet
from .errors import DeterminantEngineError, NotSquareError, RouteError, SingularMatrixError
from .qmatrix import QMatrix, is_hermitian, mat_mul, mat_pow, matrix_index, rank
from .quaternion import ZERO

__all__ = [
    "InverseResult",
    "MP_ROUTES",
    "DRAZIN_ROUTES",
    "mp_inverse",
    "inverse",
    "inverse_right",
    "drazin",
    "drazin_via_mp",
    "drazin_cdet",
    "drazin_rdet",
    "drazin_hermitian_cdet",
    "drazin_hermitian_rdet",
]

MP_ROUTES = ("mp-left", "mp-right")
DRAZIN_ROUTES = (
    "drazin-cdet",
    "drazin-rdet",
    "drazin-hermitian-cdet",
    "drazin-hermitian-rdet",
    "composition-oracle",
)


@dataclass(frozen=True)
class InverseResult:
    matrix: QMatrix
    route: str
    denominator: Fraction | None = None
    rank: int | None = None
    index: int | None = None
    extra: dict = field(default_factory=dict, compare=False)


def _nonzero(den: Fraction, what: str) -> Fraction:
    if den == 0:
        raise DeterminantEngineError(f"{what}: principal minor sum vanished for a matrix of positive rank")
    return den


def mp_inverse(a: QMatrix, route: str = "mp-left") -> InverseResult:
    """Moore-Penrose inverse.

    ``mp-left`` builds entries from column determinants of ``A* A``;
    ``mp-right`` from row determinants of ``A A*``.
    """
    m, n = a.shape
    r = rank(a)
    if r == 0:
        return InverseResult(QMatrix.zeros(n, m), route, Fraction(0), 0)
    ah = a.conj_transpose()
    if route == "mp-left":
        g = mat_mul(ah, a)
        den = _nonzero(minor_sum(g, r), "mp-left")
        rows = [
            [bordered_column_sum(g, i, ah.col_at(j), r) / den for j in range(m)]
            for i in range(n)
        ]
    elif route == "mp-right":
        g = mat_mul(a, ah)
        den = _nonzero(minor_sum(g, r), "mp-right")
        rows = [
            [bordered_row_sum(g, j, ah.row_at(i), r) / den for j in range(m)]
            for i in range(n)
        ]
    else:
        raise RouteError(f"unknown Moore-Penrose route {route!r}; choose from {MP_ROUTES}")
    return InverseResult(QMatrix(rows), route, den, r)


def inverse(a: QMatrix) -> QMatrix:
    """Two-sided inverse from column determinants of ``A* A`` over ``ddet A``."""
    if not a.is_square():
        raise NotSquareError(f"inverse of a non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    dd = ddet(a)
    if dd == 0:
        raise SingularMatrixError("matrix is singular (ddet = 0)")
    ah = a.conj_transpose()
    g = mat_mul(ah, a)
    return QMatrix(
        [[cdet(g.replace_column(i, ah.col_at(j)), i) / dd for j in range(n)] for i in range(n)]
    )


def inverse_right(a: QMatrix) -> QMatrix:
    """Same inverse, from row determinants of ``A A*``."""
    if not a.is_square():
        raise NotSquareError(f"inverse of a non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    dd = ddet(a)
    if dd == 0:
        raise SingularMatrixError("matrix is singular (ddet = 0)")
    ah = a.conj_transpose()
    g = mat_mul(a, ah)
    return QMatrix(
        [[rdet(g.replace_row(j, ah.row_at(i)), j) / dd for j in range(n)] for i in range(n)]
    )


# The Drazin formulas below accept any k >= Ind(A): the ranks of A^k, A^(k+1)
# have stabilised there and A^k (A^(2k+1))^+ A^k no longer depends on k.


def drazin_cdet(a: QMatrix, k: int) -> InverseResult:
    n = a.rows
    ak = mat_pow(a, k)
    r = rank(ak)
    if r == 0:
        return InverseResult(QMatrix.zeros(n, n), "drazin-cdet", Fraction(0), 0, k)
    p = mat_pow(a, 2 * k + 1)
    ph = p.conj_transpose()
    g = mat_mul(ph, p)
    hat = mat_mul(ph, ak)
    den = _nonzero(minor_sum(g, r), "drazin-cdet")
    # inner[t][j] = sum over J_{r,n}{t} of cdet_t(g_{.t}(hat_{.j}))
    inner = [[bordered_column_sum(g, t, hat.col_at(j), r) for j in range(n)] for t in range(n)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = sum((ak[i, t] * inner[t][j] for t in range(n) if not ak[i, t].is_zero()), start=ZERO)
            row.append(acc / den)
        rows.append(row)
    return InverseResult(QMatrix(rows), "drazin-cdet", den, r, k)


def drazin_rdet(a: QMatrix, k: int) -> InverseResult:
    n = a.rows
    ak = mat_pow(a, k)
    r = rank(ak)
    if r == 0:
        return InverseResult(QMatrix.zeros(n, n), "drazin-rdet", Fraction(0), 0, k)
    p = mat_pow(a, 2 * k + 1)
    ph = p.conj_transpose()
    g = mat_mul(p, ph)
    check = mat_mul(ak, ph)
    den = _nonzero(minor_sum(g, r), "drazin-rdet")
    # inner[i][s] = sum over I_{r,n}{s} of rdet_s(g_{s.}(check_{i.}))
    inner = [[bordered_row_sum(g, s, check.row_at(i), r) for s in range(n)] for i in range(n)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = sum((inner[i][s] * ak[s, j] for s in range(n) if not ak[s, j].is_zero()), start=ZERO)
            row.append(acc / den)
        rows.append(row)
    return InverseResult(QMatrix(rows), "drazin-rdet", den, r, k)


def drazin_hermitian_cdet(a: QMatrix, k: int) -> InverseResult:
    if not is_hermitian(a):
        raise RouteError("drazin-hermitian-cdet needs a Hermitian matrix")
    n = a.rows
    ak = mat_pow(a, k)
    r = rank(ak)
    if r == 0:
        return InverseResult(QMatrix.zeros(n, n), "drazin-hermitian-cdet", Fraction(0), 0, k)
    g = mat_pow(a, k + 1)
    den = _nonzero(minor_sum(g, r), "drazin-hermitian-cdet")
    rows = [[bordered_column_sum(g, i, ak.col_at(j), r) / den for j in range(n)] for i in range(n)]
    return InverseResult(QMatrix(rows), "drazin-hermitian-cdet", den, r, k)


def drazin_hermitian_rdet(a: QMatrix, k: int) -> InverseResult:
    if not is_hermitian(a):
        raise RouteError("drazin-hermitian-rdet needs a Hermitian matrix")
    n = a.rows
    ak = mat_pow(a, k)
    r = rank(ak)
    if r == 0:
        return InverseResult(QMatrix.zeros(n, n), "drazin-hermitian-rdet", Fraction(0), 0, k)
    g = mat_pow(a, k + 1)
    den = _nonzero(minor_sum(g, r), "drazin-hermitian-rdet")
    rows = [[bordered_row_sum(g, j, ak.row_at(i), r) / den for j in range(n)] for i in range(n)]
    return InverseResult(QMatrix(rows), "drazin-hermitian-rdet", den, r, k)


def drazin_via_mp(a: QMatrix, k: int | None = None) -> QMatrix:
    """``A^k (A^(2k+1))^+ A^k`` with the Moore-Penrose inverse taken independently."""
    if not a.is_square():
        raise NotSquareError(f"Drazin inverse of a non-square {a.rows}x{a.cols} matrix")
    if k is None:
        k = matrix_index(a)
    ak = mat_pow(a, k)
    p = mat_pow(a, 2 * k + 1)
    return mat_mul(mat_mul(ak, mp_inverse(p).matrix), ak)


_DRAZIN_IMPL = {
    "drazin-cdet": drazin_cdet,
    "drazin-rdet": drazin_rdet,
    "drazin-hermitian-cdet": drazin_hermitian_cdet,
    "drazin-hermitian-rdet": drazin_hermitian_rdet,
}


def drazin(a: QMatrix, route: str = "auto", k: int | None = None) -> InverseResult:
    """Drazin inverse.

    ``auto`` inverts directly when ``A`` is nonsingular, takes the Hermitian
    column-determinant form when ``A* == A``, and the general column form
    otherwise.  ``k`` defaults to ``Ind(A)``; any larger value gives the same
    matrix.
    """
    if not a.is_square():
        raise NotSquareError(f"Drazin inverse of a non-square {a.rows}x{a.cols} matrix")
    ind = matrix_index(a)
    if k is None:
        k = ind
    elif k < ind:
        raise ValueError(f"k={k} is below the index {ind}")
    if route == "auto":
        if ind == 0:
            return InverseResult(inverse(a), "inverse", ddet(a), a.rows, 0)
        route = "drazin-hermitian-cdet" if is_hermitian(a) else "drazin-cdet"
    if route == "composition-oracle":
        return InverseResult(drazin_via_mp(a, k), route, None, rank(mat_pow(a, k)), k)
    impl = _DRAZIN_IMPL.get(route)
    if impl is None:
        raise RouteError(f"unknown Drazin route {route!r}; choose from {DRAZIN_ROUTES}")
    return impl(a, k)
