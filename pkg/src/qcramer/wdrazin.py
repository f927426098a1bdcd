"""W-weighted Drazin inverse ``A_{d,W}`` for ``A`` (m x n) weighted by ``W`` (n x m).

Every route below computes the same matrix.  With ``U = WA``, ``V = AW`` and
``k = max(Ind V, Ind U)``:

* ``u-route``       ``A (U^D)^2`` with ``U^D`` from column or row determinants
* ``v-route``       ``(V^D)^2 A`` likewise
* ``weight-right``  row-determinant sums over ``V^(2k+1) V^(2k+1)*`` and ``W W*``
                    (expands ``V^D W^+``; needs ``rank W = n``)
* ``weight-left``   column-determinant sums over ``W* W`` and ``U^(2k+1)* U^(2k+1)``
                    (expands ``W^+ U^D``; needs ``rank W = m``)
* ``hermitian-AW``  one column sum over ``V^(k+2)`` (needs ``V`` Hermitian)
* ``hermitian-WA``  one row sum over ``U^(k+2)`` (needs ``U`` Hermitian)
* ``cline-oracle``  ``A ((WA)^D)^2``, checked against ``((AW)^D)^2 A``
* ``mp-oracle``     ``V^D W^+`` and/or ``W^+ U^D``, whichever the rank of ``W`` allows

``V^D W^+`` equals ``A_{d,W}`` only when ``W W^+ = I`` (``W`` of full row
rank) and ``W^+ U^D`` only when ``W^+ W = I`` (full column rank); for a
rank-deficient weight neither product is the weighted inverse in general.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .determinants import bordered_column_sum, bordered_row_sum, minor_sum
from .errors import DeterminantEngineError, DimensionError, RouteError
from .ginverse import drazin_cdet, drazin_rdet, drazin_via_mp, mp_inverse
from .qmatrix import QMatrix, is_hermitian, mat_mul, mat_pow, matrix_index, rank
from .quaternion import ZERO

__all__ = [
    "WDrazinResult",
    "WDRAZIN_ROUTES",
    "weighted_index",
    "drazin_squared",
    "wdrazin",
    "wdrazin_via_cline",
    "wdrazin_via_mp",
    "mp_weighted_forms",
    "weighted_projectors",
]

WDRAZIN_ROUTES = (
    "u-route",
    "v-route",
    "weight-right",
    "weight-left",
    "hermitian-AW",
    "hermitian-WA",
    "cline-oracle",
    "mp-oracle",
)

LF_VARIANTS = ((1, 1), (1, 2), (2, 1), (2, 2))


@dataclass(frozen=True)
class WDrazinResult:
    matrix: QMatrix
    k: int
    route: str
    r: int | None = None
    r1: int | None = None
    denominators: tuple = ()
    extra: dict = field(default_factory=dict, compare=False)


def _check_shapes(a: QMatrix, w: QMatrix) -> None:
    if (w.rows, w.cols) != (a.cols, a.rows):
        raise DimensionError(f"W must be {a.cols}x{a.rows} for a {a.rows}x{a.cols} A, got {w.rows}x{w.cols}")


def weighted_index(a: QMatrix, w: QMatrix) -> int:
    """``max(Ind(AW), Ind(WA))``."""
    _check_shapes(a, w)
    return max(matrix_index(mat_mul(a, w)), matrix_index(mat_mul(w, a)))


def drazin_squared(m: QMatrix, k: int, lf: tuple[int, int] = (1, 1)) -> QMatrix:
    """``(M^D)^2`` as the product of two Drazin factors.

    Factor ``1`` is the column-determinant form, ``2`` the row-determinant
    form; ``lf`` picks the left and right factor.
    """
    forms = {1: drazin_cdet, 2: drazin_rdet}
    l, f = lf
    if l not in forms or f not in forms:
        raise RouteError(f"lf variant must use 1 or 2, got {lf}")
    left = forms[l](m, k).matrix
    right = left if f == l else forms[f](m, k).matrix
    return mat_mul(left, right)


def _nonzero(den: Fraction, what: str) -> Fraction:
    if den == 0:
        raise DeterminantEngineError(f"{what}: vanishing principal minor sum")
    return den


def _need_rank(r1: int, target: int, side: str, route: str) -> None:
    if r1 != target:
        raise RouteError(f"{route} needs W of full {side} rank ({target}), but rank W = {r1}")


def _weight_right(a: QMatrix, w: QMatrix, k: int) -> WDrazinResult:
    m, n = a.shape
    _need_rank(rank(w), n, "row", "weight-right")
    v = mat_mul(a, w)
    vk = mat_pow(v, k)
    r = rank(vk)
    r1 = rank(w)
    if r == 0:
        return WDrazinResult(QMatrix.zeros(m, n), k, "weight-right", 0, r1)
    p = mat_pow(v, 2 * k + 1)
    ph = p.conj_transpose()
    gv = mat_mul(p, ph)
    wh = w.conj_transpose()
    gw = mat_mul(w, wh)
    v_check = mat_mul(vk, ph)
    w_check = mat_mul(vk, wh)
    den_v = _nonzero(minor_sum(gv, r), "weight-right")
    den_w = _nonzero(minor_sum(gw, r1), "weight-right")
    # left[i][t]: row sums over V-side; right[t][j]: row sums over W-side
    left = [[bordered_row_sum(gv, t, v_check.row_at(i), r) for t in range(m)] for i in range(m)]
    right = [[bordered_row_sum(gw, j, w_check.row_at(t), r1) for j in range(n)] for t in range(m)]
    den = den_v * den_w
    rows = [
        [sum((left[i][t] * right[t][j] for t in range(m)), start=ZERO) / den for j in range(n)]
        for i in range(m)
    ]
    return WDrazinResult(QMatrix(rows), k, "weight-right", r, r1, (den_v, den_w))


def _weight_left(a: QMatrix, w: QMatrix, k: int) -> WDrazinResult:
    m, n = a.shape
    _need_rank(rank(w), m, "column", "weight-left")
    u = mat_mul(w, a)
    uk = mat_pow(u, k)
    r = rank(uk)
    r1 = rank(w)
    if r == 0:
        return WDrazinResult(QMatrix.zeros(m, n), k, "weight-left", 0, r1)
    p = mat_pow(u, 2 * k + 1)
    ph = p.conj_transpose()
    gu = mat_mul(ph, p)
    wh = w.conj_transpose()
    gw = mat_mul(wh, w)
    u_hat = mat_mul(ph, uk)
    w_hat = mat_mul(wh, uk)
    den_w = _nonzero(minor_sum(gw, r1), "weight-left")
    den_u = _nonzero(minor_sum(gu, r), "weight-left")
    left = [[bordered_column_sum(gw, i, w_hat.col_at(t), r1) for t in range(n)] for i in range(m)]
    right = [[bordered_column_sum(gu, t, u_hat.col_at(j), r) for j in range(n)] for t in range(n)]
    den = den_w * den_u
    rows = [
        [sum((left[i][t] * right[t][j] for t in range(n)), start=ZERO) / den for j in range(n)]
        for i in range(m)
    ]
    return WDrazinResult(QMatrix(rows), k, "weight-left", r, r1, (den_w, den_u))


def _hermitian_aw(a: QMatrix, w: QMatrix, k: int) -> WDrazinResult:
    v = mat_mul(a, w)
    if not is_hermitian(v):
        raise RouteError("hermitian-AW needs AW to be Hermitian")
    m, n = a.shape
    vk = mat_pow(v, k)
    r = rank(vk)
    if r == 0:
        return WDrazinResult(QMatrix.zeros(m, n), k, "hermitian-AW", 0)
    g = mat_pow(v, k + 2)
    v_bar = mat_mul(vk, a)
    den = _nonzero(minor_sum(g, r), "hermitian-AW")
    rows = [[bordered_column_sum(g, i, v_bar.col_at(j), r) / den for j in range(n)] for i in range(m)]
    return WDrazinResult(QMatrix(rows), k, "hermitian-AW", r, None, (den,))


def _hermitian_wa(a: QMatrix, w: QMatrix, k: int) -> WDrazinResult:
    u = mat_mul(w, a)
    if not is_hermitian(u):
        raise RouteError("hermitian-WA needs WA to be Hermitian")
    m, n = a.shape
    uk = mat_pow(u, k)
    r = rank(uk)
    if r == 0:
        return WDrazinResult(QMatrix.zeros(m, n), k, "hermitian-WA", 0)
    g = mat_pow(u, k + 2)
    u_bar = mat_mul(a, uk)
    den = _nonzero(minor_sum(g, r), "hermitian-WA")
    rows = [[bordered_row_sum(g, j, u_bar.row_at(i), r) / den for j in range(n)] for i in range(m)]
    return WDrazinResult(QMatrix(rows), k, "hermitian-WA", r, None, (den,))


def wdrazin_via_cline(a: QMatrix, w: QMatrix) -> QMatrix:
    """``A ((WA)^D)^2``, cross-checked against ``((AW)^D)^2 A``."""
    _check_shapes(a, w)
    ud = drazin_via_mp(mat_mul(w, a))
    vd = drazin_via_mp(mat_mul(a, w))
    x = mat_mul(a, mat_mul(ud, ud))
    y = mat_mul(mat_mul(vd, vd), a)
    if x != y:
        raise DeterminantEngineError("the two Cline forms of the W-weighted Drazin inverse disagree")
    return x


def mp_weighted_forms(a: QMatrix, w: QMatrix) -> tuple[QMatrix, QMatrix]:
    """The raw products ``(AW)^D W^+`` and ``W^+ (WA)^D``, with no rank check."""
    k = weighted_index(a, w)
    wp = mp_inverse(w).matrix
    vd = drazin_via_mp(mat_mul(a, w), k)
    ud = drazin_via_mp(mat_mul(w, a), k)
    return mat_mul(vd, wp), mat_mul(wp, ud)


def wdrazin_via_mp(a: QMatrix, w: QMatrix) -> QMatrix:
    """Weighted inverse through ``W^+`` and Drazin factors ``M^k (M^(2k+1))^+ M^k``.

    Uses ``(AW)^D W^+`` when ``W`` has full row rank, ``W^+ (WA)^D`` when it
    has full column rank, and checks them against each other when both apply.
    """
    _check_shapes(a, w)
    m, n = a.shape
    r1 = rank(w)
    if r1 not in (m, n):
        raise RouteError(f"mp-oracle needs W of full row or column rank, but rank W = {r1} for a {n}x{m} W")
    x, y = mp_weighted_forms(a, w)
    if r1 == n and r1 == m:
        if x != y:
            raise DeterminantEngineError("the two Moore-Penrose forms of the W-weighted Drazin inverse disagree")
        return x
    return x if r1 == n else y


def wdrazin(
    a: QMatrix,
    w: QMatrix,
    route: str = "auto",
    lf: tuple[int, int] = (1, 1),
) -> WDrazinResult:
    """W-weighted Drazin inverse of ``a`` with weight ``w``.

    ``auto`` prefers the single-sum Hermitian routes and falls back to
    ``v-route``.  ``lf`` chooses the Drazin factor forms for ``u-route`` and
    ``v-route``.
    """
    _check_shapes(a, w)
    k = weighted_index(a, w)
    if route == "auto":
        if is_hermitian(mat_mul(a, w)):
            route = "hermitian-AW"
        elif is_hermitian(mat_mul(w, a)):
            route = "hermitian-WA"
        else:
            route = "v-route"
    if route == "u-route":
        x = mat_mul(a, drazin_squared(mat_mul(w, a), k, lf))
        return WDrazinResult(x, k, route, rank(mat_pow(mat_mul(w, a), k)), extra={"lf": lf})
    if route == "v-route":
        x = mat_mul(drazin_squared(mat_mul(a, w), k, lf), a)
        return WDrazinResult(x, k, route, rank(mat_pow(mat_mul(a, w), k)), extra={"lf": lf})
    if route == "weight-right":
        return _weight_right(a, w, k)
    if route == "weight-left":
        return _weight_left(a, w, k)
    if route == "hermitian-AW":
        return _hermitian_aw(a, w, k)
    if route == "hermitian-WA":
        return _hermitian_wa(a, w, k)
    if route == "cline-oracle":
        return WDrazinResult(wdrazin_via_cline(a, w), k, route)
    if route == "mp-oracle":
        return WDrazinResult(wdrazin_via_mp(a, w), k, route, r1=rank(w))
    raise RouteError(f"unknown W-weighted Drazin route {route!r}; choose from {WDRAZIN_ROUTES}")


def weighted_projectors(a: QMatrix, w: QMatrix, x: QMatrix | None = None) -> tuple[QMatrix, QMatrix]:
    """``(WAW A_{d,W}, A_{d,W} WAW)``; both are idempotent."""
    if x is None:
        x = wdrazin_via_cline(a, w)
    waw = mat_mul(mat_mul(w, a), w)
    return mat_mul(waw, x), mat_mul(x, waw)
