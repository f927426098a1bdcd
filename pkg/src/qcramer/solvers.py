"""Cramer-rule solvers for the restricted equations

* ``W A W X = D``                 (:func:`solve_left`,  ``X = A_{d,W} D``)
* ``X W A W = D``                 (:func:`solve_right`, ``X = D A_{d,W}``)
* ``W1 A W1 X W2 B W2 = D``       (:func:`solve_two_sided`, ``X = A_{d,W1} D B_{d,W2}``)

Each solver assembles ``X`` by the requested route and then decides
consistency by plugging ``X`` back into the equation; because ``X`` is the
weighted-inverse candidate, a zero residual is exactly the projector identity
``WAW A_{d,W} D = D`` (or its mirror).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .determinants import bordered_column_sum, bordered_row_sum, minor_sum
from .errors import DeterminantEngineError, DimensionError, InconsistentEquationError, RouteError
from .oracle import all_hold, verify_wdrazin
from .qmatrix import QMatrix, in_left_row_space, in_right_column_space, is_hermitian, mat_mul, mat_pow, matrix_index, rank
from .quaternion import ZERO
from .wdrazin import drazin_squared, wdrazin_via_cline, weighted_index

__all__ = [
    "SolveReport",
    "DVectors",
    "LEFT_ROUTES",
    "RIGHT_ROUTES",
    "TWO_SIDED_ROUTES",
    "solve_left",
    "solve_right",
    "solve_two_sided",
    "build_d_vectors",
    "check_consistency",
]

LEFT_ROUTES = ("i", "ii", "iii", "composition")
RIGHT_ROUTES = ("i", "ii", "iii", "composition")
TWO_SIDED_ROUTES = ("i", "ii-dB", "ii-dA", "composition")


@dataclass(frozen=True)
class SolveReport:
    X: QMatrix
    consistent: bool
    residual_zero: bool
    route: str
    residual: QMatrix
    k: tuple = ()
    denominators: tuple = ()
    verification: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class DVectors:
    """Helper data of the two-sided Hermitian route.

    ``d_B`` holds the vectors ``d^B_{.j}`` as its columns and ``d_A`` the
    vectors ``d^A_{i.}`` as its rows.
    """

    d_B: QMatrix
    d_A: QMatrix
    Dbar: QMatrix
    Dtilde: QMatrix
    k1: int
    k2: int
    s1: int
    s2: int
    den_A: Fraction
    den_B: Fraction


def _nonzero(den: Fraction, what: str) -> Fraction:
    if den == 0:
        raise DeterminantEngineError(f"{what}: vanishing principal minor sum")
    return den


def _shape_left(a: QMatrix, w: QMatrix, d: QMatrix) -> None:
    m, n = a.shape
    if w.shape != (n, m):
        raise DimensionError(f"W must be {n}x{m}, got {w.rows}x{w.cols}")
    if d.rows != n:
        raise DimensionError(f"D must have {n} rows for W A W X = D, got {d.rows}")


def _shape_right(a: QMatrix, w: QMatrix, d: QMatrix) -> None:
    m, n = a.shape
    if w.shape != (n, m):
        raise DimensionError(f"W must be {n}x{m}, got {w.rows}x{w.cols}")
    if d.cols != m:
        raise DimensionError(f"D must have {m} columns for X W A W = D, got {d.cols}")


def _shape_two(a: QMatrix, w1: QMatrix, d: QMatrix, b: QMatrix, w2: QMatrix) -> None:
    m, n = a.shape
    p, q = b.shape
    if w1.shape != (n, m):
        raise DimensionError(f"W1 must be {n}x{m}, got {w1.rows}x{w1.cols}")
    if w2.shape != (q, p):
        raise DimensionError(f"W2 must be {q}x{p}, got {w2.rows}x{w2.cols}")
    if d.shape != (n, p):
        raise DimensionError(f"D must be {n}x{p}, got {d.rows}x{d.cols}")


def _finish(x, residual, route, k, dens, strict, verification, what) -> SolveReport:
    ok = residual.is_zero()
    report = SolveReport(x, ok, ok, route, residual, k, dens, verification)
    if strict and not ok:
        raise InconsistentEquationError(
            f"inconsistent equation {what}: D lies outside the admissible space (nonzero residual)", report
        )
    return report


# W A W X = D


def _left_route_i(a, w, d, k):
    m, n = a.shape
    r1 = rank(w)
    if r1 != m:
        raise RouteError(f"route i needs W of full column rank ({m}), but rank W = {r1}")
    u = mat_mul(w, a)
    uk = mat_pow(u, k)
    r = rank(uk)
    if r == 0:
        return QMatrix.zeros(m, d.cols), ()
    p = mat_pow(u, 2 * k + 1)
    ph = p.conj_transpose()
    gu = mat_mul(ph, p)
    d_hat = mat_mul(mat_mul(ph, uk), d)
    wh = w.conj_transpose()
    gw = mat_mul(wh, w)
    w_hat = mat_mul(wh, uk)
    den_w = _nonzero(minor_sum(gw, r1), "route i")
    den_u = _nonzero(minor_sum(gu, r), "route i")
    left = [[bordered_column_sum(gw, i, w_hat.col_at(t), r1) for t in range(n)] for i in range(m)]
    right = [[bordered_column_sum(gu, t, d_hat.col_at(j), r) for j in range(d.cols)] for t in range(n)]
    den = den_w * den_u
    x = QMatrix(
        [[sum((left[i][t] * right[t][j] for t in range(n)), start=ZERO) / den for j in range(d.cols)] for i in range(m)]
    )
    return x, (den_w, den_u)


def _left_route_iii(a, w, d, k):
    m = a.rows
    v = mat_mul(a, w)
    if not is_hermitian(v):
        raise RouteError("route iii needs AW to be Hermitian")
    vk = mat_pow(v, k)
    r = rank(vk)
    if r == 0:
        return QMatrix.zeros(m, d.cols), ()
    g = mat_pow(v, k + 2)
    f = mat_mul(mat_mul(vk, a), d)
    den = _nonzero(minor_sum(g, r), "route iii")
    return QMatrix([[bordered_column_sum(g, i, f.col_at(j), r) / den for j in range(d.cols)] for i in range(m)]), (den,)


def solve_left(
    a: QMatrix,
    w: QMatrix,
    d: QMatrix,
    route: str = "auto",
    lf: tuple[int, int] = (1, 1),
    strict: bool = True,
    verify: bool = False,
) -> SolveReport:
    """Solve ``W A W X = D`` under its range restrictions.

    Routes: ``i`` (double column-determinant sums; needs ``rank W = m``),
    ``ii`` (``(AW)^D`` squared times ``AD``), ``iii`` (single sum; needs
    ``AW`` Hermitian) and ``composition``.  ``auto`` takes ``iii`` when it
    applies and ``ii`` otherwise.
    """
    _shape_left(a, w, d)
    k = weighted_index(a, w)
    v = mat_mul(a, w)
    if route == "auto":
        route = "iii" if is_hermitian(v) else "ii"
    dens: tuple = ()
    if route == "i":
        x, dens = _left_route_i(a, w, d, k)
    elif route == "ii":
        x = mat_mul(drazin_squared(v, k, lf), mat_mul(a, d))
    elif route == "iii":
        x, dens = _left_route_iii(a, w, d, k)
    elif route == "composition":
        x = mat_mul(wdrazin_via_cline(a, w), d)
    else:
        raise RouteError(f"unknown route {route!r} for W A W X = D; choose from {LEFT_ROUTES}")
    waw = mat_mul(mat_mul(w, a), w)
    residual = mat_mul(waw, x) - d
    checks = {}
    if verify:
        adw = wdrazin_via_cline(a, w)
        checks["wdrazin-axioms"] = all_hold(verify_wdrazin(a, w, adw))
        checks["composition"] = x == mat_mul(adw, d)
        checks["range"] = in_right_column_space(mat_pow(v, k), x)
    return _finish(x, residual, route, (k,), dens, strict, checks, "W A W X = D")


# X W A W = D


def _right_route_i(a, w, d, k):
    m, n = a.shape
    r1 = rank(w)
    if r1 != n:
        raise RouteError(f"route i needs W of full row rank ({n}), but rank W = {r1}")
    v = mat_mul(a, w)
    vk = mat_pow(v, k)
    r = rank(vk)
    if r == 0:
        return QMatrix.zeros(d.rows, n), ()
    p = mat_pow(v, 2 * k + 1)
    ph = p.conj_transpose()
    gv = mat_mul(p, ph)
    d_check = mat_mul(mat_mul(d, vk), ph)
    wh = w.conj_transpose()
    gw = mat_mul(w, wh)
    w_check = mat_mul(vk, wh)
    den_v = _nonzero(minor_sum(gv, r), "route i")
    den_w = _nonzero(minor_sum(gw, r1), "route i")
    left = [[bordered_row_sum(gv, l, d_check.row_at(i), r) for l in range(m)] for i in range(d.rows)]
    right = [[bordered_row_sum(gw, j, w_check.row_at(l), r1) for j in range(n)] for l in range(m)]
    den = den_v * den_w
    x = QMatrix(
        [[sum((left[i][l] * right[l][j] for l in range(m)), start=ZERO) / den for j in range(n)] for i in range(d.rows)]
    )
    return x, (den_v, den_w)


def _right_route_iii(a, w, d, k):
    n = a.cols
    u = mat_mul(w, a)
    if not is_hermitian(u):
        raise RouteError("route iii needs WA to be Hermitian")
    uk = mat_pow(u, k)
    r = rank(uk)
    if r == 0:
        return QMatrix.zeros(d.rows, n), ()
    g = mat_pow(u, k + 2)
    gg = mat_mul(mat_mul(d, a), uk)
    den = _nonzero(minor_sum(g, r), "route iii")
    return QMatrix([[bordered_row_sum(g, j, gg.row_at(i), r) / den for j in range(n)] for i in range(d.rows)]), (den,)


def solve_right(
    a: QMatrix,
    w: QMatrix,
    d: QMatrix,
    route: str = "auto",
    lf: tuple[int, int] = (1, 1),
    strict: bool = True,
    verify: bool = False,
) -> SolveReport:
    """Solve ``X W A W = D``; the mirror of :func:`solve_left`.

    Route ``i`` needs ``rank W = n`` and route ``iii`` needs ``WA`` Hermitian.
    """
    _shape_right(a, w, d)
    k = weighted_index(a, w)
    u = mat_mul(w, a)
    if route == "auto":
        route = "iii" if is_hermitian(u) else "ii"
    dens: tuple = ()
    if route == "i":
        x, dens = _right_route_i(a, w, d, k)
    elif route == "ii":
        x = mat_mul(mat_mul(d, a), drazin_squared(u, k, lf))
    elif route == "iii":
        x, dens = _right_route_iii(a, w, d, k)
    elif route == "composition":
        x = mat_mul(d, wdrazin_via_cline(a, w))
    else:
        raise RouteError(f"unknown route {route!r} for X W A W = D; choose from {RIGHT_ROUTES}")
    waw = mat_mul(mat_mul(w, a), w)
    residual = mat_mul(x, waw) - d
    checks = {}
    if verify:
        adw = wdrazin_via_cline(a, w)
        checks["wdrazin-axioms"] = all_hold(verify_wdrazin(a, w, adw))
        checks["composition"] = x == mat_mul(d, adw)
        checks["range"] = in_left_row_space(mat_pow(u, k), x)
    return _finish(x, residual, route, (k,), dens, strict, checks, "X W A W = D")


# W1 A W1 X W2 B W2 = D


def _hermitian_power_k(h: QMatrix, k: int | None, default: int, name: str) -> int:
    if k is None:
        return default
    if k < matrix_index(h):
        raise ValueError(f"{name}={k} is below the index of the Hermitian product")
    return k


def build_d_vectors(
    a: QMatrix,
    w1: QMatrix,
    b: QMatrix,
    w2: QMatrix,
    d: QMatrix,
    k1: int | None = None,
    k2: int | None = None,
) -> DVectors:
    """``D-tilde``, ``D-bar`` and the vectors ``d^B``, ``d^A`` of the Hermitian two-sided route.

    ``k1``/``k2`` default to the weighted indices; because ``AW1`` and
    ``W2B`` are Hermitian, any exponent at least their own index yields
    the same solution, so smaller admissible values may be passed.
    """
    _shape_two(a, w1, d, b, w2)
    v = mat_mul(a, w1)
    u = mat_mul(w2, b)
    if not is_hermitian(v) or not is_hermitian(u):
        raise RouteError("the d^A / d^B route needs A W1 and W2 B to be Hermitian")
    k1 = _hermitian_power_k(v, k1, weighted_index(a, w1), "k1")
    k2 = _hermitian_power_k(u, k2, weighted_index(b, w2), "k2")
    m, q = a.rows, b.cols
    vk = mat_pow(v, k1)
    uk = mat_pow(u, k2)
    s1, s2 = rank(vk), rank(uk)
    d_tilde = mat_mul(mat_mul(a, d), b)
    d_bar = mat_mul(mat_mul(mat_mul(vk, a), d), mat_mul(b, uk))
    if s1 == 0 or s2 == 0:
        z = QMatrix.zeros(m, q)
        return DVectors(z, z, d_bar, d_tilde, k1, k2, s1, s2, Fraction(0), Fraction(0))
    gv = mat_pow(v, k1 + 2)
    gu = mat_pow(u, k2 + 2)
    den_a = _nonzero(minor_sum(gv, s1), "two-sided route")
    den_b = _nonzero(minor_sum(gu, s2), "two-sided route")
    # column j of d_B: row sums of gu against each row of D-bar
    d_b = QMatrix([[bordered_row_sum(gu, j, d_bar.row_at(t), s2) for j in range(q)] for t in range(m)])
    # row i of d_A: column sums of gv against each column of D-bar
    d_a = QMatrix([[bordered_column_sum(gv, i, d_bar.col_at(l), s1) for l in range(q)] for i in range(m)])
    return DVectors(d_b, d_a, d_bar, d_tilde, k1, k2, s1, s2, den_a, den_b)


def solve_two_sided(
    a: QMatrix,
    w1: QMatrix,
    d: QMatrix,
    b: QMatrix,
    w2: QMatrix,
    route: str = "auto",
    lf: tuple[int, int] = (1, 1),
    strict: bool = True,
    verify: bool = False,
    k1: int | None = None,
    k2: int | None = None,
) -> SolveReport:
    """Solve ``W1 A W1 X W2 B W2 = D``.

    Routes: ``i`` (squared Drazin inverses around ``A D B``), ``ii-dB`` and
    ``ii-dA`` (need ``A W1`` and ``W2 B`` Hermitian) and ``composition``.
    ``auto`` takes ``ii-dB`` when it applies and ``i`` otherwise.
    """
    _shape_two(a, w1, d, b, w2)
    v = mat_mul(a, w1)
    u = mat_mul(w2, b)
    if route == "auto":
        route = "ii-dB" if is_hermitian(v) and is_hermitian(u) else "i"
    m, q = a.rows, b.cols
    dens: tuple = ()
    if route in ("ii-dB", "ii-dA"):
        dv = build_d_vectors(a, w1, b, w2, d, k1, k2)
        ks = (dv.k1, dv.k2)
        if dv.s1 == 0 or dv.s2 == 0:
            x = QMatrix.zeros(m, q)
        else:
            gv = mat_pow(v, dv.k1 + 2)
            gu = mat_pow(u, dv.k2 + 2)
            den = dv.den_A * dv.den_B
            dens = (dv.den_A, dv.den_B)
            if route == "ii-dB":
                x = QMatrix([[bordered_column_sum(gv, i, dv.d_B.col_at(j), dv.s1) / den for j in range(q)] for i in range(m)])
            else:
                x = QMatrix([[bordered_row_sum(gu, j, dv.d_A.row_at(i), dv.s2) / den for j in range(q)] for i in range(m)])
    else:
        ks = (weighted_index(a, w1), weighted_index(b, w2))
        if route == "i":
            x = mat_mul(mat_mul(drazin_squared(v, ks[0], lf), mat_mul(mat_mul(a, d), b)), drazin_squared(u, ks[1], lf))
        elif route == "composition":
            x = mat_mul(mat_mul(wdrazin_via_cline(a, w1), d), wdrazin_via_cline(b, w2))
        else:
            raise RouteError(f"unknown route {route!r} for W1 A W1 X W2 B W2 = D; choose from {TWO_SIDED_ROUTES}")
    lhs = mat_mul(mat_mul(mat_mul(w1, a), w1), mat_mul(x, mat_mul(mat_mul(w2, b), w2)))
    residual = lhs - d
    checks = {}
    if verify:
        ad = wdrazin_via_cline(a, w1)
        bd = wdrazin_via_cline(b, w2)
        checks["wdrazin-axioms"] = all_hold(verify_wdrazin(a, w1, ad)) and all_hold(verify_wdrazin(b, w2, bd))
        checks["composition"] = x == mat_mul(mat_mul(ad, d), bd)
        checks["range"] = in_right_column_space(mat_pow(v, ks[0]), x) and in_left_row_space(mat_pow(u, ks[1]), x)
    return _finish(x, residual, route, ks, dens, strict, checks, "W1 A W1 X W2 B W2 = D")


def check_consistency(
    a: QMatrix,
    w: QMatrix,
    d: QMatrix,
    side: str = "left",
    b: QMatrix | None = None,
    w2: QMatrix | None = None,
) -> bool:
    """Projector test: does the weighted-inverse candidate reproduce ``D`` exactly?

    ``side`` is ``left`` (``WAW X = D``), ``right`` (``X WAW = D``) or
    ``two-sided`` (which also needs ``b`` and ``w2``).
    """
    if side == "left":
        _shape_left(a, w, d)
        p1 = mat_mul(mat_mul(mat_mul(w, a), w), wdrazin_via_cline(a, w))
        return mat_mul(p1, d) == d
    if side == "right":
        _shape_right(a, w, d)
        p2 = mat_mul(wdrazin_via_cline(a, w), mat_mul(mat_mul(w, a), w))
        return mat_mul(d, p2) == d
    if side == "two-sided":
        if b is None or w2 is None:
            raise ValueError("two-sided consistency needs B and W2")
        _shape_two(a, w, d, b, w2)
        p1 = mat_mul(mat_mul(mat_mul(w, a), w), wdrazin_via_cline(a, w))
        p2 = mat_mul(wdrazin_via_cline(b, w2), mat_mul(mat_mul(w2, b), w2))
        return mat_mul(mat_mul(p1, d), p2) == d
    raise ValueError(f"side must be 'left', 'right' or 'two-sided', not {side!r}")
