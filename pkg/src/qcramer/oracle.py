"""Axiom checkers that never touch the determinantal formulas they audit."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, NotSquareError
from .qmatrix import QMatrix, mat_mul, mat_pow, matrix_index

__all__ = [
    "AxiomReport",
    "verify_penrose",
    "verify_drazin",
    "verify_wdrazin",
    "all_hold",
    "classical_det_oracle",
]


@dataclass(frozen=True)
class AxiomReport:
    axiom_id: str
    holds: bool
    residual: QMatrix

    @classmethod
    def of(cls, axiom_id: str, lhs: QMatrix, rhs: QMatrix) -> "AxiomReport":
        res = lhs - rhs
        return cls(axiom_id, res.is_zero(), res)


def all_hold(reports) -> bool:
    return all(r.holds for r in reports)


def verify_penrose(a: QMatrix, x: QMatrix) -> list[AxiomReport]:
    """P1 AXA=A, P2 XAX=X, P3 (AX)*=AX, P4 (XA)*=XA."""
    if (x.rows, x.cols) != (a.cols, a.rows):
        raise DimensionError(f"X must be {a.cols}x{a.rows}, got {x.rows}x{x.cols}")
    ax = mat_mul(a, x)
    xa = mat_mul(x, a)
    return [
        AxiomReport.of("P1", mat_mul(ax, a), a),
        AxiomReport.of("P2", mat_mul(xa, x), x),
        AxiomReport.of("P3", ax.conj_transpose(), ax),
        AxiomReport.of("P4", xa.conj_transpose(), xa),
    ]


def verify_drazin(a: QMatrix, x: QMatrix, k: int | None = None) -> list[AxiomReport]:
    """D2 XAX=X, D5 AX=XA, D6 A^(k+1)X=A^k with ``k = Ind(A)`` by default."""
    if not a.is_square():
        raise NotSquareError(f"Drazin axioms need a square matrix, got {a.rows}x{a.cols}")
    if x.shape != a.shape:
        raise DimensionError(f"X must be {a.rows}x{a.cols}, got {x.rows}x{x.cols}")
    if k is None:
        k = matrix_index(a)
    ak = mat_pow(a, k)
    return [
        AxiomReport.of("D2", mat_mul(mat_mul(x, a), x), x),
        AxiomReport.of("D5", mat_mul(a, x), mat_mul(x, a)),
        AxiomReport.of("D6", mat_mul(mat_mul(ak, a), x), ak),
    ]


def verify_wdrazin(a: QMatrix, w: QMatrix, x: QMatrix) -> list[AxiomReport]:
    """W7 (AW)^(k+1)XW=(AW)^k, W8 XWAWX=X, W9 AWX=XWA."""
    m, n = a.shape
    if w.shape != (n, m):
        raise DimensionError(f"W must be {n}x{m}, got {w.rows}x{w.cols}")
    if x.shape != (m, n):
        raise DimensionError(f"X must be {m}x{n}, got {x.rows}x{x.cols}")
    aw = mat_mul(a, w)
    wa = mat_mul(w, a)
    k = max(matrix_index(aw), matrix_index(wa))
    awk = mat_pow(aw, k)
    xw = mat_mul(x, w)
    return [
        AxiomReport.of("W7", mat_mul(mat_mul(awk, aw), xw), awk),
        AxiomReport.of("W8", mat_mul(mat_mul(xw, a), mat_mul(w, x)), x),
        AxiomReport.of("W9", mat_mul(aw, x), mat_mul(x, wa)),
    ]


def _cofactor(rows: list[list[Fraction]]) -> Fraction:
    if not rows:
        return Fraction(1)
    acc = Fraction(0)
    for j, x in enumerate(rows[0]):
        if x:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            acc += (-x if j % 2 else x) * _cofactor(minor)
    return acc


def classical_det_oracle(m: QMatrix) -> Fraction:
    """Cofactor expansion along the first row, for matrices with real entries."""
    if not m.is_square():
        raise NotSquareError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if not all(q.is_real() for r in m for q in r):
        raise ValueError("classical_det_oracle needs real entries")
    return _cofactor([[q.a0 for q in r] for r in m])
