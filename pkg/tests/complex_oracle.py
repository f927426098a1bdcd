"""Independent reference values through the complex 2x2 embedding.

``a + b i + (c + d i) j`` maps to ``[[z1, z2], [-conj z2, conj z1]]``.  The
map is an injective ring homomorphism that commutes with the conjugate
transpose, so Moore-Penrose, Drazin and weighted Drazin inverses can be
computed by sympy over the Gaussian rationals and pulled back.
"""

from __future__ import annotations

from fractions import Fraction

import sympy as sp

from qcramer import QMatrix, Quaternion


def _q_to_block(q: Quaternion):
    z1 = sp.Rational(q.a0.numerator, q.a0.denominator) + sp.I * sp.Rational(q.a1.numerator, q.a1.denominator)
    z2 = sp.Rational(q.a2.numerator, q.a2.denominator) + sp.I * sp.Rational(q.a3.numerator, q.a3.denominator)
    return [[z1, z2], [-sp.conjugate(z2), sp.conjugate(z1)]]


def embed(m: QMatrix) -> sp.Matrix:
    out = sp.zeros(2 * m.rows, 2 * m.cols)
    for i in range(m.rows):
        for j in range(m.cols):
            b = _q_to_block(m[i, j])
            for r in range(2):
                for c in range(2):
                    out[2 * i + r, 2 * j + c] = b[r][c]
    return out


def _frac(x) -> Fraction:
    x = sp.simplify(x)
    if not x.is_Rational:
        raise ValueError(f"reference value {x} is not rational")
    return Fraction(int(x.p), int(x.q))


def pull_back(mat: sp.Matrix) -> QMatrix:
    rows = []
    for i in range(mat.rows // 2):
        row = []
        for j in range(mat.cols // 2):
            z1 = sp.expand(mat[2 * i, 2 * j])
            z2 = sp.expand(mat[2 * i, 2 * j + 1])
            row.append(Quaternion(_frac(sp.re(z1)), _frac(sp.im(z1)), _frac(sp.re(z2)), _frac(sp.im(z2))))
        rows.append(row)
    return QMatrix(rows, cols=mat.cols // 2)


def _simplify(m: sp.Matrix) -> sp.Matrix:
    return m.applyfunc(lambda x: sp.expand(sp.radsimp(x)))


def c_rank(m: sp.Matrix) -> int:
    return m.rank(simplify=True)


def c_index(m: sp.Matrix) -> int:
    if m.rows == 0:
        return 0
    if c_rank(m) == m.rows:
        return 0
    k, p = 1, m
    while True:
        nxt = _simplify(p * m)
        if c_rank(nxt) == c_rank(p):
            return k
        p, k = nxt, k + 1


def c_pinv(m: sp.Matrix) -> sp.Matrix:
    if all(x == 0 for x in m):
        return sp.zeros(m.cols, m.rows)
    return _simplify(m.pinv(method="RD"))


def c_drazin(m: sp.Matrix) -> sp.Matrix:
    k = c_index(m)
    mk = _simplify(m**k)
    return _simplify(mk * c_pinv(_simplify(m ** (2 * k + 1))) * mk)


def ref_pinv(a: QMatrix) -> QMatrix:
    return pull_back(c_pinv(embed(a)))


def ref_drazin(a: QMatrix) -> QMatrix:
    return pull_back(c_drazin(embed(a)))


def ref_wdrazin(a: QMatrix, w: QMatrix) -> QMatrix:
    ea, ew = embed(a), embed(w)
    ud = c_drazin(_simplify(ew * ea))
    return pull_back(_simplify(ea * ud * ud))


def ref_rank(a: QMatrix) -> int:
    return c_rank(embed(a)) // 2


def ref_det_complex(m: QMatrix):
    """Classical determinant of a matrix whose entries lie in span{1, i}."""
    mat = sp.Matrix(m.rows, m.cols, lambda i, j: sp.Rational(m[i, j].a0.numerator, m[i, j].a0.denominator)
                    + sp.I * sp.Rational(m[i, j].a1.numerator, m[i, j].a1.denominator))
    return sp.expand(mat.det())
