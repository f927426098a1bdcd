"""Row and column determinants of quaternion matrices.

For a permutation written as disjoint cycles, the ``i``-th row determinant
multiplies entries ``a[x, s(x)]`` along each cycle, starting with the cycle
through ``i`` (entered at ``i``) and then the remaining cycles in ascending
order of their smallest element (each entered at its minimum).  The ``j``-th
column determinant uses the same per-cycle walks but multiplies the cycles in
the opposite order, so the cycle through ``j`` comes last.  Fixed points count
as 1-cycles, and the sign is ``(-1)**(n - number_of_cycles)``.

Both functionals enumerate ``n!`` permutations; :func:`max_n` bounds ``n``.
"""

from __future__ import annotations

import contextlib
import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import DeterminantEngineError, DimensionError, NotHermitianError, NotSquareError, SizeCapError
from .qmatrix import QMatrix, is_hermitian, mat_mul
from .quaternion import ONE, ZERO, Quaternion

__all__ = [
    "max_n",
    "set_max_n",
    "size_cap",
    "cycle_normal_form",
    "rdet",
    "cdet",
    "det_hermitian",
    "ddet",
    "subsets",
    "subsets_containing",
    "principal_minor",
    "minor_sum",
    "bordered_column_sum",
    "bordered_row_sum",
]

_MAX_N = 8


def max_n() -> int:
    return _MAX_N


def set_max_n(n: int) -> None:
    global _MAX_N
    if n < 1:
        raise ValueError("the size cap must be at least 1")
    _MAX_N = n


@contextlib.contextmanager
def size_cap(n: int):
    """Temporarily change the largest order the determinant engine accepts."""
    old = _MAX_N
    set_max_n(n)
    try:
        yield
    finally:
        set_max_n(old)


def _cycles(perm: Sequence[int]) -> list[list[int]]:
    """Disjoint cycles of ``perm`` (including fixed points), each rotated to start at its minimum."""
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        cyc, x = [], s
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(cyc)
    return out


def cycle_normal_form(perm: Sequence[int], lead: int, kind: str = "row") -> tuple[int, list[list[int]]]:
    """Sign and ordered cycle walks of ``perm`` for the ``lead``-th row or column determinant.

    Each walk lists the row indices ``x`` whose entries ``a[x, perm[x]]`` are
    multiplied, left to right.
    """
    cycles = _cycles(perm)
    sign = -1 if (len(perm) - len(cycles)) % 2 else 1
    lead_cycle = next(c for c in cycles if lead in c)
    p = lead_cycle.index(lead)
    lead_walk = lead_cycle[p:] + lead_cycle[:p]
    rest = sorted((c for c in cycles if c is not lead_cycle), key=lambda c: c[0])
    if kind == "row":
        walks = [lead_walk] + rest
    elif kind == "col":
        walks = rest[::-1] + [lead_walk]
    else:
        raise ValueError(f"kind must be 'row' or 'col', not {kind!r}")
    return sign, walks


@lru_cache(maxsize=None)
def _schedule(n: int, lead: int, kind: str) -> tuple:
    """Flattened factor order ``(sign, ((row, col), ...))`` for every permutation of ``n``."""
    terms = []
    for perm in itertools.permutations(range(n)):
        sign, walks = cycle_normal_form(perm, lead, kind)
        terms.append((sign, tuple((x, perm[x]) for w in walks for x in w)))
    return tuple(terms)


def _check(m: QMatrix, idx: int, what: str) -> None:
    if not m.is_square():
        raise NotSquareError(f"{what} of a non-square {m.rows}x{m.cols} matrix")
    if not 0 <= idx < m.rows:
        raise IndexError(f"{what} index {idx} out of range for order {m.rows}")
    if m.rows > _MAX_N:
        raise SizeCapError(
            f"{what} of order {m.rows} exceeds the size cap {_MAX_N} ({m.rows}! terms); raise the cap to proceed"
        )


def _expand(m: QMatrix, lead: int, kind: str) -> Quaternion:
    acc = ZERO
    for sign, factors in _schedule(m.rows, lead, kind):
        prod = ONE
        for i, j in factors:
            e = m[i, j]
            if e.is_zero():
                break
            prod = prod * e
        else:
            acc = acc + prod if sign > 0 else acc - prod
    return acc


def rdet(m: QMatrix, i: int) -> Quaternion:
    """The ``i``-th row determinant (0-based ``i``)."""
    _check(m, i, "rdet")
    return _expand(m, i, "row")


def cdet(m: QMatrix, j: int) -> Quaternion:
    """The ``j``-th column determinant (0-based ``j``)."""
    _check(m, j, "cdet")
    return _expand(m, j, "col")


def det_hermitian(m: QMatrix) -> Fraction:
    """Determinant of a Hermitian matrix, the common real value of all row and column determinants."""
    if not is_hermitian(m):
        raise NotHermitianError("det_hermitian needs a Hermitian matrix")
    if m.rows == 0:
        return Fraction(1)
    d = rdet(m, 0)
    if not d.is_real():
        raise DeterminantEngineError(f"determinant of a Hermitian matrix came out non-real: {d}")
    return d.a0


def ddet(m: QMatrix) -> Fraction:
    """``det(M M*)``, equal to ``det(M* M)``; nonzero exactly when ``M`` is invertible."""
    if not m.is_square():
        raise NotSquareError(f"ddet of a non-square {m.rows}x{m.cols} matrix")
    return det_hermitian(mat_mul(m, m.conj_transpose()))


def subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Strictly increasing ``k``-tuples from ``range(n)`` in lexicographic order."""
    return itertools.combinations(range(n), k)


def subsets_containing(n: int, k: int, i: int) -> Iterator[tuple[int, ...]]:
    """The ``k``-subsets of ``range(n)`` that contain ``i``."""
    for rest in itertools.combinations([x for x in range(n) if x != i], k - 1):
        yield tuple(sorted(rest + (i,)))


def principal_minor(m: QMatrix, alpha: Sequence[int]) -> Fraction:
    if not is_hermitian(m):
        raise NotHermitianError("principal minors are taken of Hermitian matrices")
    return det_hermitian(m.principal(alpha))


def minor_sum(m: QMatrix, k: int) -> Fraction:
    """Sum of all ``k x k`` principal minors of a Hermitian matrix."""
    if not is_hermitian(m):
        raise NotHermitianError("principal minor sums are taken of Hermitian matrices")
    return sum((det_hermitian(m.principal(a)) for a in subsets(m.rows, k)), Fraction(0))


def bordered_column_sum(m: QMatrix, i: int, b: Sequence[Quaternion], k: int) -> Quaternion:
    """``sum over beta in J_{k,n}{i}`` of ``cdet_i`` of the ``beta`` principal submatrix of ``M`` with column ``i`` set to ``b``."""
    n = m.rows
    if len(b) != n:
        raise DimensionError(f"column of length {len(b)} for a matrix of order {n}")
    if not 0 <= i < n:
        raise IndexError(f"index {i} out of range for order {n}")
    if k == 0:
        return ZERO
    full = m.replace_column(i, b)
    acc = ZERO
    for beta in subsets_containing(n, k, i):
        acc = acc + cdet(full.principal(beta), beta.index(i))
    return acc


def bordered_row_sum(m: QMatrix, j: int, b: Sequence[Quaternion], k: int) -> Quaternion:
    """``sum over alpha in I_{k,n}{j}`` of ``rdet_j`` of the ``alpha`` principal submatrix of ``M`` with row ``j`` set to ``b``."""
    n = m.rows
    if len(b) != n:
        raise DimensionError(f"row of length {len(b)} for a matrix of order {n}")
    if not 0 <= j < n:
        raise IndexError(f"index {j} out of range for order {n}")
    if k == 0:
        return ZERO
    full = m.replace_row(j, b)
    acc = ZERO
    for alpha in subsets_containing(n, k, j):
        acc = acc + rdet(full.principal(alpha), alpha.index(j))
    return acc
