"""Shared fixtures: example matrices, seeded random generators and hypothesis strategies."""

from __future__ import annotations

import json
import random
from functools import lru_cache
from pathlib import Path

from hypothesis import strategies as st

from qcramer import QMatrix, Quaternion, mat_mul, matrix_from_json, parse_matrix

DATA = Path(__file__).parent / "data"

# criterion number -> "criterion N: PASS/FAIL - detail", filled by test_acceptance
ACCEPTANCE_LINES: dict[int, str] = {}


def load(name: str) -> QMatrix:
    return parse_matrix((DATA / f"{name}.mat").read_text())


@lru_cache(maxsize=None)
def reference() -> dict:
    """Frozen oracle values; matrices are decoded on access with :func:`matrix_from_json`."""
    return json.loads((DATA / "reference.json").read_text())


def ref_example(name: str) -> QMatrix:
    return matrix_from_json(reference()["examples"][name])


def M(*rows: str) -> QMatrix:
    """Build a matrix from ``;``-separated row strings."""
    return QMatrix([r.split(";") for r in rows])


# random instances with components in {-2..2}

def rand_q(rng: random.Random, lo: int = -2, hi: int = 2) -> Quaternion:
    return Quaternion(*(rng.randint(lo, hi) for _ in range(4)))


def rand_matrix(rng: random.Random, m: int, n: int, density: float = 1.0) -> QMatrix:
    return QMatrix([[rand_q(rng) if rng.random() < density else 0 for _ in range(n)] for _ in range(m)])


def rand_rank_deficient(rng: random.Random, m: int, n: int) -> QMatrix:
    """Rows repeat up to a left scalar in {1, -1, i, j, k}, so the rank drops."""
    base = rand_matrix(rng, max(1, min(m, n) - 1), n)
    rows = []
    for t in range(m):
        src = base.row_at(t % base.rows)
        c = rng.choice([1, -1, Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)])
        c = Quaternion(c) if isinstance(c, int) else c
        rows.append([c * x for x in src])
    return QMatrix(rows)


def rand_nilpotent(rng: random.Random, n: int) -> QMatrix:
    """Strictly upper triangular, conjugated by a permutation."""
    perm = list(range(n))
    rng.shuffle(perm)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[perm[i]][perm[j]] = rand_q(rng)
    return QMatrix(rows)


def random_square_cases(seed: int = 2024, count: int = 30) -> list[QMatrix]:
    """Square inputs of order 1..4 mixing full, rank-deficient and nilpotent matrices."""
    rng = random.Random(seed)
    out = []
    for t in range(count):
        n = rng.randint(1, 3) if t % 5 else 4
        kind = t % 3
        if kind == 0:
            out.append(rand_matrix(rng, n, n, density=0.7))
        elif kind == 1:
            out.append(rand_rank_deficient(rng, n, n))
        else:
            out.append(rand_nilpotent(rng, max(n, 2)))
    return out


def random_rect_cases(seed: int = 7, count: int = 30) -> list[QMatrix]:
    rng = random.Random(seed)
    out = []
    for t in range(count):
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        out.append(rand_rank_deficient(rng, m, n) if t % 3 == 1 else rand_matrix(rng, m, n, density=0.8))
    return out


def random_weighted_cases(seed: int = 11, count: int = 24) -> list[tuple[QMatrix, QMatrix]]:
    """Pairs ``(A, W)`` with ``A`` up to 3x4 and ``W`` of the transposed shape."""
    rng = random.Random(seed)
    out = []
    for t in range(count):
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        a = rand_rank_deficient(rng, m, n) if t % 4 == 1 else rand_matrix(rng, m, n, density=0.7)
        w = rand_rank_deficient(rng, n, m) if t % 4 == 2 else rand_matrix(rng, n, m, density=0.7)
        out.append((a, w))
    return out


def hermitian_from(c: QMatrix) -> QMatrix:
    return c + c.conj_transpose()


def hermitian_weighted_cases(seed: int = 5, count: int = 6) -> list[tuple[QMatrix, QMatrix, str]]:
    """Pairs where ``AW`` (tag ``AW``) or ``WA`` (tag ``WA``) is Hermitian by construction."""
    rng = random.Random(seed)
    out = []
    for t in range(count):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        w = rand_matrix(rng, n, m, density=0.7)
        if t % 2 == 0:
            a = mat_mul(w.conj_transpose(), hermitian_from(rand_matrix(rng, n, n, density=0.6)))
            out.append((a, w, "AW"))
        else:
            a = mat_mul(hermitian_from(rand_matrix(rng, m, m, density=0.6)), w.conj_transpose())
            out.append((a, w, "WA"))
    return out


# hypothesis strategies

small_int = st.integers(min_value=-2, max_value=2)
quaternions = st.builds(Quaternion, small_int, small_int, small_int, small_int)


@st.composite
def matrices(draw, min_rows=1, max_rows=3, min_cols=1, max_cols=3, square=False):
    m = draw(st.integers(min_rows, max_rows))
    n = m if square else draw(st.integers(min_cols, max_cols))
    return QMatrix([[draw(quaternions) for _ in range(n)] for _ in range(m)])


@st.composite
def hermitian_matrices(draw, min_n=2, max_n=4):
    n = draw(st.integers(min_n, max_n))
    rows = [[Quaternion(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = Quaternion(draw(small_int))
        for j in range(i + 1, n):
            q = draw(quaternions)
            rows[i][j] = q
            rows[j][i] = q.conj()
    return QMatrix(rows)


# right-hand sides for the restricted equations

def consistent_left_rhs(a: QMatrix, w: QMatrix, y: QMatrix) -> QMatrix:
    """``(WA)^k Y``, which always lies in the admissible column space."""
    from qcramer import mat_pow
    from qcramer.wdrazin import weighted_index

    return mat_mul(mat_pow(mat_mul(w, a), weighted_index(a, w)), y)


def consistent_right_rhs(a: QMatrix, w: QMatrix, y: QMatrix) -> QMatrix:
    """``Y (AW)^k``."""
    from qcramer import mat_pow
    from qcramer.wdrazin import weighted_index

    return mat_mul(y, mat_pow(mat_mul(a, w), weighted_index(a, w)))


def inconsistent_left_rhs(a: QMatrix, w: QMatrix) -> QMatrix:
    """A column ``z`` with ``z* (WA)^k = 0``; nonzero, so it is outside the range of ``(WA)^k``."""
    from qcramer import left_null_space, mat_pow
    from qcramer.wdrazin import weighted_index

    basis = left_null_space(mat_pow(mat_mul(w, a), weighted_index(a, w)))
    if not basis:
        raise ValueError("(WA)^k has full row rank; every right-hand side is consistent")
    return basis[0].conj_transpose()
