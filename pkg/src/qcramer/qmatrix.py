"""Dense quaternion matrices.

:class:`QMatrix` is an immutable value type.  Products keep the left factor's
entry on the left, which matters because quaternion multiplication does not
commute.  Rank is computed by Gaussian elimination with left row operations
only; over a division ring row rank equals column rank, so the result is the
rank of the matrix in every sense used here.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, NotSquareError, ParseError
from .quaternion import ONE, ZERO, Quaternion, as_quaternion, format_fraction

__all__ = [
    "QMatrix",
    "conj_transpose",
    "mat_mul",
    "mat_pow",
    "rank",
    "matrix_index",
    "is_hermitian",
    "in_right_column_space",
    "in_left_row_space",
    "right_null_space",
    "left_null_space",
    "parse_matrix",
    "format_matrix",
    "matrix_from_json",
    "matrix_to_json",
]


class QMatrix:
    """An ``rows x cols`` grid of :class:`Quaternion` entries."""

    __slots__ = ("_rows", "rows", "cols")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(as_quaternion(x) for x in row) for row in data)
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise DimensionError(f"ragged matrix rows with lengths {sorted(widths)}")
            ncols = widths.pop()
            if cols is not None and cols != ncols:
                raise DimensionError(f"expected {cols} columns, got {ncols}")
        else:
            ncols = cols or 0
        self._rows = rows
        self.rows = len(rows)
        self.cols = ncols

    @classmethod
    def _wrap(cls, rows: tuple, ncols: int) -> "QMatrix":
        m = object.__new__(cls)
        m._rows = rows
        m.rows = len(rows)
        m.cols = ncols
        return m

    # constructors

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls._wrap(tuple((ZERO,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls._wrap(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def diag(cls, entries: Sequence) -> "QMatrix":
        qs = [as_quaternion(x) for x in entries]
        n = len(qs)
        return cls._wrap(tuple(tuple(qs[i] if i == j else ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def column(cls, entries: Sequence) -> "QMatrix":
        return cls([[x] for x in entries], cols=1)

    @classmethod
    def row(cls, entries: Sequence) -> "QMatrix":
        return cls([list(entries)])

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def row_at(self, i: int) -> tuple:
        return self._rows[i]

    def col_at(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def tolist(self) -> list[list[Quaternion]]:
        return [list(r) for r in self._rows]

    def __iter__(self):
        return iter(self._rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "QMatrix":
        src = self._rows
        return QMatrix._wrap(tuple(tuple(src[i][j] for j in cols) for i in rows), len(cols))

    def principal(self, idx: Sequence[int]) -> "QMatrix":
        return self.submatrix(idx, idx)

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self._rows for x in r)

    # algebra

    def conj_transpose(self) -> "QMatrix":
        return QMatrix._wrap(
            tuple(tuple(self._rows[i][j].conj() for i in range(self.rows)) for j in range(self.cols)),
            self.rows,
        )

    @property
    def H(self) -> "QMatrix":
        return self.conj_transpose()

    def transpose(self) -> "QMatrix":
        return QMatrix._wrap(
            tuple(tuple(self._rows[i][j] for i in range(self.rows)) for j in range(self.cols)),
            self.rows,
        )

    def __add__(self, other: "QMatrix") -> "QMatrix":
        _same_shape(self, other, "+")
        return QMatrix._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)), self.cols
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        _same_shape(self, other, "-")
        return QMatrix._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)), self.cols
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix._wrap(tuple(tuple(-a for a in r) for r in self._rows), self.cols)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        return mat_mul(self, other)

    def __mul__(self, scalar):
        """Right scalar multiplication ``M * c``."""
        if isinstance(scalar, QMatrix):
            return mat_mul(self, scalar)
        c = as_quaternion(scalar)
        return QMatrix._wrap(tuple(tuple(a * c for a in r) for r in self._rows), self.cols)

    def __rmul__(self, scalar):
        """Left scalar multiplication ``c * M``."""
        c = as_quaternion(scalar)
        return QMatrix._wrap(tuple(tuple(c * a for a in r) for r in self._rows), self.cols)

    def __truediv__(self, scalar):
        return QMatrix._wrap(tuple(tuple(a / scalar for a in r) for r in self._rows), self.cols)

    def __pow__(self, p: int) -> "QMatrix":
        return mat_pow(self, p)

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        body = "; ".join(", ".join(x.format() for x in r) for r in self._rows)
        return f"QMatrix({self.rows}x{self.cols}: [{body}])"

    def __str__(self):
        return format_matrix(self)

    def replace_column(self, j: int, b: Sequence) -> "QMatrix":
        b = [as_quaternion(x) for x in b]
        if len(b) != self.rows:
            raise DimensionError(f"column of length {len(b)} cannot replace a column of a {self.rows}-row matrix")
        if not 0 <= j < self.cols:
            raise IndexError(f"column index {j} out of range")
        return QMatrix._wrap(tuple(r[:j] + (b[i],) + r[j + 1:] for i, r in enumerate(self._rows)), self.cols)

    def replace_row(self, i: int, b: Sequence) -> "QMatrix":
        b = tuple(as_quaternion(x) for x in b)
        if len(b) != self.cols:
            raise DimensionError(f"row of length {len(b)} cannot replace a row of a {self.cols}-column matrix")
        if not 0 <= i < self.rows:
            raise IndexError(f"row index {i} out of range")
        return QMatrix._wrap(self._rows[:i] + (b,) + self._rows[i + 1:], self.cols)

    def hstack(self, other: "QMatrix") -> "QMatrix":
        if self.rows != other.rows:
            raise DimensionError(f"cannot place {other.shape} beside {self.shape}")
        return QMatrix._wrap(tuple(r + s for r, s in zip(self._rows, other._rows)), self.cols + other.cols)

    def vstack(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.cols:
            raise DimensionError(f"cannot stack {other.shape} below {self.shape}")
        return QMatrix._wrap(self._rows + other._rows, self.cols)


def _same_shape(a: QMatrix, b: QMatrix, op: str) -> None:
    if not isinstance(b, QMatrix):
        raise TypeError(f"unsupported operand for {op}: {type(b).__name__}")
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch for {op}: {a.shape} vs {b.shape}")


def conj_transpose(m: QMatrix) -> QMatrix:
    return m.conj_transpose()


def mat_mul(a: QMatrix, b: QMatrix) -> QMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bcols = [b.col_at(j) for j in range(b.cols)]
    out = []
    for r in a._rows:
        row = []
        for c in bcols:
            acc = ZERO
            for x, y in zip(r, c):
                if x._c != (0, 0, 0, 0) and y._c != (0, 0, 0, 0):
                    acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return QMatrix._wrap(tuple(out), b.cols)


def mat_pow(m: QMatrix, p: int) -> QMatrix:
    if not m.is_square():
        raise NotSquareError(f"power of a non-square {m.rows}x{m.cols} matrix")
    if p < 0:
        raise ValueError("negative matrix powers are not supported")
    out = QMatrix.identity(m.rows)
    base = m
    while p:
        if p & 1:
            out = mat_mul(out, base)
        p >>= 1
        if p:
            base = mat_mul(base, base)
    return out


def _echelon(m: QMatrix) -> tuple[list[list[Quaternion]], list[int]]:
    """Reduced row echelon form using left row operations only.

    Pivots are normalised to 1 by left division.  Returns the reduced rows and
    the pivot column of each nonzero row.
    """
    rows = [list(r) for r in m._rows]
    pivots: list[int] = []
    lead = 0
    for c in range(m.cols):
        p = next((i for i in range(lead, m.rows) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[lead], rows[p] = rows[p], rows[lead]
        inv = rows[lead][c].inverse()
        rows[lead] = [inv * x for x in rows[lead]]
        for i in range(m.rows):
            if i != lead and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[lead])]
        pivots.append(c)
        lead += 1
        if lead == m.rows:
            break
    return rows, pivots


def rank(m: QMatrix) -> int:
    return len(_echelon(m)[1])


def matrix_index(m: QMatrix) -> int:
    """Smallest ``k`` with ``rank(M^(k+1)) == rank(M^k)``; 0 iff ``M`` is invertible.

    The zero matrix (and any singular matrix) gets ``k >= 1``.
    """
    if not m.is_square():
        raise NotSquareError(f"index of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    r = rank(m)
    if r == n:
        return 0
    k, pk = 1, m
    while True:
        nxt = mat_mul(pk, m)
        rn = rank(nxt)
        if rn == r:
            return k
        k, pk, r = k + 1, nxt, rn


def is_hermitian(m: QMatrix) -> bool:
    if not m.is_square():
        return False
    return all(m[i, j] == m[j, i].conj() for i in range(m.rows) for j in range(i, m.cols))


def in_right_column_space(m: QMatrix, d: QMatrix) -> bool:
    """True iff every column of ``d`` is ``m @ x`` for some column ``x``."""
    if m.rows != d.rows:
        raise DimensionError(f"row counts differ: {m.rows} vs {d.rows}")
    return rank(m.hstack(d)) == rank(m)


def in_left_row_space(m: QMatrix, d: QMatrix) -> bool:
    """True iff every row of ``d`` is ``x @ m`` for some row ``x``."""
    if m.cols != d.cols:
        raise DimensionError(f"column counts differ: {m.cols} vs {d.cols}")
    return rank(m.vstack(d)) == rank(m)


def right_null_space(m: QMatrix) -> list[QMatrix]:
    """Basis columns ``x`` (as ``n x 1`` matrices) with ``m @ x == 0``."""
    rows, pivots = _echelon(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * m.cols
        x[f] = ONE
        for r, pc in enumerate(pivots):
            x[pc] = -rows[r][f]
        basis.append(QMatrix.column(x))
    return basis


def left_null_space(m: QMatrix) -> list[QMatrix]:
    """Basis rows ``y`` (as ``1 x m`` matrices) with ``y @ m == 0``."""
    return [x.conj_transpose() for x in right_null_space(m.conj_transpose())]


# text and structured formats


def parse_matrix(text: str) -> QMatrix:
    """Parse the text format: a header ``"m n"`` then ``m`` lines of ``;``-separated entries.

    Blank lines and ``#`` comments are ignored.  Errors carry line and column.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty matrix file", line=1, column=1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"expected header 'm n', got {header.strip()!r}", line=lineno, column=1)
    m, n = int(parts[0]), int(parts[1])
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"expected {m} rows, found {len(body)}", line=where, column=1)
    out = []
    for lineno, line in body:
        cells = line.split(";")
        if len(cells) != n:
            raise ParseError(f"expected {n} entries, found {len(cells)}", line=lineno, column=1)
        row, col = [], 1
        for cell in cells:
            try:
                row.append(Quaternion.parse(cell))
            except ParseError as exc:
                offset = (exc.column or 1) - 1 + (len(cell) - len(cell.lstrip()))
                raise ParseError(str(exc).split(": ", 1)[-1], line=lineno, column=col + offset) from None
            col += len(cell) + 1
        out.append(row)
    return QMatrix(out, cols=n)


def format_matrix(m: QMatrix, decimal: bool = False) -> str:
    lines = [f"{m.rows} {m.cols}"]
    for r in m._rows:
        lines.append("; ".join(x.format(decimal) for x in r))
    return "\n".join(lines) + "\n"


def matrix_to_json(m: QMatrix) -> list:
    """Array of rows; each entry is ``[a0, a1, a2, a3]`` as rational strings."""
    return [[[format_fraction(c) for c in x.components] for x in r] for r in m._rows]


def matrix_from_json(data) -> QMatrix:
    if isinstance(data, str):
        data = json.loads(data)
    if isinstance(data, dict):
        data = data["matrix"]
    rows = []
    for r in data:
        row = []
        for x in r:
            if not isinstance(x, (list, tuple)) or len(x) != 4:
                raise ParseError(f"entry {x!r} is not a 4-tuple of rationals")
            row.append(Quaternion(*(Fraction(str(c)) for c in x)))
        rows.append(row)
    return QMatrix(rows)
