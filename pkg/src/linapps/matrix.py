"""Immutable dense matrices over exact scalars.

Row indices in :func:`row_replace` are 1-based, matching the usual R_1, R_2,
R_3 naming of matrix rows in hand computations.
"""

from fractions import Fraction

from .errors import InvalidOperationError, ParseError, ShapeError
from .scalar import as_scalar, format_scalar, parse_scalar


class Matrix:
    """A rows x cols grid of scalars.  Value-semantic and hashable."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise ShapeError("matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged rows")
        self._rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[Fraction(0)] * cols for _ in range(rows)])

    @classmethod
    def column(cls, values):
        return cls([[v] for v in values])

    @property
    def nrows(self):
        return len(self._rows)

    @property
    def ncols(self):
        return len(self._rows[0])

    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def rows(self):
        return self._rows

    def row(self, i):
        return self._rows[i]

    def col(self, j):
        return tuple(r[j] for r in self._rows)

    def entries(self):
        """Row-major flat tuple."""
        return tuple(x for r in self._rows for x in r)

    def diagonal(self):
        return tuple(self._rows[i][i] for i in range(min(self.shape)))

    def trace(self):
        if not self.is_square:
            raise ShapeError("trace of a non-square matrix")
        return sum(self.diagonal(), Fraction(0))

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"Matrix({format_matrix(self)!r})"

    def __str__(self):
        return format_matrix(self)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(
            [a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)
        )

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(
            [a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)
        )

    def __neg__(self):
        return self.scale(-1)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def scale(self, k):
        k = as_scalar(k)
        return Matrix([k * x for x in r] for r in self._rows)

    def apply(self, vector):
        """Matrix-vector product returning a tuple."""
        vector = tuple(as_scalar(v) for v in vector)
        if len(vector) != self.ncols:
            raise ShapeError(f"vector of length {len(vector)} for {self.shape} matrix")
        return tuple(sum((a * v for a, v in zip(r, vector)), Fraction(0)) for r in self._rows)

    def power(self, k):
        if not self.is_square:
            raise ShapeError("power of a non-square matrix")
        if k < 0:
            raise InvalidOperationError("negative matrix power")
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Row-by-column product ``a @ b``."""
    if a.ncols != b.nrows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    cols = [b.col(j) for j in range(b.ncols)]
    return Matrix(
        [sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols]
        for r in a.rows()
    )


def transpose(a: Matrix) -> Matrix:
    return Matrix(a.col(j) for j in range(a.ncols))


def row_replace(a: Matrix, target: int, source: int, h) -> Matrix:
    """Return a copy with R_target <- R_target + h * R_source (1-based rows)."""
    if target == source:
        raise InvalidOperationError("row replacement needs two distinct rows")
    for idx in (target, source):
        if not 1 <= idx <= a.nrows:
            raise IndexError(f"row {idx} out of range 1..{a.nrows}")
    h = as_scalar(h)
    rows = [list(r) for r in a.rows()]
    src = rows[source - 1]
    rows[target - 1] = [x + h * y for x, y in zip(rows[target - 1], src)]
    return Matrix(rows)


def parse_matrix(text: str) -> Matrix:
    """Parse ``"30,20,100;25,30,60"`` (rows by ``;``, entries by ``,``)."""
    if not text.strip():
        raise ParseError("empty matrix literal")
    rows = []
    for chunk in text.split(";"):
        rows.append([parse_scalar(tok) for tok in chunk.split(",")])
    try:
        return Matrix(rows)
    except ShapeError as exc:
        raise ParseError(str(exc)) from exc


def format_matrix(a: Matrix) -> str:
    return ";".join(",".join(format_scalar(x) for x in r) for r in a.rows())
