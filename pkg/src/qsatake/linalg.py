"""Exact dense linear algebra over Q(i).

Everything is deterministic: pivoting always takes the first nonzero entry,
so reduced row echelon form (and therefore every reported basis) is canonical.
Equality of row spaces can be tested as equality of ``rref`` outputs, and
``kernel``/``image`` bases are reproducible across runs.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import NoSolutionError
from .scalars import GaussianRational, ONE, ZERO


class QMatrix:
    """A dense rows x cols matrix of GaussianRationals (row-major tuple)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if len(entries) != rows * cols:
            raise ValueError("entry count must equal rows * cols")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(
            self, "entries", tuple(GaussianRational.coerce(e) for e in entries)
        )

    @classmethod
    def _raw(cls, rows: int, cols: int, entries: tuple) -> "QMatrix":
        self = object.__new__(cls)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "QMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("rows have varying lengths")
            flat.extend(r)
        return cls(nrows, ncols, flat)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls._raw(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        e = [ZERO] * (n * n)
        for k in range(n):
            e[k * n + k] = ONE
        return cls._raw(n, n, tuple(e))

    @classmethod
    def diagonal(cls, values: Sequence) -> "QMatrix":
        n = len(values)
        e = [ZERO] * (n * n)
        for k, v in enumerate(values):
            e[k * n + k] = GaussianRational.coerce(v)
        return cls._raw(n, n, tuple(e))

    @classmethod
    def column(cls, values: Sequence) -> "QMatrix":
        return cls(len(values), 1, list(values))

    @classmethod
    def hstack(cls, columns: Iterable["QMatrix"]) -> "QMatrix":
        cols = list(columns)
        if not cols:
            return cls.zeros(0, 0)
        nrows = cols[0].rows
        flat = []
        for i in range(nrows):
            for c in cols:
                if c.rows != nrows:
                    raise ValueError("hstack: mismatched row counts")
                for j in range(c.cols):
                    flat.append(c.entries[i * c.cols + j])
        total = sum(c.cols for c in cols)
        return cls._raw(nrows, total, tuple(flat))

    def __getitem__(self, ij) -> GaussianRational:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> list:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def col(self, j: int) -> "QMatrix":
        return QMatrix._raw(
            self.rows, 1, tuple(self.entries[i * self.cols + j] for i in range(self.rows))
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in +")
        return QMatrix._raw(
            self.rows,
            self.cols,
            tuple(a + b for a, b in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in -")
        return QMatrix._raw(
            self.rows,
            self.cols,
            tuple(a - b for a, b in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix._raw(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "QMatrix":
        c = GaussianRational.coerce(c)
        return QMatrix._raw(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in @")
        m, n, p = self.rows, self.cols, other.cols
        out = [ZERO] * (m * p)
        se, oe = self.entries, other.entries
        for i in range(m):
            base = i * n
            obase = i * p
            for k in range(n):
                a = se[base + k]
                if not a:
                    continue
                kb = k * p
                for j in range(p):
                    b = oe[kb + j]
                    if b:
                        out[obase + j] = out[obase + j] + a * b
        return QMatrix._raw(m, p, tuple(out))

    def transpose(self) -> "QMatrix":
        e = self.entries
        c = self.cols
        return QMatrix._raw(
            c,
            self.rows,
            tuple(e[i * c + j] for j in range(c) for i in range(self.rows)),
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def nonzero_entries(self):
        """(i, j, value) for every nonzero entry, row-major order."""
        c = self.cols
        for k, v in enumerate(self.entries):
            if v:
                yield divmod(k, c) + (v,)

    def __str__(self) -> str:
        body = "; ".join(
            " ".join(str(self[i, j]) for j in range(self.cols))
            for i in range(self.rows)
        )
        return f"[{body}]"

    __repr__ = __str__


def block_diag(a: QMatrix, b: QMatrix) -> QMatrix:
    rows = a.rows + b.rows
    cols = a.cols + b.cols
    out = [ZERO] * (rows * cols)
    for i, j, v in a.nonzero_entries():
        out[i * cols + j] = v
    for i, j, v in b.nonzero_entries():
        out[(a.rows + i) * cols + (a.cols + j)] = v
    return QMatrix._raw(rows, cols, tuple(out))


def kronecker(a: QMatrix, b: QMatrix) -> QMatrix:
    """Kronecker product; index (i, j) of the product space is i * b.dim + j."""
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    out = [ZERO] * (rows * cols)
    for i, k, va in a.nonzero_entries():
        for j, l, vb in b.nonzero_entries():
            out[(i * b.rows + j) * cols + (k * b.cols + l)] = va * vb
    return QMatrix._raw(rows, cols, tuple(out))


def reduce_rows(rows: Iterable[dict]) -> dict:
    """Reduced row echelon form of sparse rows ({column: coefficient}).

    Returns {pivot column: reduced row}; each reduced row has coefficient 1 at
    its pivot column and zeros at every other pivot column.  The result is the
    canonical RREF of the row space, independent of input order.
    """
    pivots: dict[int, dict] = {}
    for r in rows:
        row = dict(r)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = row[c].inverse()
                pivots[c] = {cc: inv * vv for cc, vv in row.items()}
                break
            f = row.pop(c)
            for cc, vv in piv.items():
                if cc == c:
                    continue
                cur = row.get(cc)
                nv = cur - f * vv if cur is not None else -(f * vv)
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
    # Back-substitute; descending order makes one pass sufficient.
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        for cc in sorted(k for k in row if k != c and k in pivots):
            f = row.pop(cc)
            for c2, v2 in pivots[cc].items():
                if c2 == cc:
                    continue
                cur = row.get(c2)
                nv = cur - f * v2 if cur is not None else -(f * v2)
                if nv:
                    row[c2] = nv
                else:
                    row.pop(c2, None)
    return pivots


def _matrix_rows(m: QMatrix) -> list[dict]:
    out = []
    for i in range(m.rows):
        row = {}
        base = i * m.cols
        for j in range(m.cols):
            v = m.entries[base + j]
            if v:
                row[j] = v
        out.append(row)
    return out


def rref(m: QMatrix) -> QMatrix:
    """Canonical reduced row echelon form, same shape as the input."""
    pivots = reduce_rows(_matrix_rows(m))
    flat = [ZERO] * (m.rows * m.cols)
    for i, c in enumerate(sorted(pivots)):
        for j, v in pivots[c].items():
            flat[i * m.cols + j] = v
    return QMatrix._raw(m.rows, m.cols, tuple(flat))


def rank(m: QMatrix) -> int:
    return len(reduce_rows(_matrix_rows(m)))


def kernel(m: QMatrix) -> list[QMatrix]:
    """Canonical basis of the right null space, as column vectors.

    One vector per free column f: coefficient 1 at f, zero at the other free
    columns, pivot coordinates determined by the RREF.
    """
    pivots = reduce_rows(_matrix_rows(m))
    basis = []
    for f in range(m.cols):
        if f in pivots:
            continue
        vec = [ZERO] * m.cols
        vec[f] = ONE
        for c, row in pivots.items():
            w = row.get(f)
            if w:
                vec[c] = -w
        basis.append(QMatrix._raw(m.cols, 1, tuple(vec)))
    return basis


def image(m: QMatrix) -> list[QMatrix]:
    """Canonical basis of the column space (reduced column echelon form)."""
    pivots = reduce_rows(_matrix_rows(m.transpose()))
    basis = []
    for c in sorted(pivots):
        vec = [ZERO] * m.rows
        for j, v in pivots[c].items():
            vec[j] = v
        basis.append(QMatrix._raw(m.rows, 1, tuple(vec)))
    return basis


def solve_matrix(a: QMatrix, b: QMatrix) -> QMatrix:
    """The unique echelon solution X of a @ X = b (free variables set to 0).

    Raises NoSolutionError if any column of b is outside the column space.
    """
    if a.rows != b.rows:
        raise ValueError("shape mismatch in solve")
    n = a.cols
    rows = []
    for i in range(a.rows):
        row = {}
        for j in range(n):
            v = a.entries[i * n + j]
            if v:
                row[j] = v
        for j in range(b.cols):
            v = b.entries[i * b.cols + j]
            if v:
                row[n + j] = v
        if row:
            rows.append(row)
    pivots = reduce_rows(rows)
    for c in pivots:
        if c >= n:
            raise NoSolutionError("inconsistent linear system")
    flat = [ZERO] * (n * b.cols)
    for c, row in pivots.items():
        for j in range(b.cols):
            v = row.get(n + j)
            if v:
                flat[c * b.cols + j] = v
    return QMatrix._raw(n, b.cols, tuple(flat))


def solve(a: QMatrix, b: QMatrix) -> QMatrix:
    """Solve a @ x = b for a single column vector b."""
    if b.cols != 1:
        raise ValueError("solve expects a column vector; use solve_matrix")
    return solve_matrix(a, b)
