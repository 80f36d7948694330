"""Dense matrices over LaurentPoly and over D(D3).

Composite spaces use leftmost-factor-major ordering: for legs of dimensions
``d_1, ..., d_n`` the flat index of ``(i_1, ..., i_n)`` is
``sum_k i_k * prod(d_{k+1..n})`` (zero-based).
"""
from __future__ import annotations

from itertools import product
from math import prod
from typing import Callable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .double import AlgebraElement, elem_mul, unit
from .scalars import ONE_POLY, ZERO_POLY, LaurentPoly, laurent_add, laurent_mul


def _grid(rows: int, cols: int, fill) -> List[List]:
    return [[fill for _ in range(cols)] for _ in range(rows)]


class _Matrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = len(entries)
        if rows == 0:
            raise ValueError("matrix must have at least one row")
        cols = len(entries[0])
        if cols == 0 or any(len(r) != cols for r in entries):
            raise ValueError("ragged or empty matrix rows")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(tuple(self._coerce(e) for e in row) for row in entries)

    @staticmethod
    def _coerce(e):
        return e

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def map(self, f: Callable):
        return type(self)([[f(e) for e in row] for row in self.entries])

    def transpose(self):
        return type(self)([list(col) for col in zip(*self.entries)])

    def first_difference(self, other) -> Optional[Tuple[int, int]]:
        """Row-major position of the first differing entry (or ``None``)."""
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        for i, (ra, rb) in enumerate(zip(self.entries, other.entries)):
            for j, (a, b) in enumerate(zip(ra, rb)):
                if a != b:
                    return i, j
        return None


class ScalarMatrix(_Matrix):
    """Matrix whose entries are :class:`LaurentPoly`."""

    __slots__ = ()

    @staticmethod
    def _coerce(e):
        return LaurentPoly.coerce(e)

    @classmethod
    def identity(cls, n: int) -> "ScalarMatrix":
        return cls([[ONE_POLY if i == j else ZERO_POLY for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "ScalarMatrix":
        return cls(_grid(rows, rows if cols is None else cols, ZERO_POLY))

    @classmethod
    def diag(cls, values: Sequence) -> "ScalarMatrix":
        n = len(values)
        return cls([[values[i] if i == j else ZERO_POLY for j in range(n)] for i in range(n)])

    @classmethod
    def unit_matrix(cls, n: int, i: int, j: int) -> "ScalarMatrix":
        """Matrix unit with a single 1 at zero-based ``(i, j)``."""
        m = _grid(n, n, ZERO_POLY)
        m[i][j] = ONE_POLY
        return cls(m)

    @classmethod
    def swap(cls, d: int) -> "ScalarMatrix":
        """Permutation ``P`` on ``V (x) V`` with ``P(a (x) b) = b (x) a``."""
        n = d * d
        m = _grid(n, n, ZERO_POLY)
        for a in range(d):
            for b in range(d):
                m[a * d + b][b * d + a] = ONE_POLY
        return cls(m)

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def __add__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        _same_shape(self, other)
        return ScalarMatrix(
            [[laurent_add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        _same_shape(self, other)
        return ScalarMatrix(
            [[laurent_add(a, b, -1) for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __neg__(self) -> "ScalarMatrix":
        return self.map(lambda e: -e)

    def scale(self, c) -> "ScalarMatrix":
        c = LaurentPoly.coerce(c)
        return self.map(lambda e: laurent_mul(e, c))

    def __mul__(self, c) -> "ScalarMatrix":
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, ScalarMatrix):
            return scalar_matmul(self, other)
        if isinstance(other, AlgebraValuedMatrix):
            return avm_product(AlgebraValuedMatrix.from_scalar(self), other)
        return NotImplemented

    def evaluate(self, x=None, y=None) -> "ScalarMatrix":
        return self.map(lambda e: e.evaluate(x, y))

    def rename_x_to_y(self) -> "ScalarMatrix":
        return self.map(lambda e: e.rename_x_to_y())

    def __repr__(self) -> str:
        return f"ScalarMatrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ScalarMatrix":
        m = cls([[LaurentPoly.from_json(e) for e in row] for row in data["entries"]])
        if m.shape != (data["rows"], data["cols"]):
            raise ValueError("declared shape does not match entries")
        return m


class AlgebraValuedMatrix(_Matrix):
    """Matrix with :class:`AlgebraElement` entries, an element of ``End(V) (x) D(D3)``."""

    __slots__ = ()

    @staticmethod
    def _coerce(e):
        if not isinstance(e, AlgebraElement):
            raise TypeError(f"expected AlgebraElement, got {type(e).__name__}")
        return e

    @classmethod
    def from_scalar(cls, m: ScalarMatrix) -> "AlgebraValuedMatrix":
        u = unit()
        return cls([[u.scale(e) if e else AlgebraElement() for e in row] for row in m.entries])

    @classmethod
    def identity(cls, n: int) -> "AlgebraValuedMatrix":
        return cls.from_scalar(ScalarMatrix.identity(n))

    def __add__(self, other: "AlgebraValuedMatrix") -> "AlgebraValuedMatrix":
        _same_shape(self, other)
        return AlgebraValuedMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "AlgebraValuedMatrix") -> "AlgebraValuedMatrix":
        _same_shape(self, other)
        return AlgebraValuedMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)]
        )

    def __matmul__(self, other):
        if isinstance(other, (AlgebraValuedMatrix, ScalarMatrix)):
            return avm_product(self, other)
        return NotImplemented

    def __rmatmul__(self, other):
        if isinstance(other, ScalarMatrix):
            return avm_product(other, self)
        return NotImplemented

    def evaluate(self, x=None, y=None) -> "AlgebraValuedMatrix":
        return self.map(lambda e: e.map_coefficients(lambda c: c.evaluate(x, y)))

    def rename_x_to_y(self) -> "AlgebraValuedMatrix":
        return self.map(lambda e: e.map_coefficients(LaurentPoly.rename_x_to_y))

    def __repr__(self) -> str:
        return f"AlgebraValuedMatrix({self.rows}x{self.cols})"

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "AlgebraValuedMatrix":
        m = cls([[AlgebraElement.from_json(e) for e in row] for row in data["entries"]])
        if m.shape != (data["rows"], data["cols"]):
            raise ValueError("declared shape does not match entries")
        return m


def _same_shape(a: _Matrix, b: _Matrix) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")


def scalar_matmul(a: ScalarMatrix, b: ScalarMatrix) -> ScalarMatrix:
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    bcols = [[(k, e) for k, e in enumerate(col) if e] for col in zip(*b.entries)]
    out = []
    for row in a.entries:
        nz = {k: e for k, e in enumerate(row) if e}
        new_row = []
        for col in bcols:
            acc = ZERO_POLY
            for k, e in col:
                f = nz.get(k)
                if f is not None:
                    acc = laurent_add(acc, laurent_mul(f, e))
            new_row.append(acc)
        out.append(new_row)
    return ScalarMatrix(out)


def avm_product(a, b) -> AlgebraValuedMatrix:
    """``(A (x) a)(B (x) b) = AB (x) ab``; algebra factors keep operand order.

    Either operand may be a :class:`ScalarMatrix`, read as ``M (x) unit``.
    """
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    a_scalar = isinstance(a, ScalarMatrix)
    b_scalar = isinstance(b, ScalarMatrix)
    if a_scalar and b_scalar:
        return AlgebraValuedMatrix.from_scalar(scalar_matmul(a, b))

    def mul(p, q):
        if a_scalar:
            return q.scale(p)
        if b_scalar:
            return p.scale(q)
        return elem_mul(p, q)

    bcols = [[(k, e) for k, e in enumerate(col) if e] for col in zip(*b.entries)]
    out = []
    for row in a.entries:
        nz = {k: e for k, e in enumerate(row) if e}
        new_row = []
        for col in bcols:
            acc = AlgebraElement()
            for k, e in col:
                f = nz.get(k)
                if f is not None:
                    acc = acc + mul(f, e)
            new_row.append(acc)
        out.append(new_row)
    return AlgebraValuedMatrix(out)


def kron(a: ScalarMatrix, b: ScalarMatrix) -> ScalarMatrix:
    out = _grid(a.rows * b.rows, a.cols * b.cols, ZERO_POLY)
    for i, ra in enumerate(a.entries):
        for j, x in enumerate(ra):
            if not x:
                continue
            for k, rb in enumerate(b.entries):
                for l, y in enumerate(rb):
                    if y:
                        out[i * b.rows + k][j * b.cols + l] = laurent_mul(x, y)
    return ScalarMatrix(out)


def _multi_index(flat: int, dims: Sequence[int]) -> Tuple[int, ...]:
    idx = []
    for d in reversed(dims):
        flat, r = divmod(flat, d)
        idx.append(r)
    return tuple(reversed(idx))


def _flat_index(idx: Iterable[int], dims: Sequence[int]) -> int:
    flat = 0
    for i, d in zip(idx, dims):
        flat = flat * d + i
    return flat


def embed(m: _Matrix, dims: Sequence[int], legs: Sequence[int]) -> _Matrix:
    """Act with ``m`` on the given ``legs`` of a composite space, identity elsewhere.

    ``m`` must be square of size ``prod(dims[leg] for leg in legs)``; its own
    composite index follows the order of ``legs``.
    """
    legs = tuple(legs)
    sub_dims = [dims[k] for k in legs]
    size = prod(sub_dims)
    if m.shape != (size, size):
        raise ValueError(f"matrix of shape {m.shape} does not act on legs {legs} of {tuple(dims)}")
    if isinstance(m, ScalarMatrix):
        zero, cls = ZERO_POLY, ScalarMatrix
    else:
        zero, cls = AlgebraElement(), AlgebraValuedMatrix
    others = [k for k in range(len(dims)) if k not in legs]
    n = prod(dims)
    out = _grid(n, n, zero)
    for rest in product(*(range(dims[k]) for k in others)):
        for a in range(size):
            ai = _multi_index(a, sub_dims)
            for b in range(size):
                e = m.entries[a][b]
                if not e:
                    continue
                bi = _multi_index(b, sub_dims)
                row = [0] * len(dims)
                col = [0] * len(dims)
                for k, v in zip(others, rest):
                    row[k] = col[k] = v
                for k, va, vb in zip(legs, ai, bi):
                    row[k], col[k] = va, vb
                out[_flat_index(row, dims)][_flat_index(col, dims)] = e
    return cls(out)
