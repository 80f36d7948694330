"""The eight irreducible representations of D(D3).

Each irrep is fixed by the images of the generators sigma, tau and of the
dual elements; ``pi(g h*) = pi(s)^r pi(t)^k pi(h*)`` for ``g = s^r t^k``.
The dual images are orthogonal projectors summing to the identity, supported
on a single conjugacy class.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Mapping, Optional, Tuple

from .double import BASIS, AlgebraElement, DoubleBasis, TensorElement, basis_product, unit
from .group import ELEMENTS, GroupElement, element
from .matrices import AlgebraValuedMatrix, ScalarMatrix, kron, scalar_matmul
from .scalars import OMEGA, ONE, ZERO, CycloNum, LaurentPoly, omega_power


class IrrepLabel(Enum):
    TRIVIAL = ("1+", 1)
    SIGN = ("1-", 1)
    TWO_E = ("2e", 2)
    TWO_0 = ("20", 2)
    TWO_1 = ("21", 2)
    TWO_2 = ("22", 2)
    THREE_PLUS = ("3+", 3)
    THREE_MINUS = ("3-", 3)

    @property
    def code(self) -> str:
        return self.value[0]

    @property
    def dim(self) -> int:
        return self.value[1]

    @property
    def family(self) -> Tuple[int, str]:
        """The pair ``(a, b)`` used in the subscript ``pi_(a,b)``."""
        return int(self.code[0]), self.code[1:]

    def __str__(self) -> str:
        return self.code

    @classmethod
    def parse(cls, text: str) -> "IrrepLabel":
        t = text.strip().replace("(", "").replace(")", "").replace(",", "")
        for label in cls:
            if label.code == t:
                return label
        raise ValueError(f"unknown irrep label {text!r}; expected one of {', '.join(l.code for l in cls)}")


ALL_LABELS: Tuple[IrrepLabel, ...] = tuple(IrrepLabel)


def _sm(rows) -> ScalarMatrix:
    return ScalarMatrix([[LaurentPoly.const(c) for c in row] for row in rows])


def _proj(n: int, i: int) -> ScalarMatrix:
    return ScalarMatrix.unit_matrix(n, i, i)


@dataclass(frozen=True)
class Representation:
    """A representation given by generator and dual-element images."""

    label: IrrepLabel
    sigma: ScalarMatrix
    tau: ScalarMatrix
    duals: Mapping[GroupElement, ScalarMatrix]
    _images: Dict[DoubleBasis, ScalarMatrix] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        images: Dict[DoubleBasis, ScalarMatrix] = {}
        groups = {}
        for g in ELEMENTS:
            m = ScalarMatrix.identity(self.dim)
            for _ in range(g.r):
                m = scalar_matmul(m, self.sigma)
            if g.s:
                m = scalar_matmul(m, self.tau)
            groups[g] = m
        zero = ScalarMatrix.zeros(self.dim)
        for u in BASIS:
            d = self.duals.get(u.dual, zero)
            images[u] = scalar_matmul(groups[u.grp], d)
        object.__setattr__(self, "_images", images)

    @property
    def dim(self) -> int:
        return self.sigma.rows

    def image(self, u: DoubleBasis) -> ScalarMatrix:
        return self._images[u]

    def group_image(self, g: GroupElement) -> ScalarMatrix:
        out = ScalarMatrix.zeros(self.dim)
        for h in ELEMENTS:
            out = out + self._images[DoubleBasis(g, h)]
        return out

    def __call__(self, p: AlgebraElement) -> ScalarMatrix:
        """Image of a general algebra element (coefficients scale the matrices)."""
        n = self.dim
        acc = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
        for u, c in p.terms.items():
            m = self._images[u]
            for i in range(n):
                for j in range(n):
                    e = m.entries[i][j]
                    if e:
                        acc[i][j] = acc[i][j] + e * c
        return ScalarMatrix(acc)

    def support(self) -> frozenset:
        return frozenset(h for h, m in self.duals.items() if not m.is_zero())


def irrep(label) -> Representation:
    if isinstance(label, str):
        label = IrrepLabel.parse(label)
    if not isinstance(label, IrrepLabel):
        raise ValueError(f"unknown irrep label {label!r}")
    w, w2 = OMEGA, omega_power(2)
    s, t = GroupElement.S, GroupElement.T
    if label in (IrrepLabel.TRIVIAL, IrrepLabel.SIGN):
        sign = 1 if label is IrrepLabel.TRIVIAL else -1
        return Representation(label, _sm([[1]]), _sm([[sign]]), {GroupElement.E: _sm([[1]])})
    if label.dim == 2:
        swap = _sm([[0, 1], [1, 0]])
        if label is IrrepLabel.TWO_E:
            return Representation(
                label, _sm([[w, 0], [0, w2]]), swap, {GroupElement.E: ScalarMatrix.identity(2)}
            )
        i = int(label.code[1])
        sigma = _sm([[omega_power(i), 0], [0, omega_power(-i)]])
        duals = {GroupElement.S: _proj(2, 0), GroupElement.S2: _proj(2, 1)}
        return Representation(label, sigma, swap, duals)
    sign = 1 if label is IrrepLabel.THREE_PLUS else -1
    sigma = _sm([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    tau = _sm([[sign, 0, 0], [0, 0, sign], [0, sign, 0]])
    duals = {element(k, 1): _proj(3, k) for k in range(3)}
    return Representation(label, sigma, tau, duals)


@dataclass(frozen=True)
class HomomorphismReport:
    label: str
    failures: Tuple[Tuple[DoubleBasis, DoubleBasis], ...]
    unit_ok: bool
    pairs_checked: int

    @property
    def passed(self) -> bool:
        return self.unit_ok and not self.failures


def check_homomorphism(rep: Representation) -> HomomorphismReport:
    n = rep.dim
    zero = ScalarMatrix.zeros(n)
    failures = []
    for u in BASIS:
        pu = rep.image(u)
        for v in BASIS:
            w = basis_product(u, v)
            lhs = zero if w is None else rep.image(w)
            if lhs != scalar_matmul(pu, rep.image(v)):
                failures.append((u, v))
    unit_ok = rep(unit()) == ScalarMatrix.identity(n)
    return HomomorphismReport(rep.label.code, tuple(failures), unit_ok, len(BASIS) ** 2)


def commutant_dimension(rep: Representation) -> int:
    """Dimension of the space of matrices commuting with every image (exact)."""
    n = rep.dim
    rows: List[List[CycloNum]] = []
    # unknown X[a][b] has index a*n + b; equation (X M - M X)[i][j] = 0
    for u in BASIS:
        m = [[e.constant_term() for e in row] for row in rep.image(u).entries]
        for i in range(n):
            for j in range(n):
                eq = [ZERO] * (n * n)
                for k in range(n):
                    eq[i * n + k] = eq[i * n + k] + m[k][j]
                    eq[k * n + j] = eq[k * n + j] - m[i][k]
                if any(eq):
                    rows.append(eq)
    return n * n - _rank(rows, n * n)


def _rank(rows: List[List[CycloNum]], ncols: int) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [e * inv for e in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def apply_leg(obj, rep: Representation, leg: Optional[int] = None):
    """Replace the algebra content of one leg by its matrix image.

    * ``AlgebraValuedMatrix`` (algebra in the last slot, ``leg`` ignored or -1)
      gives a ScalarMatrix on ``V (x) W`` with the matrix leg first.
    * Arity-2 ``TensorElement`` with ``leg`` 0 or 1 gives an AlgebraValuedMatrix
      whose algebra slot holds the other leg, e.g. ``(pi (x) id) R``.
    """
    if isinstance(obj, AlgebraValuedMatrix):
        if leg not in (None, -1, 1):
            raise ValueError(f"invalid leg {leg!r} for an algebra-valued matrix")
        return _apply_to_avm(obj, rep)
    if isinstance(obj, TensorElement):
        if obj.arity != 2 or leg not in (0, 1):
            raise ValueError(f"invalid leg {leg!r} for a tensor of arity {obj.arity}")
        return _apply_to_tensor(obj, rep, leg)
    raise TypeError(f"apply_leg does not accept {type(obj).__name__}")


def _apply_to_avm(m: AlgebraValuedMatrix, rep: Representation) -> ScalarMatrix:
    w = rep.dim
    rows = []
    blocks = [[rep(e) for e in row] for row in m.entries]
    for i in range(m.rows):
        for p in range(w):
            rows.append([blocks[i][j].entries[p][q] for j in range(m.cols) for q in range(w)])
    return ScalarMatrix(rows)


def _apply_to_tensor(t: TensorElement, rep: Representation, leg: int) -> AlgebraValuedMatrix:
    n = rep.dim
    acc = [[AlgebraElement() for _ in range(n)] for _ in range(n)]
    for key, c in t.terms.items():
        m = rep.image(key[leg])
        other = key[1 - leg]
        for i in range(n):
            for j in range(n):
                e = m.entries[i][j]
                if e:
                    acc[i][j] = acc[i][j] + AlgebraElement({other: e * c})
    return AlgebraValuedMatrix(acc)


def apply_both_legs(t: TensorElement, left: Representation, right: Representation) -> ScalarMatrix:
    """``(pi_left (x) pi_right) t`` on ``V_left (x) V_right``."""
    if t.arity != 2:
        raise ValueError("apply_both_legs expects arity 2")
    out = ScalarMatrix.zeros(left.dim * right.dim)
    for (u, v), c in t.terms.items():
        out = out + kron(left.image(u), right.image(v)).scale(c)
    return out
