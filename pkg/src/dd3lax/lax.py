"""Parametric R-matrices, the two universal Lax operators and their relation checkers.

Single-symbol objects carry their spectral parameter in the ``x`` slot of
:class:`~dd3lax.scalars.LaurentPoly`.  Checkers rename one copy to ``y`` and
replace ``z`` by ``x/y`` through exponent transport, so every relation is an
exact Laurent-polynomial identity.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from . import group as G
from .double import AlgebraElement, casimir, dual, elem_mul, embed_group, universal_R
from .matrices import AlgebraValuedMatrix, ScalarMatrix, embed
from .report import RelationReport, compare
from .reps import IrrepLabel, apply_leg, irrep
from .scalars import (
    OMEGA,
    ONE_POLY,
    ZERO_POLY,
    LaurentPoly,
    X,
    laurent_substitute_ratio,
    omega_power,
)

Matrix = Union[ScalarMatrix, AlgebraValuedMatrix]

_W = LaurentPoly.const(OMEGA)
_W_INV = LaurentPoly.const(omega_power(2))


def _sig(k: int) -> G.GroupElement:
    return G.element(k, 0)


def _ref(k: int) -> G.GroupElement:
    """The reflection ``s^k t``."""
    return G.element(k, 1)


# -- R-matrices -----------------------------------------------------------

def r_matrix_2() -> ScalarMatrix:
    """The 4x4 R-matrix on ``V_(2,1) (x) V_(2,1)`` (six-vertex type at a cube root of unity)."""
    x2 = X * X
    a = _W - x2
    b = -(_W_INV * (x2 - 1))
    c = X * (_W - 1)
    z = ZERO_POLY
    return ScalarMatrix([
        [a, z, z, z],
        [z, b, c, z],
        [z, c, b, z],
        [z, z, z, a],
    ])


def r_matrix_3() -> ScalarMatrix:
    """The 9x9 R-matrix on ``V_(3,+) (x) V_(3,+)``."""
    d = X * X - X + 1
    q = X * (X - 1)
    x = X
    m = 1 - X
    o = ZERO_POLY
    return ScalarMatrix([
        [d, o, o, o, o, o, o, o, o],
        [o, o, q, x, o, o, o, m, o],
        [o, q, o, o, o, m, x, o, o],
        [o, x, o, o, o, q, m, o, o],
        [o, o, o, o, d, o, o, o, o],
        [o, o, m, q, o, o, o, x, o],
        [o, o, x, m, o, o, o, q, o],
        [o, m, o, o, o, x, q, o, o],
        [o, o, o, o, o, o, o, o, d],
    ])


R_MATRICES = {"R21": r_matrix_2, "R3p": r_matrix_3}


# -- universal Lax operators ---------------------------------------------

def universal_lax_2(casimir_choice: int = 1) -> AlgebraValuedMatrix:
    """2x2 universal Lax operator in ``End(V_(2,1)) (x) D(D3)``.

    ``casimir_choice`` swaps the central element used in the entries; the
    operator as published uses c1.
    """
    c = casimir(casimir_choice)
    c_sq = elem_mul(c, c)
    s, s_inv = embed_group(_sig(1)), embed_group(_sig(2))
    third = (_W - 1) * X * Fraction(1, 3)
    e11 = e12 = e21 = e22 = AlgebraElement()
    for j in range(3):
        wj = LaurentPoly.const(omega_power(j))
        e11 = (
            e11
            + (s_inv * dual(_ref(j))).scale(_W * X)
            + dual(_sig(j)).scale(wj)
            - (c_sq * s_inv * dual(_sig(j))).scale(_W * X * X)
        )
        e12 = (
            e12
            + dual(_ref(j)).scale(wj)
            + (c * embed_group(_ref(j)) * dual(_sig(1))).scale(third * wj)
        )
        e21 = (
            e21
            + dual(_ref(-j)).scale(wj)
            + (c * embed_group(_ref(-j)) * dual(_sig(2))).scale(third * wj)
        )
        e22 = (
            e22
            + (s * dual(_ref(j))).scale(_W * X)
            + dual(_sig(-j)).scale(wj)
            - (c_sq * s * dual(_sig(-j))).scale(_W * X * X)
        )
    return AlgebraValuedMatrix([[e11, e12], [e21, e22]])


def _lax3_summation(c: AlgebraElement) -> AlgebraValuedMatrix:
    one_minus = 1 - X
    quad = X * (X - 1)
    rows = []
    for i in (1, 2, 3):
        row = []
        for j in (1, 2, 3):
            e = (dual(_sig(j - i)) + dual(_ref(2 - (i + j)))).scale(one_minus)
            if i == j:
                e = e + (c * embed_group(_ref(i - 1))).scale(quad)
            e = e + (embed_group(_sig(i - j)) * dual(_ref(i - 1))).scale(X)
            row.append(e)
        rows.append(row)
    return AlgebraValuedMatrix(rows)


def _lax3_matrix_display(c: AlgebraElement) -> AlgebraValuedMatrix:
    """The 3x3 display entry by entry; ``c`` occupies the slots printed as c2."""
    one_minus = 1 - X
    quad = X * (X - 1)
    e, s, s2 = _sig(0), _sig(1), _sig(2)
    t, st, s2t = _ref(0), _ref(1), _ref(2)

    def bracket(a, b):
        return (dual(a) + dual(b)).scale(one_minus)

    def shifted(g, h):
        return (embed_group(g) * dual(h)).scale(X)

    def diag(h):
        return (c * embed_group(h)).scale(quad) + dual(h).scale(X)

    return AlgebraValuedMatrix([
        [bracket(e, t) + diag(t), bracket(s, s2t) + shifted(s2, t), bracket(s2, st) + shifted(s, t)],
        [bracket(s2, s2t) + shifted(s, st), bracket(e, st) + diag(st), bracket(s, t) + shifted(s2, st)],
        [bracket(s, st) + shifted(s2, s2t), bracket(s2, t) + shifted(s, s2t), bracket(e, s2t) + diag(s2t)],
    ])


def universal_lax_3(casimir_choice: int = 2, source: str = "matrix") -> AlgebraValuedMatrix:
    """3x3 universal Lax operator in ``End(V_(3,+)) (x) D(D3)``.

    ``source="summation"`` builds the index formula with ``i, j in {1, 2, 3}``
    and sigma exponents taken mod 3; ``source="matrix"`` builds the explicit
    display.  Either way the chosen Casimir fills the central slot.
    """
    c = casimir(casimir_choice)
    if source == "summation":
        return _lax3_summation(c)
    if source == "matrix":
        return _lax3_matrix_display(c)
    raise ValueError(f"source must be 'summation' or 'matrix', not {source!r}")


# -- embeddings -------------------------------------------------------------

def lax_embed(L: AlgebraValuedMatrix, placement: int, other_dim: int) -> AlgebraValuedMatrix:
    """Place ``L`` on matrix leg 1 (placement 13) or 2 (placement 23) of ``V (x) V'``."""
    d = L.rows
    if placement == 13:
        return embed(L, [d, other_dim], (0,))
    if placement == 23:
        return embed(L, [other_dim, d], (1,))
    raise ValueError(f"placement must be 13 or 23, not {placement!r}")


def _check_square(m: Matrix, name: str) -> int:
    if m.rows != m.cols:
        raise ValueError(f"{name} must be square, got {m.shape}")
    return m.rows


def _isqrt_exact(n: int, name: str) -> int:
    d = int(round(n ** 0.5))
    if d * d != n:
        raise ValueError(f"{name} of size {n} is not on V (x) V")
    return d


def _ratio(R: ScalarMatrix) -> ScalarMatrix:
    return R.map(laurent_substitute_ratio)


# -- relation checkers --------------------------------------------------------

def ybe_sides(R: ScalarMatrix) -> Tuple[ScalarMatrix, ScalarMatrix]:
    d = _isqrt_exact(_check_square(R, "R"), "R")
    dims = [d, d, d]
    r12 = embed(_ratio(R), dims, (0, 1))
    r13 = embed(R, dims, (0, 2))
    r23 = embed(R.rename_x_to_y(), dims, (1, 2))
    return r12 @ r13 @ r23, r23 @ r13 @ r12


def check_parametric_ybe(R: ScalarMatrix, name: str = "R") -> RelationReport:
    lhs, rhs = ybe_sides(R)
    return compare(f"ybe-parametric:{name}", lhs, rhs)


def universal_lax_sides(R: ScalarMatrix, L: AlgebraValuedMatrix):
    d = _check_square(L, "L")
    if R.shape != (d * d, d * d):
        raise ValueError(f"R of shape {R.shape} does not match a {d}x{d} Lax operator")
    r12 = _ratio(R)
    l13 = lax_embed(L, 13, d)
    l23 = lax_embed(L.rename_x_to_y(), 23, d)
    return r12 @ l13 @ l23, l23 @ l13 @ r12


def check_universal_lax(R: ScalarMatrix, L: AlgebraValuedMatrix, name: str = "L") -> RelationReport:
    lhs, rhs = universal_lax_sides(R, L)
    return compare(f"lax-universal:{name}", lhs, rhs)


def rll_sides(R: ScalarMatrix, L: ScalarMatrix, rep_dim: int):
    d = _isqrt_exact(_check_square(R, "R"), "R")
    if L.shape != (d * rep_dim, d * rep_dim):
        raise ValueError(f"L of shape {L.shape} does not act on V (x) W with dims {d}, {rep_dim}")
    dims = [d, d, rep_dim]
    r12 = embed(_ratio(R), dims, (0, 1))
    l13 = embed(L, dims, (0, 2))
    l23 = embed(L.rename_x_to_y(), dims, (1, 2))
    return r12 @ l13 @ l23, l23 @ l13 @ r12


def check_rll(R: ScalarMatrix, L: ScalarMatrix, rep_dim: int, name: str = "L") -> RelationReport:
    lhs, rhs = rll_sides(R, L, rep_dim)
    return compare(f"rll:{name}", lhs, rhs)


# -- limits -----------------------------------------------------------------

def _limit_poly(p: LaurentPoly, slot: int) -> LaurentPoly:
    out = {}
    for key, c in p.terms.items():
        if key[slot] < 0:
            raise ValueError("limit at zero is undefined: negative exponent present")
        if key[slot] == 0:
            out[key] = c
    return LaurentPoly(out)


def limit_at_zero(M, slot: int = 0):
    """Limit as the spectral parameter goes to zero (drops positive powers)."""
    if isinstance(M, LaurentPoly):
        return _limit_poly(M, slot)
    if isinstance(M, AlgebraElement):
        return M.map_coefficients(lambda c: _limit_poly(c, slot))
    if isinstance(M, ScalarMatrix):
        return M.map(lambda c: _limit_poly(c, slot))
    if isinstance(M, AlgebraValuedMatrix):
        return M.map(lambda e: e.map_coefficients(lambda c: _limit_poly(c, slot)))
    raise TypeError(f"limit_at_zero does not accept {type(M).__name__}")


def constant_lax(label) -> AlgebraValuedMatrix:
    """``(pi (x) id) R`` for the universal R-matrix."""
    return apply_leg(universal_R(), irrep(label), 0)


# -- golden derived-L tables --------------------------------------------------

def _const_sm(rows) -> ScalarMatrix:
    return ScalarMatrix([[LaurentPoly.coerce(e) for e in row] for row in rows])


def golden_L_tables() -> List[Tuple[str, str, ScalarMatrix]]:
    """Printed matrices ``(id (x) pi) L(x)`` as ``(lax, label, matrix)`` triples."""
    w, wi = _W, _W_INV
    x = X
    o = ZERO_POLY
    tables: List[Tuple[str, str, ScalarMatrix]] = []

    tables.append(("L2", "2e", ScalarMatrix.identity(4)))
    tables.append(("L2", "20", ScalarMatrix.diag([w, wi, wi, w])))
    tables.append(("L2", "21", r_matrix_2()))
    a, b = w - wi * x * x, wi - x * x
    tables.append(("L2", "22", ScalarMatrix.diag([a, b, b, a])))
    wx = w * x
    l3 = _const_sm([
        [o, o, wx, 1, o, o],
        [wx, o, o, o, w, o],
        [o, wx, o, o, o, wi],
        [1, o, o, o, wx, o],
        [o, wi, o, o, o, wx],
        [o, o, w, wx, o, o],
    ])
    tables.append(("L2", "3+", l3))
    tables.append(("L2", "3-", l3))

    tables.append(("L3", "3+", r_matrix_3()))
    tables.append(("L3", "3-", r_matrix_3()))
    tables.append(("L3", "2e", ScalarMatrix.identity(6).scale(1 - x)))
    for j in range(3):
        k = 0 if j == 0 else 1
        p = x * k * LaurentPoly.const(omega_power(j))
        m = x * k * LaurentPoly.const(omega_power(-j))
        base = x * k
        mat = _const_sm([
            [o, base, 1, o, o, o],
            [base, o, o, o, o, 1],
            [o, o, o, p, 1, o],
            [o, 1, m, o, o, o],
            [1, o, o, o, o, m],
            [o, o, o, 1, p, o],
        ])
        tables.append(("L3", f"2{j}", mat.scale(1 - x)))
    return tables


LAX_OPERATORS = {
    "L2": (universal_lax_2, r_matrix_2, IrrepLabel.TWO_1),
    "L3": (universal_lax_3, r_matrix_3, IrrepLabel.THREE_PLUS),
}


def derived_L(lax: str, label) -> ScalarMatrix:
    build = LAX_OPERATORS[lax][0]
    return apply_leg(build(), irrep(label))
