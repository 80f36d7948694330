"""The Drinfeld double D(D3): a 36-dimensional quasi-triangular Hopf algebra.

A basis element ``g h*`` is stored as :class:`DoubleBasis` ``(grp=g, dual=h)``.
The group-like element ``g`` is the sum over ``h`` of ``g h*`` and the unit
is ``sum_h h*``.  Products follow the closed form

    (g h*)(k l*) = delta(l, k^-1 h k) (gk) l*

which comes from sliding ``h*`` past ``k`` with ``h* k = k (k^-1 h k)*``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple

from . import group as grp_mod
from .group import ELEMENTS, IDENTITY, GroupElement, conjugate, group_inverse, group_mul
from .scalars import ONE_POLY, ZERO_POLY, Coefficient, LaurentPoly, laurent_add, laurent_mul


class DoubleBasis(NamedTuple):
    grp: GroupElement
    dual: GroupElement

    @property
    def index(self) -> int:
        return 6 * self.grp + self.dual

    def __str__(self) -> str:
        return f"{self.grp.label}.{self.dual.label}*"


BASIS: Tuple[DoubleBasis, ...] = tuple(DoubleBasis(g, h) for g in ELEMENTS for h in ELEMENTS)
_B = [[BASIS[6 * g + h] for h in range(6)] for g in range(6)]


def basis(g: GroupElement, h: GroupElement) -> DoubleBasis:
    return _B[g][h]


def _closed_form_basis_mul(u: DoubleBasis, v: DoubleBasis) -> Optional[DoubleBasis]:
    g, h = u
    k, l = v
    if l != conjugate(h, k):
        return None
    return _B[group_mul(g, k)][l]


_BASIS_MUL: List[List[Optional[DoubleBasis]]] = [
    [_closed_form_basis_mul(u, v) for v in BASIS] for u in BASIS
]


def basis_product(u: DoubleBasis, v: DoubleBasis) -> Optional[DoubleBasis]:
    """Product of two basis elements as a basis element, or ``None`` when it vanishes."""
    return _BASIS_MUL[u.index][v.index]


class AlgebraElement:
    """Finite linear combination of basis elements with LaurentPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[DoubleBasis, Coefficient] = None):
        clean: Dict[DoubleBasis, LaurentPoly] = {}
        if terms:
            for key, c in terms.items():
                c = LaurentPoly.coerce(c)
                if c:
                    clean[_B[key[0]][key[1]]] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: Dict[DoubleBasis, LaurentPoly]) -> "AlgebraElement":
        a = cls.__new__(cls)
        a.terms = terms
        return a

    @classmethod
    def from_basis(cls, u: DoubleBasis, c: Coefficient = 1) -> "AlgebraElement":
        return cls({u: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, u: DoubleBasis) -> LaurentPoly:
        return self.terms.get(u, ZERO_POLY)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._raw({k: -c for k, c in self.terms.items()})

    def __add__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return _add_terms(self, other, 1)

    def __sub__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return _add_terms(self, other, -1)

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return elem_mul(self, other)
        if isinstance(other, (int, Fraction, LaurentPoly)) or hasattr(other, "conj"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "AlgebraElement":
        # scalars commute with everything
        return self.scale(other)

    def __pow__(self, n: int) -> "AlgebraElement":
        result = unit()
        for _ in range(n):
            result = elem_mul(result, self)
        return result

    def scale(self, c) -> "AlgebraElement":
        c = LaurentPoly.coerce(c)
        if not c:
            return AlgebraElement()
        out = {}
        for k, v in self.terms.items():
            w = laurent_mul(v, c)
            if w:
                out[k] = w
        return AlgebraElement._raw(out)

    def map_coefficients(self, f: Callable[[LaurentPoly], LaurentPoly]) -> "AlgebraElement":
        return AlgebraElement({k: f(v) for k, v in self.terms.items()})

    def sorted_terms(self) -> Iterator[Tuple[DoubleBasis, LaurentPoly]]:
        for key in sorted(self.terms):
            yield key, self.terms[key]

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{u}" for u, c in self.sorted_terms())

    def to_json(self) -> list:
        return [
            {"g": u.grp.label, "h": u.dual.label, "coeff": c.to_json()}
            for u, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "AlgebraElement":
        terms: Dict[DoubleBasis, LaurentPoly] = {}
        for item in data:
            u = basis(grp_mod.parse_element(item["g"]), grp_mod.parse_element(item["h"]))
            if u in terms:
                raise ValueError(f"duplicate basis element {u}")
            terms[u] = LaurentPoly.from_json(item["coeff"])
        return cls(terms)


def _add_terms(p: AlgebraElement, q: AlgebraElement, sign: int) -> AlgebraElement:
    out = dict(p.terms)
    for k, c in q.terms.items():
        if k in out:
            s = laurent_add(out[k], c, sign)
            if s:
                out[k] = s
            else:
                del out[k]
        else:
            out[k] = c if sign > 0 else -c
    return AlgebraElement._raw(out)


def basis_mul(u: DoubleBasis, v: DoubleBasis) -> AlgebraElement:
    w = basis_product(u, v)
    return AlgebraElement() if w is None else AlgebraElement._raw({w: ONE_POLY})


def elem_mul(p: AlgebraElement, q: AlgebraElement) -> AlgebraElement:
    if not p.terms or not q.terms:
        return AlgebraElement()
    qt = q.terms
    out: Dict[DoubleBasis, LaurentPoly] = {}
    for (g, h), c in p.terms.items():
        for k in ELEMENTS:
            l = conjugate(h, k)
            d = qt.get(_B[k][l])
            if d is None:
                continue
            key = _B[group_mul(g, k)][l]
            prod = laurent_mul(c, d)
            out[key] = laurent_add(out[key], prod) if key in out else prod
    return AlgebraElement._raw({k: v for k, v in out.items() if v})


def unit() -> AlgebraElement:
    return AlgebraElement._raw({_B[IDENTITY][h]: ONE_POLY for h in ELEMENTS})


def embed_group(g: GroupElement) -> AlgebraElement:
    return AlgebraElement._raw({_B[g][h]: ONE_POLY for h in ELEMENTS})


def dual(h: GroupElement) -> AlgebraElement:
    """The pure dual element ``h*`` (identified with ``e h*``)."""
    return AlgebraElement._raw({_B[IDENTITY][h]: ONE_POLY})


def scalar(c: Coefficient) -> AlgebraElement:
    return unit().scale(c)


def counit(u: DoubleBasis) -> LaurentPoly:
    return ONE_POLY if u.dual == IDENTITY else ZERO_POLY


def counit_element(p: AlgebraElement) -> LaurentPoly:
    total = ZERO_POLY
    for u, c in p.terms.items():
        if u.dual == IDENTITY:
            total = total + c
    return total


def antipode(u: DoubleBasis) -> DoubleBasis:
    g, h = u
    g_inv = group_inverse(g)
    return _B[g_inv][group_mul(group_mul(g, group_inverse(h)), g_inv)]


def antipode_element(p: AlgebraElement) -> AlgebraElement:
    return AlgebraElement({antipode(u): c for u, c in p.terms.items()})


class TensorElement:
    """Element of the 2- or 3-fold tensor power, stored flat by basis tuples."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Tuple[DoubleBasis, ...], Coefficient] = None):
        if arity not in (2, 3):
            raise ValueError(f"unsupported tensor arity {arity}")
        clean: Dict[Tuple[DoubleBasis, ...], LaurentPoly] = {}
        if terms:
            for key, c in terms.items():
                if len(key) != arity:
                    raise ValueError(f"tuple {key} does not have length {arity}")
                c = LaurentPoly.coerce(c)
                if c:
                    clean[tuple(_B[u[0]][u[1]] for u in key)] = c
        self.arity = arity
        self.terms = clean

    @classmethod
    def _raw(cls, arity: int, terms: Dict[Tuple[DoubleBasis, ...], LaurentPoly]) -> "TensorElement":
        t = cls.__new__(cls)
        t.arity = arity
        t.terms = terms
        return t

    @classmethod
    def from_elements(cls, *legs: AlgebraElement) -> "TensorElement":
        """Simple tensor ``legs[0] (x) legs[1] (x) ...``."""
        out: Dict[Tuple[DoubleBasis, ...], LaurentPoly] = {}
        for combo in product(*(leg.terms.items() for leg in legs)):
            key = tuple(u for u, _ in combo)
            c = ONE_POLY
            for _, v in combo:
                c = laurent_mul(c, v)
            if c:
                out[key] = laurent_add(out[key], c) if key in out else c
        return cls(len(legs), out)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, key: Tuple[DoubleBasis, ...]) -> LaurentPoly:
        return self.terms.get(tuple(key), ZERO_POLY)

    def __eq__(self, other) -> bool:
        if isinstance(other, TensorElement):
            return self.arity == other.arity and self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self.terms.items())))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        _check_arity(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = laurent_add(out[k], c) if k in out else c
        return TensorElement._raw(self.arity, {k: v for k, v in out.items() if v})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        _check_arity(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = laurent_add(out[k], c, -1) if k in out else -c
        return TensorElement._raw(self.arity, {k: v for k, v in out.items() if v})

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        return NotImplemented

    def sorted_terms(self):
        for key in sorted(self.terms):
            yield key, self.terms[key]

    def __repr__(self) -> str:
        return f"TensorElement(arity={self.arity}, {len(self.terms)} terms)"

    def to_json(self) -> list:
        return [
            {
                "legs": [{"g": u.grp.label, "h": u.dual.label} for u in key],
                "coeff": c.to_json(),
            }
            for key, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "TensorElement":
        terms: Dict[Tuple[DoubleBasis, ...], LaurentPoly] = {}
        arity = None
        for item in data:
            key = tuple(
                basis(grp_mod.parse_element(leg["g"]), grp_mod.parse_element(leg["h"]))
                for leg in item["legs"]
            )
            if arity is None:
                arity = len(key)
            terms[key] = LaurentPoly.from_json(item["coeff"])
        return cls(arity or 2, terms)


def _check_arity(p: TensorElement, q: TensorElement) -> None:
    if p.arity != q.arity:
        raise ValueError(f"tensor arity mismatch: {p.arity} vs {q.arity}")


def tensor_mul(p: TensorElement, q: TensorElement) -> TensorElement:
    """Legwise product ``(a (x) b)(c (x) d) = ac (x) bd``."""
    _check_arity(p, q)
    # index q by the group parts of its legs; the dual parts are then forced
    by_groups: Dict[Tuple[GroupElement, ...], List[Tuple[Tuple[DoubleBasis, ...], LaurentPoly]]] = {}
    for key, c in q.terms.items():
        by_groups.setdefault(tuple(u.grp for u in key), []).append((key, c))
    qt = q.terms
    out: Dict[Tuple[DoubleBasis, ...], LaurentPoly] = {}
    for pkey, c in p.terms.items():
        for gkey in by_groups:
            qkey = tuple(_B[k][conjugate(u.dual, k)] for u, k in zip(pkey, gkey))
            d = qt.get(qkey)
            if d is None:
                continue
            key = tuple(_B[group_mul(u.grp, v.grp)][v.dual] for u, v in zip(pkey, qkey))
            prod = laurent_mul(c, d)
            out[key] = laurent_add(out[key], prod) if key in out else prod
    return TensorElement._raw(p.arity, {k: v for k, v in out.items() if v})


def multiply_legs(t: TensorElement) -> AlgebraElement:
    """The multiplication map ``a (x) b -> ab`` on an arity-2 tensor."""
    if t.arity != 2:
        raise ValueError("multiply_legs expects arity 2")
    out = AlgebraElement()
    for (u, v), c in t.terms.items():
        w = basis_product(u, v)
        if w is not None:
            out = out + AlgebraElement._raw({w: c})
    return out


def coproduct(u: DoubleBasis) -> TensorElement:
    """``Delta(g h*) = sum_k g (k^-1 h)* (x) g k*``."""
    g, h = u
    return TensorElement._raw(
        2, {(_B[g][group_mul(group_inverse(k), h)], _B[g][k]): ONE_POLY for k in ELEMENTS}
    )


def coproduct_opposite(u: DoubleBasis) -> TensorElement:
    return flip(coproduct(u))


def flip(t: TensorElement) -> TensorElement:
    if t.arity != 2:
        raise ValueError("flip expects arity 2")
    return TensorElement._raw(2, {(b, a): c for (a, b), c in t.terms.items()})


def coproduct_element(p: AlgebraElement, opposite: bool = False) -> TensorElement:
    f = coproduct_opposite if opposite else coproduct
    out: Dict[Tuple[DoubleBasis, ...], LaurentPoly] = {}
    for u, c in p.terms.items():
        for key in f(u).terms:
            out[key] = laurent_add(out[key], c) if key in out else c
    return TensorElement._raw(2, {k: v for k, v in out.items() if v})


def map_leg(
    t: TensorElement, leg: int, f: Callable[[DoubleBasis], TensorElement]
) -> TensorElement:
    """Apply a linear map sending one basis element to an arity-2 tensor on ``leg``.

    The arity grows by one; the image's two legs take positions ``leg, leg+1``.
    """
    if not 0 <= leg < t.arity:
        raise ValueError(f"invalid leg {leg} for arity {t.arity}")
    out: Dict[Tuple[DoubleBasis, ...], LaurentPoly] = {}
    for key, c in t.terms.items():
        for pair, d in f(key[leg]).terms.items():
            new = key[:leg] + pair + key[leg + 1:]
            prod = laurent_mul(c, d)
            out[new] = laurent_add(out[new], prod) if new in out else prod
    return TensorElement(t.arity + 1, out)


def apply_counit(t: TensorElement, leg: int) -> Optional[object]:
    """Apply the counit on one leg, returning an AlgebraElement or arity-2 tensor."""
    if not 0 <= leg < t.arity:
        raise ValueError(f"invalid leg {leg} for arity {t.arity}")
    out: Dict[Tuple[DoubleBasis, ...], LaurentPoly] = {}
    for key, c in t.terms.items():
        if key[leg].dual != IDENTITY:
            continue
        rest = key[:leg] + key[leg + 1:]
        out[rest] = laurent_add(out[rest], c) if rest in out else c
    out = {k: v for k, v in out.items() if v}
    if t.arity == 2:
        return AlgebraElement._raw({k[0]: v for k, v in out.items()})
    return TensorElement._raw(t.arity - 1, out)


def apply_antipode(t: TensorElement, leg: int) -> TensorElement:
    return TensorElement(
        t.arity,
        {key[:leg] + (antipode(key[leg]),) + key[leg + 1:]: c for key, c in t.terms.items()},
    )


def universal_R() -> TensorElement:
    """``R = sum_g g (x) g*``, expanded into 36 basis tuples ``(g h*, g*)``."""
    return TensorElement._raw(
        2, {(_B[g][h], _B[IDENTITY][g]): ONE_POLY for g in ELEMENTS for h in ELEMENTS}
    )


def universal_R_inverse() -> TensorElement:
    return apply_antipode(universal_R(), 0)


_PLACEMENTS = {12: (0, 1), 13: (0, 2), 23: (1, 2)}


def embed_leg(p: TensorElement, placement: int) -> TensorElement:
    """Place an arity-2 tensor on legs 12, 13 or 23 of the triple tensor power."""
    if p.arity != 2:
        raise ValueError("embed_leg expects an arity-2 tensor")
    try:
        i, j = _PLACEMENTS[placement]
    except KeyError:
        raise ValueError(f"placement must be one of 12, 13, 23, not {placement!r}") from None
    free = 3 - i - j
    out: Dict[Tuple[DoubleBasis, ...], LaurentPoly] = {}
    for (a, b), c in p.terms.items():
        for h in ELEMENTS:
            key = [None, None, None]
            key[i], key[j], key[free] = a, b, _B[IDENTITY][h]
            out[tuple(key)] = c
    return TensorElement._raw(3, out)


def casimir(which: int) -> AlgebraElement:
    """The central elements c1 and c2."""
    s = embed_group(grp_mod.SIGMA)
    s_inv = embed_group(grp_mod.power(grp_mod.SIGMA, -1))
    rotation_part = unit().scale(2) - s - s_inv
    dual_part = dual(grp_mod.SIGMA) + dual(grp_mod.power(grp_mod.SIGMA, 2))
    c1 = elem_mul(rotation_part, dual_part).scale(Fraction(1, 3))
    if which == 1:
        return c1
    if which == 2:
        return c1 + reflection_class_sum()
    raise ValueError(f"casimir index must be 1 or 2, not {which!r}")


def reflection_class_sum() -> AlgebraElement:
    """``sum_k (s^k t)(s^k t)*``."""
    terms = {}
    for k in range(3):
        r = grp_mod.element(k, 1)
        terms[_B[r][r]] = ONE_POLY
    return AlgebraElement._raw(terms)
