"""The dihedral group D3 in canonical form ``s^r t^k`` (rotation first).

Elements are :class:`GroupElement` members, an ``IntEnum`` whose value is the
position in the canonical order ``e, s, s2, t, st, s2t`` (``value = r + 3*s``).
"""
from __future__ import annotations

from enum import IntEnum
from typing import List, Tuple


class GroupElement(IntEnum):
    E = 0
    S = 1
    S2 = 2
    T = 3
    ST = 4
    S2T = 5

    @property
    def r(self) -> int:
        """Power of the rotation sigma (0..2)."""
        return self.value % 3

    @property
    def s(self) -> int:
        """Power of the reflection tau (0..1)."""
        return self.value // 3

    @property
    def label(self) -> str:
        return _NAMES[self.value]

    def __str__(self) -> str:
        return self.label

    def __mul__(self, other):
        if isinstance(other, GroupElement):
            return group_mul(self, other)
        return NotImplemented

    def inverse(self) -> "GroupElement":
        return group_inverse(self)


_NAMES = ("e", "s", "s2", "t", "st", "s2t")
_BY_NAME = {name: GroupElement(i) for i, name in enumerate(_NAMES)}

ORDER = 6
ELEMENTS: Tuple[GroupElement, ...] = tuple(GroupElement)
IDENTITY = GroupElement.E
SIGMA = GroupElement.S
TAU = GroupElement.T


def element(r: int, s: int) -> GroupElement:
    return ELEMENTS[r % 3 + 3 * (s % 2)]


def _closed_form_mul(g: int, h: int) -> int:
    r1, s1 = g % 3, g // 3
    r2, s2 = h % 3, h // 3
    r = (r1 + (-1) ** s1 * r2) % 3
    return r + 3 * ((s1 + s2) % 2)


_MUL: List[List[GroupElement]] = [
    [ELEMENTS[_closed_form_mul(g, h)] for h in range(ORDER)] for g in range(ORDER)
]
_INV: List[GroupElement] = [
    next(h for h in ELEMENTS if _MUL[g][h] is IDENTITY) for g in range(ORDER)
]
# _CONJ[h][g] = g^-1 h g
_CONJ: List[List[GroupElement]] = [
    [_MUL[_MUL[_INV[g]][h]][g] for g in range(ORDER)] for h in range(ORDER)
]


def group_mul(g: GroupElement, h: GroupElement) -> GroupElement:
    return _MUL[g][h]


def group_inverse(g: GroupElement) -> GroupElement:
    return _INV[g]


def conjugate(h: GroupElement, g: GroupElement) -> GroupElement:
    """Return ``g^-1 h g``."""
    return _CONJ[h][g]


def power(g: GroupElement, n: int) -> GroupElement:
    if n < 0:
        g, n = _INV[g], -n
    result = IDENTITY
    for _ in range(n):
        result = _MUL[result][g]
    return result


def conjugacy_classes() -> List[frozenset]:
    classes: List[frozenset] = []
    seen = set()
    for h in ELEMENTS:
        if h in seen:
            continue
        cls = frozenset(conjugate(h, g) for g in ELEMENTS)
        seen |= cls
        classes.append(cls)
    return classes


def parse_element(name: str) -> GroupElement:
    try:
        return _BY_NAME[name.strip()]
    except KeyError:
        raise ValueError(f"unknown D3 element {name!r}; expected one of {', '.join(_NAMES)}") from None


def latex_element(g: GroupElement) -> str:
    r, s = g.r, g.s
    rot = {0: "", 1: r"\sigma", 2: r"\sigma^{-1}"}[r]
    word = rot + (r"\tau" if s else "")
    return word or "e"
