"""Exact scalars: rationals, the cyclotomic field Q(w) and bivariate Laurent polynomials.

``w`` is a primitive cube root of unity.  Field elements are stored in the
basis ``{1, w}`` and reduced with ``w**2 = -1 - w``, so equality is decidable.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Rational = Fraction
Exponent = Tuple[int, int]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a reduced :class:`Fraction`."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


class CycloNum:
    """An element ``a + b*w`` of Q(w)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = a if isinstance(a, Fraction) else Fraction(a)
        self.b = b if isinstance(b, Fraction) else Fraction(b)

    @classmethod
    def coerce(cls, value) -> "CycloNum":
        if isinstance(value, CycloNum):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise TypeError(f"cannot coerce {type(value).__name__} to CycloNum")

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return not self.b

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __neg__(self) -> "CycloNum":
        return CycloNum(-self.a, -self.b)

    def __add__(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            return CycloNum(self.a + other.a, self.b + other.b)
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            return CycloNum(self.a - other.a, self.b - other.b)
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other) -> "CycloNum":
        return (-self) + other

    def __mul__(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            return cyclo_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CycloNum":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of CycloNum by zero")
            return CycloNum(self.a / other, self.b / other)
        return cyclo_mul(self, cyclo_inverse(CycloNum.coerce(other)))

    def __rtruediv__(self, other) -> "CycloNum":
        return cyclo_mul(CycloNum.coerce(other), cyclo_inverse(self))

    def __pow__(self, n: int) -> "CycloNum":
        if n < 0:
            return cyclo_inverse(self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = cyclo_mul(result, base)
            base = cyclo_mul(base, base)
            n >>= 1
        return result

    def conj(self) -> "CycloNum":
        """Complex conjugate, i.e. the automorphism ``w -> w**2``."""
        # a + b w^2 = a + b(-1 - w)
        return CycloNum(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def to_complex(self) -> complex:
        return complex(float(self.a) - float(self.b) / 2, float(self.b) * 3 ** 0.5 / 2)

    def __repr__(self) -> str:
        return f"CycloNum({self.a}, {self.b})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return _scaled_symbol(self.b, "w")
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {_scaled_symbol(abs(self.b), 'w')}"

    def to_json(self) -> dict:
        return {"a": format_rational(self.a), "b": format_rational(self.b)}

    @classmethod
    def from_json(cls, data: Mapping) -> "CycloNum":
        return cls(parse_rational(data["a"]), parse_rational(data["b"]))


def _scaled_symbol(c: Fraction, sym: str) -> str:
    if c == 1:
        return sym
    if c == -1:
        return "-" + sym
    return f"{c}{sym}" if c.denominator == 1 else f"({c}){sym}"


def cyclo_mul(p: CycloNum, q: CycloNum) -> CycloNum:
    # (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2,  w^2 = -1 - w
    a, b, c, d = p.a, p.b, q.a, q.b
    if not b and not d:
        return CycloNum(a * c, _ZERO)
    bd = b * d
    return CycloNum(a * c - bd, a * d + b * c - bd)


def cyclo_inverse(p: CycloNum) -> CycloNum:
    n = p.norm()
    if not n:
        raise ZeroDivisionError("inverse of zero in Q(w)")
    c = p.conj()
    return CycloNum(c.a / n, c.b / n)


ZERO = CycloNum(0, 0)
ONE = CycloNum(1, 0)
OMEGA = CycloNum(0, 1)
OMEGA2 = CycloNum(-1, -1)


def omega_power(k: int) -> CycloNum:
    return (ONE, OMEGA, OMEGA2)[k % 3]


Coefficient = Union[CycloNum, int, Fraction]


class LaurentPoly:
    """Sparse Laurent polynomial in ``x`` and ``y`` with coefficients in Q(w).

    ``terms`` maps exponent pairs ``(ex, ey)`` to nonzero :class:`CycloNum`.
    Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, Coefficient] = None):
        clean: Dict[Exponent, CycloNum] = {}
        if terms:
            for key, c in terms.items():
                c = CycloNum.coerce(c)
                if c:
                    clean[(int(key[0]), int(key[1]))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Exponent, CycloNum]) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c: Coefficient) -> "LaurentPoly":
        c = CycloNum.coerce(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, ex: int = 0, ey: int = 0, c: Coefficient = 1) -> "LaurentPoly":
        c = CycloNum.coerce(c)
        return cls._raw({(ex, ey): c} if c else {})

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        return cls.const(value)

    # -- queries -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_term(self) -> CycloNum:
        return self.terms.get((0, 0), ZERO)

    def coefficient(self, ex: int, ey: int = 0) -> CycloNum:
        return self.terms.get((ex, ey), ZERO)

    def sorted_terms(self) -> Iterator[Tuple[Exponent, CycloNum]]:
        for key in sorted(self.terms):
            yield key, self.terms[key]

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.terms == LaurentPoly.const(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- ring operations ---------------------------------------------------
    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -c for k, c in self.terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            if not isinstance(other, (int, Fraction, CycloNum)):
                return NotImplemented
            other = LaurentPoly.const(other)
        return laurent_add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            if not isinstance(other, (int, Fraction, CycloNum)):
                return NotImplemented
            other = LaurentPoly.const(other)
        return laurent_add(self, other, -1)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return laurent_mul(self, other)
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction, CycloNum)):
            return self.scale(1 / CycloNum.coerce(other))
        if isinstance(other, LaurentPoly) and len(other.terms) == 1:
            (ex, ey), c = next(iter(other.terms.items()))
            return self * LaurentPoly.monomial(-ex, -ey, cyclo_inverse(c))
        raise TypeError("only division by a scalar or a monomial is exact")

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (ex, ey), c = next(iter(self.terms.items()))
            return LaurentPoly.monomial(ex * n, ey * n, cyclo_inverse(c) ** -n)
        result, base = ONE_POLY, self
        while n:
            if n & 1:
                result = laurent_mul(result, base)
            base = laurent_mul(base, base)
            n >>= 1
        return result

    def scale(self, c: Coefficient) -> "LaurentPoly":
        c = CycloNum.coerce(c)
        if not c:
            return ZERO_POLY
        return LaurentPoly._raw({k: cyclo_mul(v, c) for k, v in self.terms.items()})

    # -- symbol handling ---------------------------------------------------
    def uses_only_x(self) -> bool:
        return all(ey == 0 for _, ey in self.terms)

    def rename_x_to_y(self) -> "LaurentPoly":
        """Move the first slot into the second; requires a single-symbol poly."""
        if not self.uses_only_x():
            raise ValueError("polynomial already depends on y")
        return LaurentPoly._raw({(0, ex): c for (ex, _), c in self.terms.items()})

    def evaluate(self, x=None, y=None) -> "LaurentPoly":
        """Substitute values for ``x`` and/or ``y`` (``None`` leaves the symbol free)."""
        xv = None if x is None else CycloNum.coerce(x)
        yv = None if y is None else CycloNum.coerce(y)
        out: Dict[Exponent, CycloNum] = {}
        for (ex, ey), c in self.terms.items():
            if xv is not None:
                c = cyclo_mul(c, xv ** ex)
                ex = 0
            if yv is not None:
                c = cyclo_mul(c, yv ** ey)
                ey = 0
            key = (ex, ey)
            out[key] = out[key] + c if key in out else c
        return LaurentPoly(out)

    def min_exponent(self, slot: int = 0) -> int:
        if not self.terms:
            return 0
        return min(k[slot] for k in self.terms)

    # -- printing / serialization -----------------------------------------
    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (ex, ey), c in sorted(self.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
            mono = _monomial_str(ex, "x") + _monomial_str(ey, "y")
            coeff = str(c)
            if not mono:
                parts.append(coeff)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            elif c.a and c.b:
                parts.append(f"({coeff})*{mono}")
            else:
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list:
        return [
            {"xe": ex, "ye": ey, "a": format_rational(c.a), "b": format_rational(c.b)}
            for (ex, ey), c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "LaurentPoly":
        terms: Dict[Exponent, CycloNum] = {}
        for item in data:
            key = (int(item["xe"]), int(item["ye"]))
            if key in terms:
                raise ValueError(f"duplicate exponent {key}")
            terms[key] = CycloNum(parse_rational(item["a"]), parse_rational(item["b"]))
        return cls(terms)


def _monomial_str(e: int, sym: str) -> str:
    if e == 0:
        return ""
    if e == 1:
        return sym
    return f"{sym}^{e}"


def laurent_add(p: LaurentPoly, q: LaurentPoly, sign: int = 1) -> LaurentPoly:
    out = dict(p.terms)
    for k, c in q.terms.items():
        if sign < 0:
            c = -c
        if k in out:
            s = out[k] + c
            if s:
                out[k] = s
            else:
                del out[k]
        else:
            out[k] = c
    return LaurentPoly._raw(out)


def laurent_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if not p.terms or not q.terms:
        return ZERO_POLY
    out: Dict[Exponent, CycloNum] = {}
    for (ax, ay), c in p.terms.items():
        for (bx, by), d in q.terms.items():
            key = (ax + bx, ay + by)
            prod = cyclo_mul(c, d)
            if key in out:
                out[key] = out[key] + prod
            else:
                out[key] = prod
    return LaurentPoly._raw({k: c for k, c in out.items() if c})


def laurent_substitute_ratio(p: LaurentPoly) -> LaurentPoly:
    """Replace the single symbol ``z`` by ``x/y``: each ``c z^k`` becomes ``c x^k y^-k``."""
    if not p.uses_only_x():
        raise ValueError("laurent_substitute_ratio expects a single-symbol polynomial")
    return LaurentPoly._raw({(ex, -ex): c for (ex, _), c in p.terms.items()})


ZERO_POLY = LaurentPoly()
ONE_POLY = LaurentPoly.const(1)
X = LaurentPoly.monomial(1, 0)
Y = LaurentPoly.monomial(0, 1)
W = LaurentPoly.const(OMEGA)
