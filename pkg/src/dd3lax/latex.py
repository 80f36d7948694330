"""LaTeX rendering in the sigma/tau/omega notation, and a parser for polynomial entries.

The parser accepts the small subset needed for matrix displays: integers,
``\\omega``, ``x``, ``y``, ``\\frac{..}{..}``, powers ``^{n}``, parentheses or
brackets, implicit multiplication and ``+``/``-``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import List

from .double import AlgebraElement, DoubleBasis, TensorElement
from .group import IDENTITY, latex_element
from .matrices import AlgebraValuedMatrix, ScalarMatrix
from .scalars import OMEGA, CycloNum, LaurentPoly


def _rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def cyclo_latex(c: CycloNum) -> str:
    if not c.b:
        return _rational(c.a)
    if c.b == 1:
        w = "\\omega"
    elif c.b == -1:
        w = "-\\omega"
    else:
        w = _rational(c.b) + "\\omega"
    if not c.a:
        return w
    return f"{_rational(c.a)}{'' if w.startswith('-') else '+'}{w}"


def _power(sym: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return sym
    return f"{sym}^{{{e}}}"


def poly_latex(p: LaurentPoly) -> str:
    if not p.terms:
        return "0"
    parts: List[str] = []
    for (ex, ey), c in sorted(p.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1])):
        mono = _power("x", ex) + _power("y", ey)
        if not mono:
            text = cyclo_latex(c)
        elif c == 1:
            text = mono
        elif c == -1:
            text = "-" + mono
        elif c.a and c.b:
            text = f"({cyclo_latex(c)}){mono}"
        else:
            text = cyclo_latex(c) + mono
        if parts and not text.startswith("-"):
            text = "+" + text
        parts.append(text)
    return "".join(parts)


def _dual_latex(h) -> str:
    inner = latex_element(h)
    if inner in ("e", "\\sigma", "\\tau"):
        return inner + "^*"
    return f"({inner})^*"


def basis_latex(u: DoubleBasis) -> str:
    dual = _dual_latex(u.dual)
    if u.grp == IDENTITY:
        return dual
    return latex_element(u.grp) + dual


def algebra_latex(a: AlgebraElement) -> str:
    if not a.terms:
        return "0"
    parts = []
    for u, c in a.sorted_terms():
        coeff = poly_latex(c)
        if coeff == "1":
            parts.append(basis_latex(u))
        elif coeff == "-1":
            parts.append("-" + basis_latex(u))
        else:
            parts.append(f"({coeff})\\,{basis_latex(u)}")
    return " + ".join(parts).replace("+ -", "- ")


def tensor_latex(t: TensorElement) -> str:
    parts = []
    for key, c in t.sorted_terms():
        legs = " \\otimes ".join(basis_latex(u) for u in key)
        coeff = poly_latex(c)
        parts.append(legs if coeff == "1" else f"({coeff})\\,{legs}")
    return " + ".join(parts) if parts else "0"


def matrix_latex(m) -> str:
    if isinstance(m, ScalarMatrix):
        cell = poly_latex
    elif isinstance(m, AlgebraValuedMatrix):
        cell = algebra_latex
    else:
        raise TypeError(f"cannot render {type(m).__name__}")
    rows = [" & ".join(cell(e) for e in row) for row in m.entries]
    return "\\begin{pmatrix}\n" + " \\\\\n".join(rows) + "\n\\end{pmatrix}"


def to_latex(obj) -> str:
    if isinstance(obj, (ScalarMatrix, AlgebraValuedMatrix)):
        return matrix_latex(obj)
    if isinstance(obj, AlgebraElement):
        return algebra_latex(obj)
    if isinstance(obj, TensorElement):
        return tensor_latex(obj)
    if isinstance(obj, LaurentPoly):
        return poly_latex(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")


# -- parsing ---------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\\omega|\\frac|\\cdot|\d+|[xy()\[\]{}^+\-])")
_SKIP = re.compile(r"\\[,;!]|\\left|\\right|\s+")


class _Parser:
    def __init__(self, text: str):
        text = _SKIP.sub(" ", text)
        self.tokens: List[str] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"unexpected input at {text[pos:pos + 10]!r}")
            self.tokens.append(m.group(1))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, expected=None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected!r}, found {tok!r}")
        self.i += 1
        return tok

    def parse(self) -> LaurentPoly:
        value = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input {self.peek()!r}")
        return value

    def expr(self) -> LaurentPoly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        value = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            value = value + t if op == "+" else value - t
        return value

    def term(self) -> LaurentPoly:
        value = self.factor()
        while self.peek() not in (None, "+", "-", ")", "]", "}"):
            if self.peek() == "\\cdot":
                self.take()
            value = value * self.factor()
        return value

    def factor(self) -> LaurentPoly:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            if self.peek() == "{":
                self.take()
                sign = -1 if self.peek() == "-" else 1
                if self.peek() in ("+", "-"):
                    self.take()
                n = int(self.take())
                self.take("}")
            else:
                n = int(self.take())
                sign = 1
            base = base ** (sign * n)
        return base

    def atom(self) -> LaurentPoly:
        tok = self.take()
        if tok.isdigit():
            return LaurentPoly.const(int(tok))
        if tok == "\\omega":
            return LaurentPoly.const(OMEGA)
        if tok == "x":
            return LaurentPoly.monomial(1, 0)
        if tok == "y":
            return LaurentPoly.monomial(0, 1)
        if tok in ("(", "[", "{"):
            close = {"(": ")", "[": "]", "{": "}"}[tok]
            value = self.expr()
            self.take(close)
            return value
        if tok == "\\frac":
            self.take("{")
            num = self.expr()
            self.take("}")
            self.take("{")
            den = self.expr()
            self.take("}")
            return num / (den.constant_term() if den.is_constant() else den)
        raise ValueError(f"unexpected token {tok!r}")


def parse_poly(text: str) -> LaurentPoly:
    """Parse one LaTeX polynomial entry, e.g. ``-\\omega^{-1} (x^2-1)``."""
    return _Parser(text).parse()


def parse_matrix(text: str) -> ScalarMatrix:
    """Parse the body of a ``pmatrix`` (with or without the environment markers)."""
    body = re.sub(r"\\(begin|end)\{pmatrix\}", "", text)
    rows = [r for r in body.split("\\\\") if r.strip()]
    return ScalarMatrix([[parse_poly(cell) for cell in row.split("&")] for row in rows])
