from fractions import Fraction

import pytest

from dd3lax.double import casimir
from dd3lax.lax import r_matrix_2, r_matrix_3
from dd3lax.latex import parse_matrix, parse_poly, poly_latex, to_latex
from dd3lax.scalars import OMEGA, LaurentPoly, X

W = LaurentPoly.const(OMEGA)


@pytest.mark.parametrize(
    "text, entry",
    [
        (r"\omega - x^2", (0, 0)),
        (r"-\omega^{-1} (x^2-1)", (1, 1)),
        (r"(\omega-1)x", (1, 2)),
        (r"(\omega - 1)x", (2, 1)),
    ],
)
def test_display_entries_parse_to_r21(text, entry):
    assert parse_poly(text) == r_matrix_2()[entry]


def test_parse_fraction_and_powers():
    assert parse_poly(r"\frac{1}{3}(2 - x)") == (2 - X).scale(Fraction(1, 3))
    assert parse_poly(r"x^{-1} y") == LaurentPoly({(-1, 1): 1})
    assert parse_poly(r"\omega^2") == W * W


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_poly(r"x +")
    with pytest.raises(ValueError):
        parse_poly(r"z")


def test_poly_rendering():
    assert poly_latex(W - X * X) == r"-x^{2}+\omega"
    assert poly_latex(LaurentPoly()) == "0"


@pytest.mark.parametrize("build", [r_matrix_2, r_matrix_3], ids=["R21", "R3p"])
def test_matrix_round_trip(build):
    m = build()
    assert parse_matrix(to_latex(m)) == m


def test_algebra_rendering_uses_group_notation():
    text = to_latex(casimir(1))
    assert r"\sigma^*" in text and r"\frac{2}{3}" in text
