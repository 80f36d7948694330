from itertools import product

import pytest

from dd3lax.group import (
    ELEMENTS,
    IDENTITY,
    ORDER,
    GroupElement,
    conjugacy_classes,
    conjugate,
    element,
    group_inverse,
    group_mul,
    parse_element,
)

e, s, s2, t, st, s2t = ELEMENTS


def test_tau_sigma():
    assert group_mul(t, s) == s2t


def test_sigma_sigma_squared():
    assert group_mul(s, s2) == e


def test_st_squared():
    assert group_mul(st, st) == e


@pytest.mark.parametrize("g, inv", [(s, s2), (t, t), (st, st)])
def test_inverse(g, inv):
    assert group_inverse(g) == inv
    assert group_mul(g, group_inverse(g)) == e


def test_conjugate_examples():
    assert all(conjugate(e, g) == e for g in ELEMENTS)
    assert conjugate(t, s) == st
    assert conjugate(s, t) == s2


def test_presentation():
    assert group_mul(group_mul(s, s), s) == e
    assert group_mul(t, t) == e


def test_canonical_word():
    for g in ELEMENTS:
        word = IDENTITY
        for _ in range(g.r):
            word = group_mul(word, s)
        if g.s:
            word = group_mul(word, t)
        assert word == g
        assert element(g.r, g.s) == g


def test_group_axioms_exhaustive():
    assert ORDER == len(set(ELEMENTS)) == 6
    for a, b, c in product(ELEMENTS, repeat=3):
        assert group_mul(group_mul(a, b), c) == group_mul(a, group_mul(b, c))
    for a in ELEMENTS:
        assert group_mul(a, e) == a == group_mul(e, a)


def test_conjugacy_classes():
    assert set(conjugacy_classes()) == {frozenset({e}), frozenset({s, s2}), frozenset({t, st, s2t})}


def test_conjugation_composes():
    for h, g1, g2 in product(ELEMENTS, repeat=3):
        assert conjugate(conjugate(h, g1), g2) == conjugate(h, group_mul(g1, g2))


def test_names_round_trip():
    assert [g.label for g in ELEMENTS] == ["e", "s", "s2", "t", "st", "s2t"]
    for g in ELEMENTS:
        assert parse_element(g.label) is g
    with pytest.raises(ValueError):
        parse_element("u")
