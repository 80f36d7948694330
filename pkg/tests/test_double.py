from fractions import Fraction
from itertools import product

import pytest

from dd3lax.double import (
    BASIS,
    AlgebraElement,
    TensorElement,
    antipode,
    apply_antipode,
    basis,
    basis_mul,
    casimir,
    coproduct,
    coproduct_element,
    counit,
    counit_element,
    dual,
    elem_mul,
    embed_group,
    embed_leg,
    map_leg,
    multiply_legs,
    reflection_class_sum,
    tensor_mul,
    unit,
    universal_R,
    universal_R_inverse,
)
from dd3lax.group import ELEMENTS, group_inverse, group_mul
from dd3lax.scalars import LaurentPoly

e, s, s2, t, st, s2t = ELEMENTS


def _b(g, h, c=1):
    return AlgebraElement({basis(g, h): c})


def _slide_dual_left(g, h, k, l):
    """Oracle for (g h*)(k l*) that moves duals with h* k = k (k^-1 h k)* read right to left.

    Uses only g h* = (g h g^-1)* g and the orthogonality of duals.
    """
    # (g h*)(k l*) = (g h g^-1)* g k l* = (g h g^-1)* ((g k) l (g k)^-1)* (g k)
    gk = group_mul(g, k)
    left = group_mul(group_mul(g, h), group_inverse(g))
    right = group_mul(group_mul(gk, l), group_inverse(gk))
    if left != right:
        return None
    # a* m = m (m^-1 a m)*
    return gk, group_mul(group_mul(group_inverse(gk), left), gk)


def test_basis_mul_matches_sliding_oracle():
    for u, v in product(BASIS, repeat=2):
        expected = _slide_dual_left(u.grp, u.dual, v.grp, v.dual)
        got = basis_mul(u, v)
        if expected is None:
            assert got.is_zero(), (u, v)
        else:
            assert got == _b(*expected), (u, v)


def test_basis_mul_examples():
    assert basis_mul(basis(e, s), basis(e, s)) == _b(e, s)
    assert basis_mul(basis(e, s), basis(e, s2)).is_zero()
    assert basis_mul(basis(e, t), basis(s, st)) == _b(s, st)
    assert basis_mul(basis(t, e), basis(t, e)) == _b(e, e)


def test_unit_and_embedding():
    one = unit()
    assert len(one) == 6 and all(c == 1 for c in one.terms.values())
    assert embed_group(s) == sum((_b(s, h) for h in ELEMENTS), AlgebraElement())
    for u in BASIS:
        p = AlgebraElement.from_basis(u)
        assert one * p == p == p * one


def test_group_embedding_is_multiplicative():
    for g, k in product(ELEMENTS, repeat=2):
        assert embed_group(g) * embed_group(k) == embed_group(group_mul(g, k))


def test_duals_are_orthogonal_idempotents():
    for h, k in product(ELEMENTS, repeat=2):
        expected = dual(h) if h == k else AlgebraElement()
        assert dual(h) * dual(k) == expected


def test_coproduct_examples():
    assert coproduct(basis(e, e)) == TensorElement(2, {(basis(e, k), basis(e, group_inverse(k))): 1 for k in ELEMENTS})
    assert len(coproduct(basis(s, t)).terms) == 6
    assert coproduct_element(embed_group(s)) == TensorElement.from_elements(embed_group(s), embed_group(s))


def test_antipode_and_counit_examples():
    assert antipode(basis(s, t)) == basis(s2, s2t)
    assert antipode(basis(s, s)) == basis(s2, s2)
    assert counit(basis(s, e)) == LaurentPoly.const(1)
    assert counit(basis(s, t)) == LaurentPoly()
    assert counit_element(unit()) == LaurentPoly.const(1)
    for u in BASIS:
        assert antipode(antipode(u)) == u


def test_antipode_law_on_basis():
    for u in BASIS:
        expected = unit().scale(counit(u))
        assert multiply_legs(apply_antipode(coproduct(u), 0)) == expected
        assert multiply_legs(apply_antipode(coproduct(u), 1)) == expected


def test_universal_R_terms():
    R = universal_R()
    assert len(R.terms) == 36
    assert R.terms[(basis(s, t), basis(e, s))] == 1
    assert all(c == 1 for c in R.terms.values())


def test_R_inverse():
    assert universal_R() * universal_R_inverse() == TensorElement.from_elements(unit(), unit())


def test_embed_leg_sizes():
    R = universal_R()
    for p in (12, 13, 23):
        assert len(embed_leg(R, p).terms) == 216


def test_tensor_arity_mismatch():
    R = universal_R()
    with pytest.raises(ValueError):
        tensor_mul(R, embed_leg(R, 12))


def test_first_casimir_coefficients():
    c1 = casimir(1)
    third = Fraction(1, 3)
    expected = {
        basis(e, s): 2 * third,
        basis(e, s2): 2 * third,
        basis(s, s): -third,
        basis(s, s2): -third,
        basis(s2, s): -third,
        basis(s2, s2): -third,
    }
    assert c1 == AlgebraElement(expected)


def test_casimirs_are_central_and_differ_by_reflection_sum():
    for which in (1, 2):
        c = casimir(which)
        for u in BASIS:
            p = AlgebraElement.from_basis(u)
            assert c * p == p * c
    K = sum((_b(g, g) for g in (t, st, s2t)), AlgebraElement())
    assert reflection_class_sum() == K
    assert casimir(2) - casimir(1) == K


def test_algebra_json_round_trip():
    c = casimir(2)
    data = c.to_json()
    assert AlgebraElement.from_json(data) == c
    assert AlgebraElement.from_json(data).to_json() == data


def test_tensor_json_round_trip():
    R = universal_R()
    data = R.to_json()
    assert TensorElement.from_json(data) == R
    assert TensorElement.from_json(data).to_json() == data
