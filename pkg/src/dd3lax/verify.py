"""Verification suites: every identity as an exact check producing RelationReports.

Each suite is a list of named tasks.  Tasks are independent and can be run
in worker processes; results are always returned in task order.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from . import double as D
from . import lax
from .double import BASIS, AlgebraElement, TensorElement
from .group import ELEMENTS, conjugacy_classes
from .matrices import ScalarMatrix, embed
from .report import RelationReport, Witness, compare, compare_values
from .reps import ALL_LABELS, Representation, apply_both_legs, check_homomorphism, commutant_dimension, irrep
from .scalars import OMEGA, LaurentPoly, X

SUITES: Tuple[str, ...] = (
    "hopf",
    "quasitriangular",
    "ybe-constant",
    "reps",
    "casimirs",
    "ybe-parametric",
    "lax-universal",
    "lax-golden",
    "rll",
    "limits",
)

JOBS_ENV = "DD3LAX_JOBS"
SPECIALIZATION_POINTS = [(Fraction(x), Fraction(y)) for x in (2, 3, -1) for y in (5, 7)]


def default_jobs() -> int:
    env = os.environ.get(JOBS_ENV)
    if env:
        jobs = int(env)
        if jobs < 1:
            raise ValueError(f"{JOBS_ENV} must be a positive integer")
        return jobs
    return os.cpu_count() or 1


# -- helpers ----------------------------------------------------------------

def _per_basis(relation: str, pairs, note: str = "") -> RelationReport:
    """``pairs`` yields ``(row, col, lhs, rhs)``; the first mismatch is the witness."""
    for row, col, lhs, rhs in pairs:
        if lhs != rhs:
            return RelationReport(relation, "fail", Witness(row, col, lhs, rhs), note=note)
    return RelationReport(relation, "pass", note=note)


def _elem(u) -> AlgebraElement:
    return AlgebraElement.from_basis(u)


def _negative_control(relation: str, inner: RelationReport) -> RelationReport:
    """Passes when the wrapped check rejects the corrupted input with a witness."""
    if inner.status == "fail" and inner.witness is not None:
        w = inner.witness
        return RelationReport(relation, "pass", note=f"rejected at ({w.row}, {w.col})")
    return RelationReport(
        relation, "fail", Witness(0, 0, "corrupted input accepted", inner.relation)
    )


# -- hopf ---------------------------------------------------------------------

def _coassociativity() -> RelationReport:
    def gen():
        for u in BASIS:
            d = D.coproduct(u)
            yield u.index, 0, D.map_leg(d, 0, D.coproduct), D.map_leg(d, 1, D.coproduct)
    return _per_basis("hopf:coassociativity", gen())


def _counit_laws() -> List[RelationReport]:
    left = _per_basis(
        "hopf:counit-left",
        ((u.index, 0, D.apply_counit(D.coproduct(u), 0), _elem(u)) for u in BASIS),
    )
    right = _per_basis(
        "hopf:counit-right",
        ((u.index, 0, D.apply_counit(D.coproduct(u), 1), _elem(u)) for u in BASIS),
    )
    return [left, right]


def _antipode_laws() -> List[RelationReport]:
    def gen(leg):
        for u in BASIS:
            lhs = D.multiply_legs(D.apply_antipode(D.coproduct(u), leg))
            rhs = D.unit().scale(D.counit(u))
            yield u.index, 0, lhs, rhs
    involution = _per_basis(
        "hopf:antipode-involution", ((u.index, 0, D.antipode(D.antipode(u)), u) for u in BASIS)
    )
    return [_per_basis("hopf:antipode-left", gen(0)), _per_basis("hopf:antipode-right", gen(1)), involution]


def _homomorphisms() -> List[RelationReport]:
    def coproduct_gen():
        cops = {u: D.coproduct(u) for u in BASIS}
        for u in BASIS:
            for v in BASIS:
                lhs = D.coproduct_element(D.basis_mul(u, v))
                yield u.index, v.index, lhs, cops[u] * cops[v]

    def counit_gen():
        for u in BASIS:
            for v in BASIS:
                yield u.index, v.index, D.counit_element(D.basis_mul(u, v)), D.counit(u) * D.counit(v)

    unit_law = _per_basis(
        "hopf:unit-law",
        (
            (u.index, side, prod, _elem(u))
            for u in BASIS
            for side, prod in ((0, D.unit() * _elem(u)), (1, _elem(u) * D.unit()))
        ),
    )
    return [
        _per_basis("hopf:coproduct-homomorphism", coproduct_gen()),
        _per_basis("hopf:counit-homomorphism", counit_gen()),
        unit_law,
    ]


# -- quasi-triangularity --------------------------------------------------------

def _qt1() -> RelationReport:
    R = D.universal_R()
    return _per_basis(
        "quasitriangular:R-intertwines-coproduct",
        ((u.index, 0, R * D.coproduct(u), D.coproduct_opposite(u) * R) for u in BASIS),
    )


def _qt23() -> List[RelationReport]:
    R = D.universal_R()
    r12, r13, r23 = (D.embed_leg(R, p) for p in (12, 13, 23))
    return [
        compare_values("quasitriangular:(coproduct x id)R = R13 R23", D.map_leg(R, 0, D.coproduct), r13 * r23),
        compare_values("quasitriangular:(id x coproduct)R = R13 R12", D.map_leg(R, 1, D.coproduct), r13 * r12),
        compare_values(
            "quasitriangular:R inverse = (S x id)R",
            R * D.universal_R_inverse(),
            TensorElement.from_elements(D.unit(), D.unit()),
        ),
    ]


def _ybe_constant() -> RelationReport:
    R = D.universal_R()
    r12, r13, r23 = (D.embed_leg(R, p) for p in (12, 13, 23))
    return compare_values("ybe-constant:R12 R13 R23 = R23 R13 R12", r12 * r13 * r23, r23 * r13 * r12)


# -- representations -------------------------------------------------------------

def _rep_checks(code: str) -> List[RelationReport]:
    rep = irrep(code)
    hom = check_homomorphism(rep)
    if hom.failures:
        u, v = hom.failures[0]
        w = D.basis_product(u, v)
        lhs = ScalarMatrix.zeros(rep.dim) if w is None else rep.image(w)
        r1 = RelationReport(
            f"reps:{code}:homomorphism", "fail", Witness(u.index, v.index, lhs, rep.image(u) @ rep.image(v))
        )
    elif not hom.unit_ok:
        r1 = RelationReport(
            f"reps:{code}:homomorphism", "fail",
            Witness(0, 0, rep(D.unit()), ScalarMatrix.identity(rep.dim)),
        )
    else:
        r1 = RelationReport(f"reps:{code}:homomorphism", "pass", note=f"{hom.pairs_checked} pairs")
    support = rep.support()
    classes = conjugacy_classes()
    r2 = compare_values(
        f"reps:{code}:dual-support-is-one-class",
        support in classes,
        True,
        note="{" + ", ".join(sorted(g.label for g in support)) + "}",
    )
    r3 = compare_values(f"reps:{code}:commutant-is-scalar", commutant_dimension(rep), 1)
    return [r1, r2, r3]


def _rep_totals() -> List[RelationReport]:
    total = sum(label.dim ** 2 for label in ALL_LABELS)
    return [compare_values("reps:sum-of-squared-dimensions", total, len(BASIS))]


def corrupted_three_plus() -> Representation:
    """pi_(3,+) with one sign flipped in the image of tau."""
    good = irrep("3+")
    entries = [list(row) for row in good.tau.entries]
    entries[1][2] = -entries[1][2]
    return Representation(good.label, good.sigma, ScalarMatrix(entries), dict(good.duals))


def _rep_negative() -> List[RelationReport]:
    hom = check_homomorphism(corrupted_three_plus())
    if hom.failures:
        u, v = hom.failures[0]
        inner = RelationReport("reps:3+:homomorphism", "fail", Witness(u.index, v.index, str(u), str(v)))
    else:
        inner = RelationReport("reps:3+:homomorphism", "pass")
    return [_negative_control("negative-control:reps:tau-sign-flip", inner)]


# -- casimirs ----------------------------------------------------------------

def _casimir_checks() -> List[RelationReport]:
    out = []
    for which in (1, 2):
        c = D.casimir(which)
        out.append(
            _per_basis(
                f"casimirs:c{which}-central",
                ((u.index, 0, c * _elem(u), _elem(u) * c) for u in BASIS),
            )
        )
    out.append(
        compare_values(
            "casimirs:c2 - c1 = sum_k (s^k t)(s^k t)*",
            D.casimir(2) - D.casimir(1),
            D.reflection_class_sum(),
        )
    )
    return out


# -- parametric YBE ------------------------------------------------------------------

def corrupted_r21() -> ScalarMatrix:
    entries = [list(row) for row in lax.r_matrix_2().entries]
    entries[1][2] = LaurentPoly()
    return ScalarMatrix(entries)


def _ybe_parametric(name: str) -> List[RelationReport]:
    R = lax.R_MATRICES[name]()
    out = [lax.check_parametric_ybe(R, name)]
    bad = 0
    for x0, y0 in SPECIALIZATION_POINTS:
        lhs, rhs = specialized_sides(f"ybe-parametric:{name}", x0, y0)
        if lhs != rhs:
            pos = lhs.first_difference(rhs)
            out.append(
                RelationReport(
                    f"ybe-parametric:{name}:specialized x={x0} y={y0}", "fail",
                    Witness(pos[0], pos[1], lhs[pos], rhs[pos]),
                )
            )
            bad += 1
    if not bad:
        out.append(
            RelationReport(
                f"ybe-parametric:{name}:specializations", "pass",
                note=f"{len(SPECIALIZATION_POINTS)} rational points",
            )
        )
    return out


def _regularity() -> List[RelationReport]:
    w_minus_one = LaurentPoly.const(OMEGA - 1)
    return [
        compare(
            "ybe-parametric:R21(1) = (w-1) P4",
            lax.r_matrix_2().evaluate(x=1),
            ScalarMatrix.swap(2).scale(w_minus_one),
        ),
        compare("ybe-parametric:R3p(1) = P9", lax.r_matrix_3().evaluate(x=1), ScalarMatrix.swap(3)),
    ]


def _ybe_negative() -> List[RelationReport]:
    inner = lax.check_parametric_ybe(corrupted_r21(), "R21-corrupted")
    return [_negative_control("negative-control:ybe-parametric:zeroed-entry", inner)]


# -- universal Lax ---------------------------------------------------------------

def _lax_universal_2() -> List[RelationReport]:
    out = [lax.check_universal_lax(lax.r_matrix_2(), lax.universal_lax_2(), "L2")]
    with_c2 = lax.universal_lax_2(2)
    same = compare("lax-universal:L2 built with c2 coincides with c1", with_c2, lax.universal_lax_2(1))
    out.append(
        RelationReport(same.relation, same.status, same.witness, note="informational", informational=True)
    )
    return out


def _lax_universal_3() -> List[RelationReport]:
    R = lax.r_matrix_3()
    display = lax.universal_lax_3(2, "matrix")
    out = [lax.check_universal_lax(R, display, "L3")]
    for source in ("summation", "matrix"):
        for which in (1, 2):
            L = lax.universal_lax_3(which, source)
            rep = lax.check_universal_lax(R, L, f"L3[{source},c{which}]")
            same = L == display
            out.append(
                RelationReport(
                    rep.relation, rep.status, rep.witness,
                    note=f"adjudication; {'equals' if same else 'differs from'} the matrix display",
                    informational=True,
                )
            )
    return out


def _lax_negative() -> List[RelationReport]:
    inner = lax.check_universal_lax(lax.r_matrix_3(), lax.universal_lax_3(1, "matrix"), "L3-with-c1")
    return [_negative_control("negative-control:lax-universal:L3 with c1 in place of c2", inner)]


# -- golden tables, RLL, limits -------------------------------------------------------

def _golden(lax_name: str) -> List[RelationReport]:
    out = []
    for name, code, expected in lax.golden_L_tables():
        if name != lax_name:
            continue
        out.append(compare(f"lax-golden:{name}:{code}", lax.derived_L(name, code), expected))
    out.append(
        compare(
            f"lax-golden:{lax_name}:3+ equals 3-",
            lax.derived_L(lax_name, "3+"),
            lax.derived_L(lax_name, "3-"),
        )
    )
    return out


def _rll(lax_name: str) -> List[RelationReport]:
    R = lax.LAX_OPERATORS[lax_name][1]()
    out = []
    for label in ALL_LABELS:
        L = lax.derived_L(lax_name, label)
        out.append(lax.check_rll(R, L, label.dim, f"{lax_name}:{label.code}"))
    return out


def twisted_identity_lax() -> ScalarMatrix:
    """The identity on V_(2,1) (x) W with one diagonal slot twisted by x."""
    one = LaurentPoly.const(1)
    return ScalarMatrix.diag([one, X, one, one])


def _rll_negative() -> List[RelationReport]:
    inner = lax.check_rll(lax.r_matrix_2(), twisted_identity_lax(), 2, "twisted-identity")
    return [_negative_control("negative-control:rll:twisted identity", inner)]


def _limits() -> List[RelationReport]:
    return [
        compare("limits:L2(0) = (pi_(2,1) x id)R", lax.limit_at_zero(lax.universal_lax_2()), lax.constant_lax("21")),
        compare(
            "limits:L3(0) = (pi_(3,+) x id)R",
            lax.limit_at_zero(lax.universal_lax_3()),
            lax.constant_lax("3+"),
        ),
        compare(
            "limits:(pi_(2,1) x pi_(2,1))R = R21(0)",
            apply_both_legs(D.universal_R(), irrep("21"), irrep("21")),
            lax.r_matrix_2().evaluate(x=0),
        ),
    ]


# -- specialization ---------------------------------------------------------

def specialized_sides(relation: str, x0, y0):
    """Evaluate every factor at numbers first, then multiply (no polynomial products)."""
    x0, y0 = Fraction(x0), Fraction(y0)
    kind, _, arg = relation.partition(":")
    if kind == "ybe-parametric":
        if arg not in lax.R_MATRICES:
            raise KeyError(relation)
        R = lax.R_MATRICES[arg]()
        d = int(round(R.rows ** 0.5))
        dims = [d, d, d]
        r12 = embed(R.evaluate(x=x0 / y0), dims, (0, 1))
        r13 = embed(R.evaluate(x=x0), dims, (0, 2))
        r23 = embed(R.evaluate(x=y0), dims, (1, 2))
        return r12 @ r13 @ r23, r23 @ r13 @ r12
    if kind == "lax-universal":
        name = {"2": "L2", "3": "L3", "L2": "L2", "L3": "L3"}.get(arg)
        if name is None:
            raise KeyError(relation)
        build, rmat, _ = lax.LAX_OPERATORS[name]
        L = build()
        R = rmat().evaluate(x=x0 / y0)
        d = L.rows
        l13 = lax.lax_embed(L.evaluate(x=x0), 13, d)
        l23 = lax.lax_embed(L.evaluate(x=y0), 23, d)
        return R @ l13 @ l23, l23 @ l13 @ R
    if kind == "rll":
        name, _, code = arg.partition(":")
        if name not in lax.LAX_OPERATORS:
            raise KeyError(relation)
        rep = irrep(code)
        R = lax.LAX_OPERATORS[name][1]()
        L = lax.derived_L(name, rep.label)
        d = int(round(R.rows ** 0.5))
        dims = [d, d, rep.dim]
        r12 = embed(R.evaluate(x=x0 / y0), dims, (0, 1))
        l13 = embed(L.evaluate(x=x0), dims, (0, 2))
        l23 = embed(L.evaluate(x=y0), dims, (1, 2))
        return r12 @ l13 @ l23, l23 @ l13 @ r12
    raise KeyError(relation)


# -- registry -------------------------------------------------------------------

def _as_list(result) -> List[RelationReport]:
    return result if isinstance(result, list) else [result]


TASKS: Dict[str, List[Tuple[str, Callable[[], object]]]] = {
    "hopf": [
        ("coassociativity", _coassociativity),
        ("counit", _counit_laws),
        ("antipode", _antipode_laws),
        ("homomorphisms", _homomorphisms),
    ],
    "quasitriangular": [("qt1", _qt1), ("qt23", _qt23)],
    "ybe-constant": [("ybe-constant", _ybe_constant)],
    "reps": [(f"rep-{label.code}", label.code) for label in ALL_LABELS]
    + [("rep-totals", _rep_totals), ("rep-negative", _rep_negative)],
    "casimirs": [("casimirs", _casimir_checks)],
    "ybe-parametric": [
        ("ybe-R21", "R21"),
        ("ybe-R3p", "R3p"),
        ("regularity", _regularity),
        ("ybe-negative", _ybe_negative),
    ],
    "lax-universal": [
        ("lax-2", _lax_universal_2),
        ("lax-3", _lax_universal_3),
        ("lax-negative", _lax_negative),
    ],
    "lax-golden": [("golden-L2", "L2"), ("golden-L3", "L3")],
    "rll": [("rll-L2", "L2"), ("rll-L3", "L3"), ("rll-negative", _rll_negative)],
    "limits": [("limits", _limits)],
}

_PARAMETRIZED = {
    "reps": _rep_checks,
    "ybe-parametric": _ybe_parametric,
    "lax-golden": _golden,
    "rll": _rll,
}


def run_task(suite: str, index: int) -> List[RelationReport]:
    _, fn = TASKS[suite][index]
    if isinstance(fn, str):
        return _as_list(_PARAMETRIZED[suite](fn))
    return _as_list(fn())


def resolve_suites(selector: str) -> List[str]:
    if selector == "all":
        return list(SUITES)
    if selector not in SUITES:
        raise ValueError(f"unknown suite {selector!r}; expected one of {', '.join(SUITES + ('all',))}")
    return [selector]


def run_suites(suites: Sequence[str], jobs: int = 1) -> List[RelationReport]:
    work = [(s, i) for s in suites for i in range(len(TASKS[s]))]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_task, [s for s, _ in work], [i for _, i in work]))
    else:
        results = [run_task(s, i) for s, i in work]
    return [report for batch in results for report in batch]


def all_passed(reports: Sequence[RelationReport]) -> bool:
    return all(r.passed for r in reports if not r.informational)
