import random

import pytest
from hypothesis import given

from bindkit.recursion import (
    BROKEN_TERM_CE, REDEX_COUNT, TERM_CE, TERM_SUBST, CERensetSpec, check_ce_laws,
    check_frce_laws, check_prim_clauses, check_recursor_clauses, check_subst_laws,
    check_subst_recurse, count_redexes, frce_from_ce, induced_renset, offset_fresh,
    prim_recurse, recurse, subst_recurse,
)
from bindkit.renset import TERM_RENSET, check_renset_laws
from bindkit.reports import all_passed
from bindkit.semantics import CFV_SPEC, LENGTH_SPEC, shipped_specs
from bindkit.terms import (
    App, Lam, Var, Ap, Lm, Vr, enum_terms, parse_term, rename, sample_term, subst, var,
)

from strategies import VARS, terms, variables

x, y, z = var(0), var(1), var(2)


def by_suffix(reports):
    return {r.law.split(": ", 1)[1].split(" ")[0]: r for r in reports}


def test_term_spec_is_identity():
    for t in enum_terms(4, (x, y)):
        assert recurse(TERM_CE, (), t) == t
        assert recurse(TERM_CE, {x, y}, t) == t


def test_length_example():
    assert recurse(LENGTH_SPEC, (), parse_term(r"\x. x x")) == 3


def test_ce_laws_for_terms():
    reports = check_ce_laws(TERM_CE, (), seed=1, trials=300)
    assert all_passed(reports), "\n".join(r.summary() for r in reports if not r.passed)
    assert len(reports) == 9


def test_ce_laws_respect_avoid_set():
    X = {x, y}
    reports = check_ce_laws(TERM_CE, X, seed=1, trials=200, include_base=False)
    assert all_passed(reports)
    assert all("X={x0, x1}" in r.law for r in reports)


def test_lm_that_forgets_its_binder_breaks_s5():
    reports = by_suffix(check_ce_laws(BROKEN_TERM_CE, (), seed=0, trials=500, include_base=False))
    assert not reports["(S5)"].passed
    v = reports["(S5)"].violations[0]
    assert v.lhs != v.rhs


@pytest.mark.parametrize("name,spec,X", shipped_specs(), ids=lambda v: v if isinstance(v, str) else "")
def test_recursor_clauses_for_shipped_specs(name, spec, X):
    reports = check_recursor_clauses(spec, X, seed=2, trials=200)
    assert all_passed(reports), "\n".join(r.summary() for r in reports if not r.passed)
    assert all_passed(check_ce_laws(spec, X, seed=2, trials=200))


def test_recursor_exhaustive_mode():
    ts = enum_terms(4, (x, y, z))
    reports = check_recursor_clauses(LENGTH_SPEC, (), seed=0, trials=10, terms=ts)
    assert all_passed(reports)
    assert reports[-1].trials == len(ts)


@given(terms, variables, variables)
def test_cfv_clause_iv_is_the_four_case_law(t, zz, yy):
    before = recurse(CFV_SPEC, (), t)
    after = recurse(CFV_SPEC, (), rename(t, zz, yy))
    for xx in VARS:
        if xx not in (yy, zz):
            want = before[xx]
        elif xx == zz != yy:
            want = before[zz] + before[yy]
        elif xx == yy != zz:
            want = 0
        else:
            want = before[yy]
        assert after[xx] == want


@given(terms, variables, variables)
def test_length_is_renaming_invariant(t, a, b):
    assert recurse(LENGTH_SPEC, (), rename(t, a, b)) == recurse(LENGTH_SPEC, (), t)


@given(terms)
def test_fresh_policy_and_order_do_not_matter(t):
    X = {x, y}
    a = recurse(TERM_CE, X, t)
    b = recurse(TERM_CE, X, t, fresh=offset_fresh(40), right_first=True)
    assert a == b == t


def test_binder_in_avoid_set_is_renamed():
    seen = []
    spec = CERensetSpec(base=TERM_RENSET, vr=Vr, ap=Ap,
                        lm=lambda b, a: seen.append(b) or Lm(b, a))
    recurse(spec, {x}, Lm(x, Vr(x)))
    assert seen and seen[0] != x


# ---------------------------------------------------------------- primitive recursion


def _redexes(p):
    if isinstance(p, Var):
        return 0
    if isinstance(p, App):
        return _redexes(p.fun) + _redexes(p.arg) + isinstance(p.fun, Lam)
    return _redexes(p.body)


def test_redex_counter_examples():
    assert count_redexes(parse_term(r"(\x. x) y")) == 1
    assert count_redexes(parse_term(r"\x. \y. x")) == 0


def test_redex_counter_matches_oracle_exhaustively():
    for t in enum_terms(5, (x, y)):
        assert count_redexes(t) == _redexes(t.pre)


def test_frce_laws_and_clauses():
    assert all_passed(check_frce_laws(REDEX_COUNT, (), 3, 200))
    assert all_passed(check_prim_clauses(REDEX_COUNT, {x}, 3, 200))


def test_term_ignoring_spec_agrees_with_recurse():
    rng = random.Random(11)
    spec = frce_from_ce(LENGTH_SPEC)
    for _ in range(1000):
        t = sample_term(rng, 15, VARS)
        assert prim_recurse(spec, (), t) == recurse(LENGTH_SPEC, (), t)


# ---------------------------------------------------------------- substitutive sets


def test_subst_laws_for_terms():
    reports = check_subst_laws(TERM_SUBST, seed=4, trials=300)
    assert all_passed(reports), "\n".join(r.summary() for r in reports if not r.passed)
    assert len(reports) == 11
    s3 = [r for r in reports if "(S3)" in r.law][0]
    assert s3.note and s3.to_json()["note"] == s3.note


def test_subst_identity_axiom_samples():
    rng = random.Random(0)
    for _ in range(200):
        t, v = sample_term(rng, 10, VARS), rng.choice(VARS)
        assert subst(t, Vr(v), v) == t


def test_freshness_consequence_two_witness():
    # a = x2 x1, b = x0 with x2 not free in b
    a, b = Ap(Vr(z), Vr(y)), Vr(x)
    assert subst(subst(a, Vr(z), y), b, z) != subst(a, b, y)  # x2 free in a: side condition needed
    a = Ap(Vr(y), Vr(var(3)))
    assert subst(subst(a, Vr(z), y), b, z) == subst(a, b, y)


def test_alternative_s3_reading_fails_on_terms():
    # (Lm x a)⟦b⟦z/x⟧/y⟧ versus Lm x (a⟦b⟦z/y⟧/y⟧) with a = b = y, x != y
    a = b = Vr(y)
    lhs = subst(Lm(x, a), subst(b, Vr(z), x), y)
    literal = Lm(x, subst(a, subst(b, Vr(z), y), y))
    corrected = Lm(x, subst(a, subst(b, Vr(z), x), y))
    assert lhs != literal
    assert lhs == corrected


def test_weaker_freshness_side_conditions_fail_on_terms():
    # (2) with x2 # b only: a = x2, b = x1
    x1, x2 = x, y
    a, b = Vr(x2), Vr(x1)
    assert subst(subst(a, Vr(x2), x1), b, x2) != subst(a, b, x1)
    # (3) with x # a only: a = y, c = x
    xx, yy = x, y
    a, b, c = Vr(yy), Vr(z), Vr(xx)
    assert subst(subst(a, b, xx), c, yy) != subst(subst(a, c, yy), b, xx)


def test_subst_recurse_is_identity_and_commutes():
    for t in enum_terms(4, (x, y)):
        assert subst_recurse(TERM_SUBST, t) == t
    assert check_subst_recurse(TERM_SUBST, 1, 300).passed


def test_induced_renaming_is_term_renaming():
    ren = induced_renset(TERM_SUBST)
    for t in enum_terms(4, (x, y, z)):
        for a in (x, y, z):
            for b in (x, y, z):
                assert ren.rename(t, a, b) == rename(t, a, b)
    assert all_passed(check_renset_laws(ren, 5, 200))
