import json

import pytest
from hypothesis import given, strategies as st

from bindkit.perm import (
    PERM_VARS, TERM_PERM, FinPerm, alternate_decomposition, check_decomposition_independence,
    check_gh_roundtrip, check_group_laws, check_perm_action_laws, cycles,
    decompose_transpositions, perm_action_term, perm_compose, perm_identity,
    perm_invert, perm_map_term, perm_transposition, recompose, to_perm_action,
    to_swap_action,
)
from bindkit.renset import TERM_NOMINAL
from bindkit.reports import all_passed
from bindkit.terms import Ap, Lm, Vr, enum_terms, swap, var

from strategies import terms

x, y, z = var(0), var(1), var(2)

perms = st.permutations(PERM_VARS).map(lambda img: FinPerm(dict(zip(PERM_VARS, img))))


def test_identity_and_transpositions():
    assert perm_identity()(z) == z
    assert perm_transposition(x, y)(x) == y and perm_transposition(x, y)(y) == x
    assert perm_transposition(x, x) == perm_identity()


def test_not_a_permutation():
    with pytest.raises(ValueError):
        FinPerm({x: y})


def test_compose_and_invert_examples():
    s = perm_transposition(x, y)
    assert perm_compose(s, perm_identity()) == s
    assert perm_compose(s, s) == perm_identity()
    cyc = perm_compose(perm_transposition(x, y), perm_transposition(y, z))
    inv = perm_invert(cyc)
    for v in (x, y, z):
        assert inv(cyc(v)) == v and cyc(inv(v)) == v


def test_compose_applies_right_operand_first():
    s, t = perm_transposition(x, y), perm_transposition(y, z)
    assert perm_compose(s, t)(z) == s(t(z)) == x


def test_decomposition_examples():
    assert decompose_transpositions(perm_identity()) == []
    assert decompose_transpositions(perm_transposition(x, y)) == [(x, y)]
    cyc = FinPerm({x: y, y: z, z: x})
    ts = decompose_transpositions(cyc)
    assert len(ts) == 2
    assert recompose(ts) == cyc


@given(perms)
def test_decompositions_recompose(s):
    assert recompose(decompose_transpositions(s)) == s
    assert recompose(alternate_decomposition(s)) == s
    assert sorted(v for c in cycles(s) for v in c) == sorted(s.moved)


def test_action_examples():
    t = Lm(x, Ap(Vr(x), Vr(y)))
    assert perm_action_term(t, perm_identity()) == t
    assert perm_action_term(t, perm_transposition(x, y)) == Lm(y, Ap(Vr(y), Vr(x)))
    cyc = FinPerm({x: y, y: z, z: x})
    assert perm_action_term(Ap(Ap(Vr(x), Vr(y)), Vr(z)), cyc) == Ap(Ap(Vr(y), Vr(z)), Vr(x))


@given(terms, perms)
def test_transposition_route_equals_direct_map(t, s):
    assert perm_action_term(t, s) == perm_map_term(t, s)


def test_action_laws_exhaustive_small():
    vs = (x, y, z)
    reports = check_perm_action_laws(TERM_PERM, vars=vs, samples=enum_terms(4, vs))
    assert all_passed(reports)
    assert reports[1].trials == len(enum_terms(4, vs)) * 36


def test_group_and_roundtrip_reports():
    assert all_passed(check_group_laws(1, 300))
    assert all_passed(check_perm_action_laws(TERM_PERM, 1, 300))
    assert check_decomposition_independence(TERM_NOMINAL, 1, 300).passed
    assert all_passed(check_gh_roundtrip(TERM_PERM, TERM_NOMINAL, 1, 300))


def test_g_of_term_action_is_term_swap():
    g = to_swap_action(TERM_PERM)
    for t in enum_terms(4, (x, y, z)):
        assert g.swap(t, x, z) == swap(t, x, z)


def test_h_identity():
    h = to_perm_action(TERM_NOMINAL)
    t = Lm(x, Vr(y))
    assert h.act(t, perm_identity()) == t


def test_json_roundtrip():
    s = FinPerm({x: y, y: z, z: x})
    assert json.loads(s.to_json()) == {"0": 1, "1": 2, "2": 0}
    assert FinPerm.from_json(s.to_json()) == s
