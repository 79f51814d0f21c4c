import random
import textwrap

import pytest
from hypothesis import given, settings

from bindkit.recursion import check_ce_laws, check_recursor_clauses
from bindkit.reports import all_passed
from bindkit.semantics import (
    CHURCH_PLUS, CHURCH_TIMES, OMEGA, ONE_POINT, Env, FuelExhausted, Interp,
    beta_normal, can_eta, cbv, cfv, church, clam, cross_check, fcb_contrast_report,
    fixture_domain, interp_ce_spec, interp_equal, length_of, normalize,
    probe_envs, psubst_via_recursor, sem, subst_via_recursor,
)
from bindkit.terms import (
    FinTermEnv, Names, Ap, Lm, Vr, enum_terms, parse_term, psubst, rename, sample_term,
    subst, var,
)

from strategies import VARS, terms

x, y, z = var(0), var(1), var(2)
DOM = fixture_domain()


def envs(n=60, seed=0):
    rng = random.Random(seed)
    probe = DOM.equal_probe
    return [Env(lambda v, k=rng.randrange(97): (k * (v.index + 1)) % 101,
                {v: rng.choice(probe) for v in VARS if rng.random() < 0.5}) for _ in range(n)]


# ---------------------------------------------------------------- environments and fixture


def test_env_update_changes_exactly_one_variable():
    xi = Env(lambda v: v.index)
    up = xi.update(y, 42)
    assert up(y) == 42 and up(x) == 0 and up(z) == 2
    same = xi.update(y, xi(y))
    assert all(same(v) == xi(v) for v in VARS)


def test_fixture_domain_from_file(tmp_path):
    cfg = tmp_path / "d.cfg"
    cfg.write_text(textwrap.dedent("""
        [domain]
        modulus = 7
        ap_coefficients = 0, 1, 1
        lm_points = 3
        lm_weights = 1
        probe = 0, 1, 2
        environments = 10
    """))
    dom = fixture_domain(cfg)
    assert dom.ap(5, 4) == 2 and dom.lm(lambda d: d * d) == 2
    assert len(probe_envs(dom, [x])) == 10


def test_bundled_fixture_values():
    assert DOM.name == "Z/101"
    assert DOM.environments >= 50
    assert DOM.ap(1, 1) == 15


# ---------------------------------------------------------------- sem clauses


def test_sem_examples():
    names = Names()
    self_app = parse_term(r"\x. x x", names)
    probe = parse_term(r"\x. x y", names)
    yv = names("y")
    for xi in envs():
        assert sem(DOM, self_app, xi) == DOM.lm(lambda d: DOM.ap(d, d))
        assert sem(DOM, probe, xi) == DOM.lm(lambda d: DOM.ap(d, xi(yv)))
        assert sem(DOM, Vr(z), xi) == xi(z)


@settings(max_examples=60)
@given(terms, terms)
def test_sem_clauses(t1, t2):
    for xi in envs(8):
        assert sem(DOM, Ap(t1, t2), xi) == DOM.ap(sem(DOM, t1, xi), sem(DOM, t2, xi))
        for v in (x, z):
            assert sem(DOM, Lm(v, t1), xi) == DOM.lm(lambda d: sem(DOM, t1, xi.update(v, d)))


@settings(max_examples=60)
@given(terms)
def test_sem_renaming_clause(t):
    for xi in envs(8):
        for new, old in ((x, y), (z, x), (y, y)):
            assert sem(DOM, rename(t, new, old), xi) == sem(DOM, t, xi.update(old, xi(new)))


def test_interp_spec_laws():
    spec = interp_ce_spec(DOM)
    reports = check_ce_laws(spec, (), seed=0, trials=40)
    assert all_passed(reports), "\n".join(r.summary() for r in reports if not r.passed)
    assert all_passed(check_recursor_clauses(spec, (), seed=0, trials=30, max_size=6))


def test_extensional_equality_separates():
    i1 = Interp(lambda xi: xi(x), frozenset({x}))
    i2 = Interp(lambda xi: xi(y), frozenset({y}))
    assert interp_equal(DOM, i1, i1)
    assert not interp_equal(DOM, i1, i2)


def test_fcb_contrast():
    renaming, swapping = fcb_contrast_report(DOM, seed=0, trials=100)
    assert renaming.passed
    assert not swapping.passed
    assert "ξ ↦ ξ" in swapping.violations[0].inputs


def test_fcb_contrast_one_point():
    renaming, swapping = fcb_contrast_report(ONE_POINT, seed=0, trials=30)
    assert renaming.passed and swapping.passed


# ---------------------------------------------------------------- NbE


def test_normalize_examples():
    names = Names()
    assert normalize(parse_term(r"(\x. x) y", names)) == parse_term("y", names)
    assert normalize(parse_term(r"\x. (\y. y) x")) == parse_term(r"\x. x")
    assert normalize(Ap(church(2), church(2))) == church(4)


def test_church_arithmetic():
    two, three = church(2), church(3)
    plus = Ap(Ap(CHURCH_PLUS, two), two)
    times = Ap(Ap(CHURCH_TIMES, two), three)
    assert normalize(plus) == beta_normal(plus) == church(4)
    assert normalize(times) == beta_normal(times) == church(6)


@pytest.mark.parametrize("fuel", [1, 2, 10, 100, 1000, 10_000])
def test_omega_runs_out_of_fuel(fuel):
    with pytest.raises(FuelExhausted):
        normalize(OMEGA, fuel)


def test_fuel_must_be_positive():
    with pytest.raises(ValueError):
        normalize(Vr(x), 0)


def test_normalize_matches_stepper_and_is_idempotent():
    rng = random.Random(3)
    checked = 0
    for _ in range(300):
        t = sample_term(rng, 14, VARS)
        try:
            want = beta_normal(t, 200)
        except FuelExhausted:
            continue
        got = normalize(t, 10_000)
        assert got == want
        assert normalize(got) == got
        checked += 1
    assert checked > 250


def test_deep_terms_do_not_overflow():
    t = Vr(x)
    for _ in range(5000):
        t = Ap(Lm(y, Vr(y)), t)
    assert normalize(t, 10_000) == Vr(x)


# ---------------------------------------------------------------- worked examples


def test_example_values():
    p = parse_term
    assert length_of(p(r"\x. x x")) == 3
    assert clam(p(r"\x. \y. x")) == 2 and clam(p("x y")) == 0
    assert cfv(Ap(Vr(x), Vr(x)), x) == 2 and cfv(Lm(x, Vr(x)), x) == 0
    assert cbv(p(r"\x. \y. x")) == 1
    assert cbv(p(r"\x. x x (\y. y x)")) == 4
    assert can_eta(p(r"\x. (y z) x")) and not can_eta(p(r"\x. x x"))
    assert not can_eta(p(r"\x. (x z) x"))


def test_subst_via_recursor_examples():
    s = Ap(Vr(y), Vr(z))
    assert subst_via_recursor(Vr(x), s, x) == s
    t = parse_term(r"\y. y x")
    assert psubst_via_recursor(t, FinTermEnv()) == t
    for t in enum_terms(4, (x, y)):
        assert subst_via_recursor(t, s, x) == subst(t, s, x)
        rho = FinTermEnv({x: Vr(y), y: Lm(x, Vr(x))})
        assert psubst_via_recursor(t, rho) == psubst(t, rho)


@pytest.mark.parametrize("name", ["length", "clam", "cfv", "subst", "psubst", "cbv", "caneta"])
def test_cross_check_small(name):
    rep = cross_check(name, 4, (x, y), seed=1, random_trials=200, random_max_size=15)
    assert rep.passed, rep.summary()


def test_cross_check_rejects_unknown_name():
    with pytest.raises(ValueError, match="nosuchfn"):
        cross_check("nosuchfn", 3)
