"""Semantic interpretation of terms, normalization by evaluation, and worked examples.

A semantic domain supplies ``ap : D x D -> D`` and ``lm : (D -> D) -> D``.
Interpretations ``Env -> D`` then form a CE renset, so :func:`sem` comes out
of the renaming-based recursor.  The same pattern, with ``D`` a domain of
neutral values and closures, gives :func:`normalize`.
"""

from __future__ import annotations

import configparser
import random
import sys
import threading
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Generic, Sequence, TypeVar

from .recursion import (
    NAT_RENSET, CERensetSpec, TERM_CE, recurse,
)
from .renset import RensetInstance, TERM_RENSET, derived_fresh, law_rng, outside_vars
from .reports import LawReport
from .terms import (
    App, FinTermEnv, Lam, Term, Var, VarId, enum_terms, fresh_var,
    print_term, psubst, sample_term, subst, swap_var, var, Vr, Ap, Lm, _subst,
)

D = TypeVar("D")


# ---------------------------------------------------------------- domains


@dataclass(frozen=True)
class SemDomain(Generic[D]):
    ap: Callable[[D, D], D]
    lm: Callable[[Callable[[D], D]], D]
    equal_probe: tuple = ()
    equal: Callable[[D, D], bool] = lambda a, b: a == b
    name: str = "domain"
    environments: int = 50


def fixture_domain(path: str | Path | None = None) -> SemDomain[int]:
    """The arithmetic domain ``Z mod p`` described by a fixture config file."""
    cp = configparser.ConfigParser()
    if path is None:
        cp.read_string(resources.files("bindkit").joinpath("fixtures.cfg").read_text())
    else:
        with open(path, encoding="utf-8") as fh:
            cp.read_file(fh)
    sec = cp["domain"]

    def ints(key):
        return tuple(int(s) for s in sec[key].split(","))

    m = sec.getint("modulus")
    c0, c1, c2 = ints("ap_coefficients")
    points, weights = ints("lm_points"), ints("lm_weights")
    if len(points) != len(weights):
        raise ValueError("lm_points and lm_weights must have the same length")

    def ap(d, e):
        return (c0 + c1 * d + c2 * e) % m

    def lm(f):
        return sum(w * f(p) for p, w in zip(points, weights)) % m

    return SemDomain(
        ap=ap, lm=lm, equal_probe=tuple(v % m for v in ints("probe")),
        name=f"Z/{m}", environments=sec.getint("environments", fallback=50),
    )


ONE_POINT: SemDomain = SemDomain(
    ap=lambda d, e: 0, lm=lambda f: 0, equal_probe=(0,), name="one-point",
)


# ---------------------------------------------------------------- environments


class Env(Generic[D]):
    """``ξ : Var -> D`` as a default function plus finitely many overrides."""

    __slots__ = ("default", "overrides")

    def __init__(self, default: Callable[[VarId], D], overrides: dict | None = None):
        self.default = default
        self.overrides = dict(overrides or {})

    @classmethod
    def const(cls, value) -> "Env":
        return cls(lambda v: value)

    def __call__(self, v: VarId):
        o = self.overrides
        return o[v] if v in o else self.default(v)

    def update(self, x: VarId, d) -> "Env":
        """``ξ⟨x := d⟩``."""
        o = dict(self.overrides)
        o[x] = d
        return Env(self.default, o)

    def swapped(self, x1: VarId, x2: VarId) -> "Env":
        """``ξ ∘ (x1 x2)``."""
        return Env(lambda v: self(swap_var(v, x1, x2)))

    def __repr__(self):
        items = ", ".join(f"{k}:={v!r}" for k, v in sorted(self.overrides.items()))
        return f"Env<{items}>"


@dataclass(frozen=True)
class Interp(Generic[D]):
    """An interpretation ``Env -> D`` with a tracked bound on the variables it reads."""

    run: Callable[[Env], D]
    support: frozenset = frozenset()
    label: str = "<interp>"

    def __call__(self, xi: Env):
        return self.run(xi)

    def __str__(self):
        return self.label


def probe_envs(dom: SemDomain, vars_in_play: Sequence[VarId]) -> list[Env]:
    """A deterministic family of environments overriding every variable in play."""
    probe = dom.equal_probe or (0,)
    vs = sorted(set(vars_in_play))
    rng = random.Random("envs:" + ",".join(str(v.index) for v in vs))
    n = len(probe)
    envs = []
    for k in range(dom.environments):
        default = (lambda v, k=k: probe[(k + 3 * v.index) % n])
        envs.append(Env(default, {v: rng.choice(probe) for v in vs}))
    return envs


def interp_equal(dom: SemDomain, i1: Interp, i2: Interp, extra: Sequence[VarId] = ()) -> bool:
    vs = set(i1.support | i2.support | set(extra))
    vs |= set(outside_vars(vs, 1))
    return all(dom.equal(i1.run(xi), i2.run(xi)) for xi in probe_envs(dom, vs))


def interp_rename(i: Interp, y: VarId, x: VarId) -> Interp:
    """``i[y/x] ξ = i(ξ⟨x := ξ y⟩)``."""
    if x == y:
        return i
    sup = (i.support - {x}) | ({y} if x in i.support else set())
    return Interp(lambda xi: i.run(xi.update(x, xi(y))), frozenset(sup), f"{i.label}[{y}/{x}]")


def interp_swap(i: Interp, x1: VarId, x2: VarId) -> Interp:
    """``i[x1 ∧ x2] ξ = i(ξ ∘ (x1 x2))``."""
    sup = frozenset(swap_var(v, x1, x2) for v in i.support)
    return Interp(lambda xi: i.run(xi.swapped(x1, x2)), sup, f"{i.label}[{x1}∧{x2}]")


def interp_ce_spec(dom: SemDomain, *, sample_vars: Sequence[VarId] = tuple(var(i) for i in range(4)),
                   sample_size: int = 7) -> CERensetSpec:
    """Interpretations as a CE renset: ``Vr^I x ξ = ξ x``, ``Ap^I``, ``Lm^I x i ξ = lm(d ↦ i(ξ⟨x:=d⟩))``."""

    def vr(x):
        return Interp(lambda xi: xi(x), frozenset({x}), str(x))

    def ap(i1, i2):
        return Interp(lambda xi: dom.ap(i1.run(xi), i2.run(xi)), i1.support | i2.support,
                      f"({i1.label} {i2.label})")

    def lm(x, i):
        return Interp(lambda xi: dom.lm(lambda d: i.run(xi.update(x, d))), i.support - {x},
                      f"(\\{x}. {i.label})")

    spec_box = []

    def sampler(rng):
        t = sample_term(rng, sample_size, sample_vars)
        return recurse(spec_box[0], (), t)

    base = RensetInstance(
        name=f"interp[{dom.name}]",
        rename=interp_rename,
        equal=lambda a, b: interp_equal(dom, a, b),
        support_bound=lambda i: i.support,
        sampler=sampler,
        show=str,
    )
    spec = CERensetSpec(base=base, vr=vr, ap=ap, lm=lm)
    spec_box.append(spec)
    return spec


def interpret(dom: SemDomain, t: Term) -> Interp:
    return recurse(interp_ce_spec(dom), (), t)


def sem(dom: SemDomain, t: Term, xi: Env):
    """``sem t ξ``, defined by renaming-based recursion into interpretations."""
    return interpret(dom, t).run(xi)


# ---------------------------------------------------------------- FCB contrast


def fcb_contrast_report(dom: SemDomain, seed: int = 0, trials: int = 200,
                        vars: Sequence[VarId] = tuple(var(i) for i in range(4))) -> tuple[LawReport, LawReport]:
    """(a) renaming-freshness of ``x`` in ``Lm^I x i``; (b) its swapping analogue.

    (a) is expected to pass.  (b) is expected to fail: for any finite set of
    candidate support variables, ``i = (ξ ↦ ξ y0)`` with ``y0`` chosen outside
    it makes ``Lm^I x i`` change under the swap ``x ∧ y0``.
    """
    spec = interp_ce_spec(dom, sample_vars=vars)
    inst = spec.base
    rng = law_rng(seed, "fcb")
    rep_a = LawReport(f"fcb[{dom.name}]: (a) x is renaming-fresh in Lm^I x i", seed=seed)
    rep_b = LawReport(f"fcb[{dom.name}]: (b) x is swapping-fresh in Lm^I x i", seed=seed,
                      note="a failure here is the expected counterexample")

    def probe_var(y0):
        return Interp(lambda xi: xi(y0), frozenset({y0}), f"(ξ ↦ ξ {y0})")

    for _ in range(trials):
        x = rng.choice(vars)
        finite = set(rng.sample(list(vars), rng.randint(1, len(vars)))) | {x}
        y0 = outside_vars(finite, 1)[0]
        i = inst.sampler(rng) if rng.random() < 0.5 else probe_var(y0)
        a = spec.lm(x, i)
        for y in (rng.choice(vars), y0):
            lhs = inst.rename(a, y, x)
            ok = inst.equal(lhs, a)
            rep_a.record(ok, "" if ok else f"x={x}, y={y}, i={i}")
        ok = derived_fresh(inst, x, a)
        rep_a.record(ok, "" if ok else f"derived freshness, x={x}, i={i}")

        w = probe_var(y0)
        b = spec.lm(x, w)
        swapped = interp_swap(b, x, y0)
        ok = interp_equal(dom, swapped, b, extra=(x, y0))
        rep_b.record(ok, "" if ok else f"x={x}, i={w}, candidate support={{{', '.join(map(str, sorted(finite)))}}}, swap {x}∧{y0}",
                     "" if ok else swapped.label, "" if ok else b.label)
    return rep_a, rep_b


# ---------------------------------------------------------------- deep recursion


def run_deep(fn: Callable[[], D], stack_mb: int = 1024, recursion_limit: int = 2_000_000) -> D:
    """Run ``fn`` in a worker thread with a large stack and recursion limit."""
    box: dict = {}

    def target():
        try:
            box["value"] = fn()
        except BaseException as exc:  # re-raised in the caller
            box["error"] = exc

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, recursion_limit))
    old_size = threading.stack_size()
    threading.stack_size(stack_mb * 1024 * 1024)
    try:
        worker = threading.Thread(target=target, name="bindkit-deep")
        worker.start()
    finally:
        threading.stack_size(old_size)
    worker.join()
    sys.setrecursionlimit(old_limit)
    if "error" in box:
        raise box["error"]
    return box["value"]


# ---------------------------------------------------------------- NbE


class FuelExhausted(RuntimeError):
    """The beta-step budget ran out; the term probably has no normal form."""


@dataclass(frozen=True)
class Neutral:
    head: VarId
    spine: tuple = ()


@dataclass(frozen=True, eq=False)
class Closure:
    fn: Callable[["SemVal"], "SemVal"]


SemVal = Neutral | Closure


class _Fuel:
    __slots__ = ("left",)

    def __init__(self, n):
        self.left = n

    def tick(self):
        if self.left <= 0:
            raise FuelExhausted("fuel exhausted")
        self.left -= 1


def nbe_domain(fuel: _Fuel) -> SemDomain:
    def ap(f, a):
        if isinstance(f, Closure):
            fuel.tick()
            return f.fn(a)
        return Neutral(f.head, f.spine + (a,))

    return SemDomain(ap=ap, lm=Closure, name="nbe")


def _reify(v, used: frozenset, fuel: _Fuel):
    if isinstance(v, Neutral):
        p = Var(v.head)
        for a in v.spine:
            p = App(p, _reify(a, used, fuel))
        return p
    z = fresh_var(used)
    return Lam(z, _reify(v.fn(Neutral(z)), used | {z}, fuel))


def normalize(t: Term, fuel: int = 10_000) -> Term:
    """Beta-normal form by evaluation into neutral values and closures, then read-back."""
    if fuel < 1:
        raise ValueError("fuel must be at least 1")

    def go():
        budget = _Fuel(fuel)
        val = interpret(nbe_domain(budget), t).run(Env(Neutral))
        return Term(_reify(val, t.fv, budget))

    return run_deep(go)


def _step(p):
    """One normal-order beta step on a pre-term, or ``None`` at normal form."""
    if isinstance(p, Var):
        return None
    if isinstance(p, Lam):
        b = _step(p.body)
        return None if b is None else Lam(p.binder, b)
    if isinstance(p.fun, Lam):
        return _subst(p.fun.body, p.arg, p.fun.binder)
    f = _step(p.fun)
    if f is not None:
        return App(f, p.arg)
    a = _step(p.arg)
    return None if a is None else App(p.fun, a)


def beta_normal(t: Term, fuel: int = 10_000) -> Term:
    """Normal-order reduction with capture-avoiding substitution; the reference for :func:`normalize`."""

    def go():
        p, n = t.pre, fuel
        while True:
            q = _step(p)
            if q is None:
                return Term(p)
            if n <= 0:
                raise FuelExhausted("fuel exhausted")
            n -= 1
            p = q

    return run_deep(go)


def church(n: int) -> Term:
    f, x = VarId(0, "f"), VarId(1, "x")
    body = Vr(x)
    for _ in range(n):
        body = Ap(Vr(f), body)
    return Lm(f, Lm(x, body))


def _combinator(src: str) -> Term:
    from .terms import parse_term
    return parse_term(src)


CHURCH_PLUS = _combinator(r"\m. \n. \f. \x. m f (n f x)")
CHURCH_TIMES = _combinator(r"\m. \n. \f. m (n f)")
OMEGA = _combinator(r"(\x. x x) (\x. x x)")


# ---------------------------------------------------------------- worked examples


def _nat_spec(name, vr, ap, lm) -> CERensetSpec:
    base = RensetInstance(name=name, rename=NAT_RENSET.rename, equal=NAT_RENSET.equal,
                          support_bound=NAT_RENSET.support_bound, sampler=NAT_RENSET.sampler)
    return CERensetSpec(base=base, vr=vr, ap=ap, lm=lm)


LENGTH_SPEC = _nat_spec("length", lambda x: 1, lambda a, b: max(a, b) + 1, lambda x, a: a + 1)
CLAM_SPEC = _nat_spec("clam", lambda x: 0, lambda a, b: a + b, lambda x, a: a + 1)


def _counter_rename(c: Counter, z: VarId, y: VarId) -> Counter:
    if z == y or c[y] == 0:
        return c
    out = Counter(c)
    out[z] += out.pop(y)
    return out


def _counter_sample(rng):
    return Counter({var(i): rng.randint(1, 3) for i in range(4) if rng.random() < 0.5})


CFV_SPEC = CERensetSpec(
    base=RensetInstance(
        name="cfv",
        rename=_counter_rename,
        equal=lambda a, b: +a == +b,
        support_bound=lambda c: frozenset(v for v, n in c.items() if n > 0),
        sampler=_counter_sample,
        show=lambda c: "{" + ", ".join(f"{v}:{n}" for v, n in sorted(c.items()) if n) + "}",
    ),
    vr=lambda y: Counter({y: 1}),
    ap=lambda a, b: a + b,
    lm=lambda y, a: Counter({v: n for v, n in a.items() if v != y}),
)


def length_of(t: Term) -> int:
    return recurse(LENGTH_SPEC, (), t)


def clam(t: Term) -> int:
    return recurse(CLAM_SPEC, (), t)


def cfv(t: Term, x: VarId) -> int:
    return recurse(CFV_SPEC, (), t)[x]


CBV_DOMAIN: SemDomain = SemDomain(ap=lambda a, b: a + b, lm=lambda f: f(1), equal_probe=(0, 1, 2),
                                  name="nat")
BOOL_DOMAIN: SemDomain = SemDomain(ap=lambda a, b: a and b, lm=lambda f: f(True),
                                   equal_probe=(False, True), name="bool")


def cbv(t: Term) -> int:
    """Bound-variable occurrences, as ``cbvs t (x ↦ 0)``."""
    return sem(CBV_DOMAIN, t, Env.const(0))


def can_eta(t: Term) -> bool:
    p = t.pre
    if isinstance(p, Lam) and isinstance(p.body, App) and p.body.arg == Var(p.binder):
        x = p.binder
        return bool(sem(BOOL_DOMAIN, Term(p.body.fun), Env(lambda v: True, {x: False})))
    return False


def subst_spec(s: Term, x: VarId) -> tuple[CERensetSpec, frozenset]:
    spec = CERensetSpec(base=TERM_RENSET, vr=lambda y: s if y == x else Vr(y), ap=Ap, lm=Lm)
    return spec, frozenset({x}) | s.fv


def psubst_spec(rho: FinTermEnv) -> tuple[CERensetSpec, frozenset]:
    spec = CERensetSpec(base=TERM_RENSET, vr=rho, ap=Ap, lm=Lm)
    return spec, rho.support | rho.range_fv


def subst_via_recursor(t: Term, s: Term, x: VarId) -> Term:
    spec, X = subst_spec(s, x)
    return recurse(spec, X, t)


def psubst_via_recursor(t: Term, rho: FinTermEnv) -> Term:
    spec, X = psubst_spec(rho)
    return recurse(spec, X, t)


# structural oracles on pre-terms


def _length_oracle(p) -> int:
    if isinstance(p, Var):
        return 1
    if isinstance(p, App):
        return max(_length_oracle(p.fun), _length_oracle(p.arg)) + 1
    return _length_oracle(p.body) + 1


def _clam_oracle(p) -> int:
    if isinstance(p, Var):
        return 0
    if isinstance(p, App):
        return _clam_oracle(p.fun) + _clam_oracle(p.arg)
    return _clam_oracle(p.body) + 1


def _cfv_oracle(p, x, bound=frozenset()) -> int:
    if isinstance(p, Var):
        return int(p.v == x and x not in bound)
    if isinstance(p, App):
        return _cfv_oracle(p.fun, x, bound) + _cfv_oracle(p.arg, x, bound)
    return _cfv_oracle(p.body, x, bound | {p.binder})


def _cbv_oracle(p, bound=frozenset()) -> int:
    if isinstance(p, Var):
        return int(p.v in bound)
    if isinstance(p, App):
        return _cbv_oracle(p.fun, bound) + _cbv_oracle(p.arg, bound)
    return _cbv_oracle(p.body, bound | {p.binder})


def _can_eta_oracle(p) -> bool:
    return (isinstance(p, Lam) and isinstance(p.body, App) and p.body.arg == Var(p.binder)
            and p.binder not in p.body.fun.fv)


def _substitutes(vars):
    vs = sorted(vars)
    a, b = vs[0], vs[-1]
    return [Vr(v) for v in vs] + [Ap(Vr(a), Vr(b)), Lm(a, Ap(Vr(a), Vr(b))), Lm(b, Vr(a))]


def _random_rho(rng, vars):
    vs = sorted(vars)
    return FinTermEnv({v: sample_term(rng, 4, vs) for v in vs if rng.random() < 0.6})


def _pair(name, vars, rng):
    """(inputs, engine value, oracle value) for one term, as a function of the term."""
    vs = sorted(vars)
    subs = _substitutes(vs)
    if name == "length":
        return lambda t: ("", length_of(t), _length_oracle(t.pre))
    if name == "clam":
        return lambda t: ("", clam(t), _clam_oracle(t.pre))
    if name == "cbv":
        return lambda t: ("", cbv(t), _cbv_oracle(t.pre))
    if name == "caneta":
        def f(t):
            x = rng.choice(vs)
            u = Lm(x, Ap(t, Vr(x)))
            return f"x={x}", (can_eta(t), can_eta(u)), (_can_eta_oracle(t.pre), _can_eta_oracle(u.pre))
        return f
    if name == "cfv":
        probe = vs + outside_vars(vs, 1)

        def f(t):
            got = tuple(cfv(t, x) for x in probe)
            return "", got, tuple(_cfv_oracle(t.pre, x) for x in probe)
        return f
    if name == "subst":
        def f(t):
            s, x = rng.choice(subs), rng.choice(vs)
            return f"s={s}, x={x}", subst_via_recursor(t, s, x), subst(t, s, x)
        return f
    if name == "psubst":
        def f(t):
            rho = _random_rho(rng, vs)
            return f"rho={rho}", psubst_via_recursor(t, rho), psubst(t, rho)
        return f
    raise ValueError(f"unknown function {name!r}; expected one of {', '.join(CROSS_CHECKS)}")


CROSS_CHECKS = ("length", "clam", "cfv", "subst", "psubst", "cbv", "caneta")


def cross_check(name: str, max_size: int = 6, vars: Sequence[VarId] = (var(0), var(1), var(2)),
                seed: int = 0, random_trials: int = 10_000, random_max_size: int = 25) -> LawReport:
    """Engine versus structural oracle: exhaustive on small terms, then random larger ones."""
    if name not in CROSS_CHECKS:
        raise ValueError(f"unknown function {name!r}; expected one of {', '.join(CROSS_CHECKS)}")
    rng = law_rng(seed, f"crosscheck/{name}")
    f = _pair(name, vars, rng)
    rep = LawReport(f"crosscheck/{name}: engine = oracle", seed=seed)

    def one(t):
        inputs, got, want = f(t)
        ok = got == want
        rep.record(ok, "" if ok else f"t={print_term(t)} {inputs}".strip(),
                   "" if ok else _show(got), "" if ok else _show(want))

    for t in enum_terms(max_size, vars):
        one(t)
    for _ in range(random_trials):
        one(sample_term(rng, random_max_size, vars))
    return rep


def _show(v):
    return print_term(v) if isinstance(v, Term) else str(v)


# ---------------------------------------------------------------- shipped specs


def shipped_specs() -> list[tuple[str, CERensetSpec, frozenset]]:
    """Every syntactic recursor spec shipped with the package, with its avoid-set."""
    x, y = var(0), var(1)
    s = Ap(Vr(y), Lm(x, Vr(x)))
    rho = FinTermEnv({x: Vr(var(2)), var(2): Ap(Vr(x), Vr(y))})
    return [
        ("term", TERM_CE, frozenset()),
        ("length", LENGTH_SPEC, frozenset()),
        ("clam", CLAM_SPEC, frozenset()),
        ("cfv", CFV_SPEC, frozenset()),
        ("subst", *subst_spec(s, x)),
        ("psubst", *psubst_spec(rho)),
    ]
