"""Renaming-based recursion over terms.

``recurse`` defines ``f : Term -> A`` from constructor operations on ``A``
plus a renaming action, following the representative's structure and
alpha-renaming any binder that lands in the avoid-set ``X``.  Well-definedness
rests on the algebra's laws, which are checked separately (``check_ce_laws``
and friends); the engines never refuse an input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Generic, Iterable, Sequence, TypeVar

from .renset import (
    TERM_RENSET, TERM_VARS, RensetInstance, _shows, check_renset_laws, derived_fresh,
    law_rng, outside_vars, run_law,
)
from .reports import LawReport
from .terms import (
    App, Lam, Term, Var, VarId, alpha_variant, free_vars, fresh_var, from_debruijn,
    print_term, rename, sample_term, subst, Ap, Lm, Vr, _rename,
)

A = TypeVar("A")

FreshPolicy = Callable[[frozenset], VarId]


@dataclass(frozen=True)
class CERensetSpec(Generic[A]):
    base: RensetInstance
    vr: Callable[[VarId], A]
    ap: Callable[[A, A], A]
    lm: Callable[[VarId, A], A]

    @property
    def name(self) -> str:
        return self.base.name


@dataclass(frozen=True)
class FRCESpec(Generic[A]):
    base: RensetInstance
    vr: Callable[[VarId], A]
    ap: Callable[[Term, A, Term, A], A]
    lm: Callable[[VarId, Term, A], A]

    @property
    def name(self) -> str:
        return self.base.name


@dataclass(frozen=True)
class CESubstSpec(Generic[A]):
    name: str
    subst: Callable[[A, A, VarId], A]  # (a, b, x) -> a⟦b/x⟧
    vr: Callable[[VarId], A]
    ap: Callable[[A, A], A]
    lm: Callable[[VarId, A], A]
    equal: Callable[[A, A], bool]
    support_bound: Callable[[A], frozenset]
    sampler: Callable[[random.Random], A]
    show: Callable[[A], str] = str


def offset_fresh(offset: int) -> FreshPolicy:
    """A fresh-name policy that never picks an index below ``offset``."""
    low = frozenset(VarId(i) for i in range(offset))

    def pick(avoid):
        return fresh_var(avoid | low)

    return pick


# ---------------------------------------------------------------- engines


def recurse(
    spec: CERensetSpec,
    X: Iterable[VarId],
    t: Term,
    *,
    fresh: FreshPolicy = fresh_var,
    right_first: bool = False,
):
    """The unique ``f`` with ``f(Vr x) = vr x``, ``f(Ap t1 t2) = ap (f t1) (f t2)``,
    ``f(Lm x t) = lm x (f t)`` for ``x`` outside ``X``, commuting with renamings
    that avoid ``X``."""
    X = frozenset(X)
    vr, ap, lm = spec.vr, spec.ap, spec.lm

    def go(p):
        if isinstance(p, Var):
            return vr(p.v)
        if isinstance(p, App):
            if right_first:
                a2 = go(p.arg)
                return ap(go(p.fun), a2)
            return ap(go(p.fun), go(p.arg))
        x, body = p.binder, p.body
        if x in X:
            z = fresh(X | body.fv | {x})
            body, x = _rename(body, z, x), z
        return lm(x, go(body))

    return go(t.pre)


def prim_recurse(
    spec: FRCESpec,
    X: Iterable[VarId],
    t: Term,
    *,
    fresh: FreshPolicy = fresh_var,
):
    """Full primitive recursion: ``ap`` and ``lm`` also see the subterms."""
    X = frozenset(X)

    def go(p):
        if isinstance(p, Var):
            return spec.vr(p.v)
        if isinstance(p, App):
            return spec.ap(Term(p.fun), go(p.fun), Term(p.arg), go(p.arg))
        x, body = p.binder, p.body
        if x in X:
            z = fresh(X | body.fv | {x})
            body, x = _rename(body, z, x), z
        return spec.lm(x, Term(body), go(body))

    return go(t.pre)


def frce_from_ce(spec: CERensetSpec) -> FRCESpec:
    """View an iterative algebra as a primitive-recursive one ignoring the subterms."""
    return FRCESpec(
        base=spec.base,
        vr=spec.vr,
        ap=lambda t1, a1, t2, a2: spec.ap(a1, a2),
        lm=lambda x, t, a: spec.lm(x, a),
    )


# ---------------------------------------------------------------- CE laws


def _avoiding(X):
    def ok(*vs):
        return not any(v in X for v in vs)
    return ok


def check_ce_laws(
    spec: CERensetSpec,
    X: Iterable[VarId] = (),
    seed: int = 0,
    trials: int = 1000,
    *,
    samples: Iterable | None = None,
    variables: Sequence[VarId] | None = None,
    include_base: bool = True,
) -> list[LawReport]:
    """The renset laws of the base plus (S1)-(S5), variables drawn outside ``X``."""
    X = frozenset(X)
    base = spec.base
    R, eq = base.rename, base.equal
    vr, ap, lm = spec.vr, spec.ap, spec.lm
    avoid = _avoiding(X)

    def bound(a):
        return base.support_bound(a) | X

    def s1(a, x, y, z):
        if not avoid(x, y, z):
            return None
        lhs, rhs = R(vr(x), y, z), vr(y if x == z else x)
        return eq(lhs, rhs), lhs, rhs

    def s2(pair, y, z):
        if not avoid(y, z):
            return None
        a1, a2 = pair
        lhs, rhs = R(ap(a1, a2), y, z), ap(R(a1, y, z), R(a2, y, z))
        return eq(lhs, rhs), lhs, rhs

    def s3(a, x, y, z):
        if not avoid(x, y, z) or x in (y, z):
            return None
        lhs, rhs = R(lm(x, a), y, z), lm(x, R(a, y, z))
        return eq(lhs, rhs), lhs, rhs

    def s4(a, x, y):
        if not avoid(x, y):
            return None
        lhs, rhs = R(lm(x, a), y, x), lm(x, a)
        return eq(lhs, rhs), lhs, rhs

    def s5(a, x, y, z):
        if not avoid(x, y, z) or z == y:
            return None
        lhs = lm(x, R(a, z, y))
        rhs = lm(y, R(R(a, z, y), y, x))
        return eq(lhs, rhs), lhs, rhs

    samples = list(samples) if samples is not None else None
    pairs = list(zip(samples, samples[1:] + samples[:1])) if samples is not None else None
    shw = _shows(base.show)

    def pshow(v):
        return f"({shw(v[0])}, {shw(v[1])})" if isinstance(v, tuple) and len(v) == 2 else shw(v)

    tag = f"ce/{spec.name}" + (f" X={{{', '.join(map(str, sorted(X)))}}}" if X else "")
    reports = check_renset_laws(base, seed, trials, samples=samples, variables=variables) if include_base else []
    reports += [
        run_law(f"{tag}: (S1) Vr commutes with renaming", 3, s1, base.sampler, bound, shw,
                ("a", "x", "y", "z"), seed, trials, samples, variables),
        run_law(f"{tag}: (S2) Ap commutes with renaming", 2, s2,
                lambda rng: (base.sampler(rng), base.sampler(rng)),
                lambda p: bound(p[0]) | bound(p[1]), pshow,
                ("(a1, a2)", "y", "z"), seed, trials, pairs, variables),
        run_law(f"{tag}: (S3) Lm commutes with renaming away from its binder", 3, s3,
                base.sampler, bound, shw, ("a", "x", "y", "z"), seed, trials, samples, variables),
        run_law(f"{tag}: (S4) renaming the bound variable is void", 2, s4, base.sampler,
                bound, shw, ("a", "x", "y"), seed, trials, samples, variables),
        run_law(f"{tag}: (S5) bound variable can be renamed", 3, s5, base.sampler, bound,
                shw, ("a", "x", "y", "z"), seed, trials, samples, variables),
    ]
    return reports


def check_frce_laws(
    spec: FRCESpec,
    X: Iterable[VarId] = (),
    seed: int = 0,
    trials: int = 1000,
    *,
    term_vars: Sequence[VarId] = TERM_VARS,
    include_base: bool = True,
) -> list[LawReport]:
    """(RS1)-(RS5): as (S1)-(S5) with the subterm renamed alongside the value."""
    X = frozenset(X)
    base = spec.base
    R, eq = base.rename, base.equal
    avoid = _avoiding(X)
    tvars = sorted(set(term_vars) | X)

    def sample(rng):
        return (sample_term(rng, 8, tvars), base.sampler(rng),
                sample_term(rng, 8, tvars), base.sampler(rng))

    def bound(s):
        t1, a1, t2, a2 = s
        return t1.fv | t2.fv | base.support_bound(a1) | base.support_bound(a2) | X

    def show(v):
        if isinstance(v, tuple):
            return "(" + ", ".join(print_term(u) if isinstance(u, Term) else base.show(u) for u in v) + ")"
        return v if isinstance(v, str) else base.show(v)

    def rs1(s, x, y, z):
        if not avoid(x, y, z):
            return None
        lhs, rhs = R(spec.vr(x), y, z), spec.vr(y if x == z else x)
        return eq(lhs, rhs), lhs, rhs

    def rs2(s, y, z):
        if not avoid(y, z):
            return None
        t1, a1, t2, a2 = s
        lhs = R(spec.ap(t1, a1, t2, a2), y, z)
        rhs = spec.ap(rename(t1, y, z), R(a1, y, z), rename(t2, y, z), R(a2, y, z))
        return eq(lhs, rhs), lhs, rhs

    def rs3(s, x, y, z):
        if not avoid(x, y, z) or x in (y, z):
            return None
        t, a = s[0], s[1]
        lhs, rhs = R(spec.lm(x, t, a), y, z), spec.lm(x, rename(t, y, z), R(a, y, z))
        return eq(lhs, rhs), lhs, rhs

    def rs4(s, x, y):
        if not avoid(x, y):
            return None
        t, a = s[0], s[1]
        lhs, rhs = R(spec.lm(x, t, a), y, x), spec.lm(x, t, a)
        return eq(lhs, rhs), lhs, rhs

    def rs5(s, x, y, z):
        if not avoid(x, y, z) or z == y:
            return None
        t, a = s[0], s[1]
        lhs = spec.lm(x, rename(t, z, y), R(a, z, y))
        rhs = spec.lm(y, rename(rename(t, z, y), y, x), R(R(a, z, y), y, x))
        return eq(lhs, rhs), lhs, rhs

    tag = f"frce/{spec.name}"
    reports = check_renset_laws(base, seed, trials) if include_base else []
    for name, fn, names in [
        ("(RS1)", rs1, ("s", "x", "y", "z")),
        ("(RS2)", rs2, ("s", "y", "z")),
        ("(RS3)", rs3, ("s", "x", "y", "z")),
        ("(RS4)", rs4, ("s", "x", "y")),
        ("(RS5)", rs5, ("s", "x", "y", "z")),
    ]:
        reports.append(run_law(f"{tag}: {name}", len(names) - 1, fn, sample, bound, show,
                               names, seed, trials))
    return reports


# ---------------------------------------------------------------- conformance


def check_recursor_clauses(
    spec: CERensetSpec,
    X: Iterable[VarId] = (),
    seed: int = 0,
    trials: int = 1000,
    *,
    terms: Iterable[Term] | None = None,
    term_vars: Sequence[VarId] = TERM_VARS,
    max_size: int = 10,
) -> list[LawReport]:
    """Clauses (i)-(iv), alpha-invariance and independence of the fresh-name policy.

    With ``terms`` given, alpha-invariance and policy independence run
    exhaustively over them; the clauses are always sampled.
    """
    X = frozenset(X)
    eq, R, show = spec.base.equal, spec.base.rename, spec.base.show
    tvars = sorted(set(term_vars) | X)
    rng = law_rng(seed, f"clauses/{spec.name}")
    outside = [v for v in tvars if v not in X] + outside_vars(set(tvars) | X, 2)

    def f(t, **kw):
        return recurse(spec, X, t, **kw)

    tag = f"recursor/{spec.name}"
    r1 = LawReport(f"{tag}: (i) f(Vr x) = Vr^A x", seed=seed)
    r2 = LawReport(f"{tag}: (ii) f(Ap t1 t2) = Ap^A (f t1) (f t2)", seed=seed)
    r3 = LawReport(f"{tag}: (iii) f(Lm x t) = Lm^A x (f t), x outside X", seed=seed)
    r4 = LawReport(f"{tag}: (iv) f(t[y/z]) = (f t)[y/z], y,z outside X", seed=seed)
    ra = LawReport(f"{tag}: alpha-invariance", seed=seed)
    rp = LawReport(f"{tag}: fresh-policy and traversal independence", seed=seed)

    def rec(rep, ok, inputs, lhs, rhs):
        if ok:
            rep.record(True, "")
        else:
            rep.record(False, inputs, show(lhs), show(rhs))

    for _ in range(trials):
        t1, t2 = sample_term(rng, max_size, tvars), sample_term(rng, max_size, tvars)
        x = rng.choice(tvars)
        lhs, rhs = f(Vr(x)), spec.vr(x)
        rec(r1, eq(lhs, rhs), f"x={x}", lhs, rhs)
        lhs, rhs = f(Ap(t1, t2)), spec.ap(f(t1), f(t2))
        rec(r2, eq(lhs, rhs), f"t1={t1}, t2={t2}", lhs, rhs)
        xo = rng.choice(outside)
        lhs, rhs = f(Lm(xo, t1)), spec.lm(xo, f(t1))
        rec(r3, eq(lhs, rhs), f"x={xo}, t={t1}", lhs, rhs)
        y, z = rng.choice(outside), rng.choice(outside)
        lhs, rhs = f(rename(t1, y, z)), R(f(t1), y, z)
        rec(r4, eq(lhs, rhs), f"t={t1}, y={y}, z={z}", lhs, rhs)

    def invariance(t):
        variant = alpha_variant(t, rng, tvars)
        canon = from_debruijn(t.key)
        base = f(t)
        for u in (variant, canon):
            other = f(u)
            if not eq(base, other):
                rec(ra, False, f"t={print_term(t)}, u={print_term(u)}", base, other)
                return
        rec(ra, True, "", None, None)
        other = f(t, fresh=offset_fresh(len(tvars) + 5), right_first=True)
        rec(rp, eq(base, other), f"t={print_term(t)}", base, other)

    if terms is not None:
        for t in terms:
            invariance(t)
    else:
        for _ in range(trials):
            invariance(sample_term(rng, max_size, tvars))
    return [r1, r2, r3, r4, ra, rp]


def check_prim_clauses(
    spec: FRCESpec,
    X: Iterable[VarId] = (),
    seed: int = 0,
    trials: int = 1000,
    *,
    term_vars: Sequence[VarId] = TERM_VARS,
    max_size: int = 10,
) -> list[LawReport]:
    """Clauses (i)-(iv) for ``prim_recurse`` plus alpha-invariance."""
    X = frozenset(X)
    eq, R, show = spec.base.equal, spec.base.rename, spec.base.show
    tvars = sorted(set(term_vars) | X)
    rng = law_rng(seed, f"prim-clauses/{spec.name}")
    outside = [v for v in tvars if v not in X] + outside_vars(set(tvars) | X, 2)

    def f(t, **kw):
        return prim_recurse(spec, X, t, **kw)

    tag = f"prim-recursor/{spec.name}"
    reps = [LawReport(f"{tag}: {n}", seed=seed) for n in (
        "(i) f(Vr x) = Vr^A x", "(ii) f(Ap t1 t2) = Ap^A t1 (f t1) t2 (f t2)",
        "(iii) f(Lm x t) = Lm^A x t (f t), x outside X", "(iv) f(t[y/z]) = (f t)[y/z]",
        "alpha-invariance and fresh-policy independence")]
    for _ in range(trials):
        t1, t2 = sample_term(rng, max_size, tvars), sample_term(rng, max_size, tvars)
        x, xo = rng.choice(tvars), rng.choice(outside)
        y, z = rng.choice(outside), rng.choice(outside)
        checks = [
            (f(Vr(x)), spec.vr(x), f"x={x}"),
            (f(Ap(t1, t2)), spec.ap(t1, f(t1), t2, f(t2)), f"t1={t1}, t2={t2}"),
            (f(Lm(xo, t1)), spec.lm(xo, t1, f(t1)), f"x={xo}, t={t1}"),
            (f(rename(t1, y, z)), R(f(t1), y, z), f"t={t1}, y={y}, z={z}"),
            (f(alpha_variant(t1, rng, tvars)), f(t1, fresh=offset_fresh(len(tvars) + 5)),
             f"t={t1}"),
        ]
        for rep, (lhs, rhs, inputs) in zip(reps, checks):
            ok = eq(lhs, rhs)
            rep.record(ok, inputs if not ok else "", show(lhs) if not ok else "",
                       show(rhs) if not ok else "")
    return reps


# ---------------------------------------------------------------- substitutive sets


def induced_renset(spec: CESubstSpec) -> RensetInstance:
    """Renaming read off substitution: ``a[y/x] = a⟦Vr y / x⟧``."""
    return RensetInstance(
        name=f"induced({spec.name})",
        rename=lambda a, y, x: spec.subst(a, spec.vr(y), x),
        equal=spec.equal,
        support_bound=spec.support_bound,
        sampler=spec.sampler,
        show=spec.show,
    )


def subst_ce_spec(spec: CESubstSpec) -> CERensetSpec:
    return CERensetSpec(base=induced_renset(spec), vr=spec.vr, ap=spec.ap, lm=spec.lm)


def subst_recurse(spec: CESubstSpec, t: Term):
    return recurse(subst_ce_spec(spec), (), t)


def check_subst_laws(
    spec: CESubstSpec,
    seed: int = 0,
    trials: int = 1000,
    *,
    samples: Iterable | None = None,
    variables: Sequence[VarId] | None = None,
) -> list[LawReport]:
    """Substitutive-set axioms, CE axioms (S1)-(S4) and the three freshness consequences.

    (S3) is read with the same substitute ``b⟦z/x⟧`` on both sides, and the
    freshness consequences are read as ``x2 # a`` in (2) and ``x # c`` in (3);
    these are the readings that hold for terms.
    """
    S, V, eq = spec.subst, spec.vr, spec.equal
    ren = induced_renset(spec)

    def fresh(x, a):
        return derived_fresh(ren, x, a)

    def sub(a, x):
        return lambda b: S(a, b, x)

    def bound(triple):
        return frozenset().union(*(spec.support_bound(u) for u in triple))

    def sample(rng):
        return (spec.sampler(rng), spec.sampler(rng), spec.sampler(rng))

    def show(v):
        if isinstance(v, tuple):
            return "(" + ", ".join(spec.show(u) for u in v) + ")"
        return v if isinstance(v, str) else spec.show(v)

    def identity(s, x):
        a = s[0]
        lhs = S(a, V(x), x)
        return eq(lhs, a), lhs, a

    def idempotence(s, x, y, z):
        if x == y or y == z:
            return None
        a, b = s[0], s[1]
        inner = S(a, S(b, V(z), y), y)
        lhs = S(inner, V(x), y)
        return eq(lhs, inner), lhs, inner

    def chaining(s, y, x1, x2):
        if y == x2:
            return None
        a, b = s[0], s[1]
        ay = S(a, V(y), x2)
        lhs, rhs = S(S(ay, V(x2), x1), b, x2), S(ay, b, x1)
        return eq(lhs, rhs), lhs, rhs

    def commutativity(s, x1, x2, y1, y2):
        if y2 == y1 or y1 == x1 or x1 == x2:
            return None
        a, b, c = s
        b2, c2 = S(b, V(y2), y1), S(c, V(x2), x1)
        lhs, rhs = S(S(a, b2, x1), c2, y1), S(S(a, c2, y1), b2, x1)
        return eq(lhs, rhs), lhs, rhs

    def ce1(s, x, y):
        b = s[1]
        lhs = S(V(x), b, y)
        rhs = b if x == y else V(x)
        return eq(lhs, rhs), lhs, rhs

    def ce2(s, y):
        a1, a2, b = s
        lhs, rhs = S(spec.ap(a1, a2), b, y), spec.ap(S(a1, b, y), S(a2, b, y))
        return eq(lhs, rhs), lhs, rhs

    def ce3(s, x, y, z):
        if x == z:
            return None
        a, b = s[0], s[1]
        b2 = S(b, V(z), x)
        lhs = S(spec.lm(x, a), b2, y)
        rhs = spec.lm(x, a) if x == y else spec.lm(x, S(a, b2, y))
        return eq(lhs, rhs), lhs, rhs

    def ce4(s, x, y, z):
        if z == y:
            return None
        a = s[0]
        az = S(a, V(z), y)
        lhs, rhs = spec.lm(x, az), spec.lm(y, S(az, V(y), x))
        return eq(lhs, rhs), lhs, rhs

    def p1(s, x, y):
        a, b = s[0], s[1]
        if x == y or not fresh(y, b):
            return None
        lhs, rhs = S(S(a, b, y), V(x), y), S(a, b, y)
        return eq(lhs, rhs), lhs, rhs

    def p2(s, x1, x2):
        a, b = s[0], s[1]
        if not fresh(x2, a):
            return None
        lhs, rhs = S(S(a, V(x2), x1), b, x2), S(a, b, x1)
        return eq(lhs, rhs), lhs, rhs

    def p3(s, x, y):
        a, b, c = s
        if x == y or not fresh(x, c) or not fresh(y, b):
            return None
        lhs, rhs = S(S(a, b, x), c, y), S(S(a, c, y), b, x)
        return eq(lhs, rhs), lhs, rhs

    triples = None
    if samples is not None:
        xs = list(samples)
        n = len(xs)
        triples = [(xs[i], xs[(i + 1) % n], xs[(i + 2) % n]) for i in range(n)]
    tag = f"subst/{spec.name}"
    laws = [
        ("Identity", identity, ("(a,b,c)", "x")),
        ("Idempotence", idempotence, ("(a,b,c)", "x", "y", "z")),
        ("Chaining", chaining, ("(a,b,c)", "y", "x1", "x2")),
        ("Commutativity", commutativity, ("(a,b,c)", "x1", "x2", "y1", "y2")),
        ("(S1) Vr", ce1, ("(a,b,c)", "x", "y")),
        ("(S2) Ap", ce2, ("(a1,a2,b)", "y")),
        ("(S3) Lm, substitute b⟦z/x⟧ on both sides", ce3, ("(a,b,c)", "x", "y", "z")),
        ("(S4) Lm bound-variable renaming", ce4, ("(a,b,c)", "x", "y", "z")),
        ("freshness consequence (1) x != y, y # b", p1, ("(a,b,c)", "x", "y")),
        ("freshness consequence (2) x2 # a", p2, ("(a,b,c)", "x1", "x2")),
        ("freshness consequence (3) x != y, x # c, y # b", p3, ("(a,b,c)", "x", "y")),
    ]
    reports = []
    for name, fn, names in laws:
        rep = run_law(f"{tag}: {name}", len(names) - 1, fn, sample, bound, show, names,
                      seed, trials, triples, variables)
        if name.startswith("(S3)"):
            rep.note = "reading: the substitute b⟦z/x⟧ appears on both sides"
        reports.append(rep)
    return reports


def check_subst_recurse(spec: CESubstSpec, seed: int = 0, trials: int = 1000,
                        *, term_vars: Sequence[VarId] = TERM_VARS, max_size: int = 8) -> LawReport:
    """``f(t⟦s/x⟧) = (f t)⟦f s / x⟧`` for the recursor of a CE substitutive set."""
    rep = LawReport(f"subst-recursor/{spec.name}: commutes with substitution", seed=seed)
    rng = law_rng(seed, rep.law)
    for _ in range(trials):
        t, s = sample_term(rng, max_size, term_vars), sample_term(rng, 4, term_vars)
        x = rng.choice(term_vars)
        lhs = subst_recurse(spec, subst(t, s, x))
        rhs = spec.subst(subst_recurse(spec, t), subst_recurse(spec, s), x)
        ok = spec.equal(lhs, rhs)
        rep.record(ok, f"t={t}, s={s}, x={x}" if not ok else "",
                   spec.show(lhs) if not ok else "", spec.show(rhs) if not ok else "")
    return rep


# ---------------------------------------------------------------- shipped specs


TERM_CE: CERensetSpec = CERensetSpec(base=TERM_RENSET, vr=Vr, ap=Ap, lm=Lm)

TERM_SUBST: CESubstSpec = CESubstSpec(
    name="term",
    subst=subst,
    vr=Vr,
    ap=Ap,
    lm=Lm,
    equal=TERM_RENSET.equal,
    support_bound=free_vars,
    sampler=TERM_RENSET.sampler,
    show=print_term,
)

NAT_RENSET: RensetInstance = RensetInstance(
    name="nat",
    rename=lambda n, new, old: n,
    equal=lambda a, b: a == b,
    support_bound=lambda n: frozenset(),
    sampler=lambda rng: rng.randint(0, 20),
)

# lm ignores its variable: (S5) fails whenever the body depends on the binder
BROKEN_TERM_CE: CERensetSpec = CERensetSpec(
    base=RensetInstance(
        name="term-lm-forgets-binder",
        rename=TERM_RENSET.rename,
        equal=TERM_RENSET.equal,
        support_bound=TERM_RENSET.support_bound,
        sampler=TERM_RENSET.sampler,
        show=TERM_RENSET.show,
    ),
    vr=Vr,
    ap=Ap,
    lm=lambda x, t: Lm(VarId(0), t),
)


def _is_lam(t: Term) -> bool:
    return isinstance(t.pre, Lam)


REDEX_COUNT: FRCESpec = FRCESpec(
    base=RensetInstance(
        name="redex-count",
        rename=NAT_RENSET.rename,
        equal=NAT_RENSET.equal,
        support_bound=NAT_RENSET.support_bound,
        sampler=NAT_RENSET.sampler,
    ),
    vr=lambda x: 0,
    ap=lambda t1, a1, t2, a2: a1 + a2 + (1 if _is_lam(t1) else 0),
    lm=lambda x, t, a: a,
)


def count_redexes(t: Term) -> int:
    """Number of beta-redexes, by primitive recursion."""
    return prim_recurse(REDEX_COUNT, (), t)
