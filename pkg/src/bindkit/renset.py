"""Rensets: carriers with a variable-for-variable renaming action.

An instance bundles the renaming operator with an equality test, a finite
*support bound* (a superset of the non-fresh variables, checked rather than
trusted) and a sampler.  From renaming alone we derive freshness and, under
finite support, swapping; the law checkers verify the axioms and the derived
structure on seeded samples or exhaustively over a supplied domain.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Generic, Iterable, Sequence, TypeVar

from .reports import LawReport
from .terms import (
    App, Lam, Term, Var, VarId, alpha_eq, free_vars, fresh_var, print_term,
    rename, sample_term, swap, swap_var, var,
)

A = TypeVar("A")
B = TypeVar("B")


@dataclass(frozen=True)
class RensetInstance(Generic[A]):
    name: str
    rename: Callable[[A, VarId, VarId], A]  # (a, new, old) -> a[new/old]
    equal: Callable[[A, A], bool]
    support_bound: Callable[[A], frozenset]
    sampler: Callable[[random.Random], A]
    show: Callable[[A], str] = str


@dataclass(frozen=True)
class NominalInstance(Generic[A]):
    name: str
    swap: Callable[[A, VarId, VarId], A]
    equal: Callable[[A, A], bool]
    support_bound: Callable[[A], frozenset]
    sampler: Callable[[random.Random], A]
    show: Callable[[A], str] = str


def law_rng(seed: int, law: str) -> random.Random:
    return random.Random(f"{seed}:{law}")


def outside_vars(avoid: Iterable[VarId], n: int = 2) -> list[VarId]:
    """The ``n`` smallest variables not in ``avoid``."""
    taken = set(avoid)
    out = []
    while len(out) < n:
        v = fresh_var(taken)
        out.append(v)
        taken.add(v)
    return out


def var_pool(support: frozenset, extra: int = 2) -> list[VarId]:
    return sorted(support) + outside_vars(support, extra)


def run_law(
    law: str,
    arity: int,
    check: Callable,
    sampler: Callable[[random.Random], object],
    bound: Callable[[object], frozenset],
    show: Callable,
    argnames: Sequence[str],
    seed: int,
    trials: int,
    samples: Iterable | None = None,
    variables: Sequence[VarId] | None = None,
) -> LawReport:
    """Drive one law over sampled or enumerated carrier elements.

    ``check(a, *vs)`` returns ``None`` when the side-conditions fail for the
    chosen variables, else ``(ok, lhs, rhs)``.  In exhaustive mode every
    variable tuple over ``variables`` (or the element's pool) is tried.
    """
    rep = LawReport(law, seed=seed)

    def one(a, vs):
        out = check(a, *vs)
        if out is None:
            return False
        ok, lhs, rhs = out
        if ok:
            rep.record(True, "")
        else:
            args = ", ".join(f"{n}={v}" for n, v in zip(argnames[1:], vs))
            rep.record(False, f"{argnames[0]}={show(a)}, {args}", show(lhs), show(rhs))
        return True

    if samples is not None:
        for a in samples:
            pool = variables if variables is not None else var_pool(bound(a))
            for vs in itertools.product(pool, repeat=arity):
                one(a, vs)
        return rep

    rng = law_rng(seed, law)
    for _ in range(trials):
        a = sampler(rng)
        pool = variables if variables is not None else var_pool(bound(a))
        for _attempt in range(50):
            if one(a, [rng.choice(pool) for _ in range(arity)]):
                break
    return rep


def _shows(show):
    def f(v):
        return v if isinstance(v, str) else show(v)
    return f


# ---------------------------------------------------------------- renset laws


def check_renset_laws(
    inst: RensetInstance,
    seed: int = 0,
    trials: int = 1000,
    *,
    samples: Iterable | None = None,
    variables: Sequence[VarId] | None = None,
) -> list[LawReport]:
    """Identity, Idempotence, Chaining and Commutativity."""
    R, eq = inst.rename, inst.equal

    def identity(a, x):
        lhs = R(a, x, x)
        return eq(lhs, a), lhs, a

    def idempotence(a, x1, x2, y):
        if x1 == y:
            return None
        lhs, rhs = R(R(a, x1, y), x2, y), R(a, x1, y)
        return eq(lhs, rhs), lhs, rhs

    def chaining(a, y, x1, x2, x3):
        if y == x2:
            return None
        lhs = R(R(R(a, y, x2), x2, x1), x3, x2)
        rhs = R(R(a, y, x2), x3, x1)
        return eq(lhs, rhs), lhs, rhs

    def commutativity(a, x1, x2, y1, y2):
        if x2 == y1 or y1 == x1 or x1 == y2:
            return None
        lhs, rhs = R(R(a, x2, x1), y2, y1), R(R(a, y2, y1), x2, x1)
        return eq(lhs, rhs), lhs, rhs

    samples = list(samples) if samples is not None else None
    laws = [
        ("Identity", identity, ("a", "x")),
        ("Idempotence", idempotence, ("a", "x1", "x2", "y")),
        ("Chaining", chaining, ("a", "y", "x1", "x2", "x3")),
        ("Commutativity", commutativity, ("a", "x1", "x2", "y1", "y2")),
    ]
    return [
        run_law(f"renset/{inst.name}: {n}", len(names) - 1, fn, inst.sampler,
                inst.support_bound, _shows(inst.show), names, seed, trials, samples, variables)
        for n, fn, names in laws
    ]


# ---------------------------------------------------------------- freshness


def derived_fresh(inst: RensetInstance, x: VarId, a) -> bool:
    """``x # a`` tested with the single canonical pivot outside the support bound."""
    y = fresh_var(inst.support_bound(a) | {x})
    return inst.equal(inst.rename(a, y, x), a)


def check_prop3_equivalence(
    inst: RensetInstance,
    seed: int = 0,
    trials: int = 1000,
    *,
    samples: Iterable | None = None,
    variables: Sequence[VarId] | None = None,
    oracle: Callable[[VarId, object], bool] | None = None,
) -> LawReport:
    """The three formulations of freshness agree (and match ``oracle`` if given).

    (1) finitely many moving pivots: no pivot outside the bound moves ``a``;
    (2) every pivot fixes ``a``: checked on the bound plus two outside pivots;
    (3) one pivot other than ``x`` fixes ``a``: the canonical fresh pivot.
    """
    R, eq = inst.rename, inst.equal

    def law(a, x):
        sb = inst.support_bound(a)
        outside = outside_vars(sb | {x})
        f1 = all(eq(R(a, y, x), a) for y in outside)
        f2 = f1 and all(eq(R(a, y, x), a) for y in sb | {x})
        f3 = derived_fresh(inst, x, a)
        vals = [f1, f2, f3] + ([oracle(x, a)] if oracle else [])
        return len(set(vals)) == 1, f"(1)={f1} (2)={f2} (3)={f3}", (
            f"oracle={vals[3]}" if oracle else "agree")

    return run_law(f"prop3/{inst.name}: freshness formulations agree", 1, law,
                   inst.sampler, inst.support_bound, _shows(inst.show), ("a", "x"),
                   seed, trials, samples, variables)


def check_prop4(
    inst: RensetInstance,
    seed: int = 0,
    trials: int = 1000,
    *,
    samples: Iterable | None = None,
    variables: Sequence[VarId] | None = None,
) -> list[LawReport]:
    R, eq = inst.rename, inst.equal

    def fresh(x, a):
        return derived_fresh(inst, x, a)

    def p1(a, x, y):
        if not fresh(x, a):
            return None
        lhs = R(a, y, x)
        return eq(lhs, a), lhs, a

    def p2(a, x1, x2, x3):
        if not fresh(x2, a):
            return None
        lhs, rhs = R(R(a, x2, x1), x3, x2), R(a, x3, x1)
        return eq(lhs, rhs), lhs, rhs

    def p3(a, x, y, z):
        if not ((fresh(z, a) or z == x) and (fresh(x, a) or z != y)):
            return None
        b = R(a, y, x)
        return fresh(z, b), f"z # a[y/x] is {fresh(z, b)}", "True"

    samples = list(samples) if samples is not None else None
    laws = [
        ("(1) fresh x => a[y/x] = a", p1, ("a", "x", "y")),
        ("(2) x2 # a => a[x2/x1][x3/x2] = a[x3/x1]", p2, ("a", "x1", "x2", "x3")),
        ("(3) freshness propagates through renaming", p3, ("a", "x", "y", "z")),
    ]
    return [
        run_law(f"prop4/{inst.name}: {n}", len(names) - 1, fn, inst.sampler,
                inst.support_bound, _shows(inst.show), names, seed, trials, samples, variables)
        for n, fn, names in laws
    ]


# ---------------------------------------------------------------- swapping


def derived_swap(inst: RensetInstance, a, x1: VarId, x2: VarId, pivot: VarId | None = None):
    """``a[x1 ∧ x2]`` computed as ``a[y/x1][x1/x2][x2/y]`` for a fresh pivot ``y``."""
    y = pivot if pivot is not None else fresh_var(inst.support_bound(a) | {x1, x2})
    R = inst.rename
    return R(R(R(a, y, x1), x1, x2), x2, y)


def derive_nominal(inst: RensetInstance) -> NominalInstance:
    return NominalInstance(
        name=f"derived({inst.name})",
        swap=lambda a, x1, x2: derived_swap(inst, a, x1, x2),
        equal=inst.equal,
        support_bound=inst.support_bound,
        sampler=inst.sampler,
        show=inst.show,
    )


def swap_fresh(n: NominalInstance, x: VarId, a) -> bool:
    """Nominal freshness: only finitely many ``y`` have ``a[y ∧ x] != a``.

    Outside the support bound the answer is constant, so two outside
    witnesses decide it.
    """
    return all(n.equal(n.swap(a, y, x), a) for y in outside_vars(n.support_bound(a) | {x}))


def check_nominal_laws(
    n: NominalInstance,
    seed: int = 0,
    trials: int = 1000,
    *,
    samples: Iterable | None = None,
    variables: Sequence[VarId] | None = None,
) -> list[LawReport]:
    """Identity, Involution, Compositionality and finite-support consistency."""
    S, eq = n.swap, n.equal

    def identity(a, x):
        lhs = S(a, x, x)
        return eq(lhs, a), lhs, a

    def involution(a, x1, x2):
        lhs = S(S(a, x1, x2), x1, x2)
        return eq(lhs, a), lhs, a

    def compositionality(a, x1, x2, y1, y2):
        lhs = S(S(a, x1, x2), y1, y2)
        rhs = S(S(a, y1, y2), swap_var(x1, y1, y2), swap_var(x2, y1, y2))
        return eq(lhs, rhs), lhs, rhs

    def support(a, x, y):
        sb = n.support_bound(a)
        if x in sb or y in sb:
            return None
        lhs = S(a, x, y)
        return eq(lhs, a), lhs, a

    samples = list(samples) if samples is not None else None
    laws = [
        ("Identity", identity, ("a", "x")),
        ("Involution", involution, ("a", "x1", "x2")),
        ("Compositionality", compositionality, ("a", "x1", "x2", "y1", "y2")),
        ("Finite support", support, ("a", "x", "y")),
    ]
    return [
        run_law(f"nominal/{n.name}: {name}", len(names) - 1, fn, n.sampler,
                n.support_bound, _shows(n.show), names, seed, trials, samples, variables)
        for name, fn, names in laws
    ]


def check_pivot_independence(inst: RensetInstance, seed: int = 0, trials: int = 1000) -> LawReport:
    """Any two fresh pivots give the same derived swap."""

    def law(a, x1, x2):
        avoid = inst.support_bound(a) | {x1, x2}
        y1, y2 = outside_vars(avoid)
        far = VarId(max(v.index for v in avoid) + 17)
        r1 = derived_swap(inst, a, x1, x2, y1)
        r2 = derived_swap(inst, a, x1, x2, y2)
        r3 = derived_swap(inst, a, x1, x2, far)
        return inst.equal(r1, r2) and inst.equal(r1, r3), r1, r2

    return run_law(f"derived-swap/{inst.name}: pivot independence", 2, law, inst.sampler,
                   inst.support_bound, _shows(inst.show), ("a", "x1", "x2"), seed, trials)


def check_swap_freshness_agreement(inst: RensetInstance, seed: int = 0, trials: int = 1000) -> LawReport:
    """Freshness read off the derived swap coincides with renaming freshness."""
    nom = derive_nominal(inst)

    def law(a, x):
        f_ren, f_swap = derived_fresh(inst, x, a), swap_fresh(nom, x, a)
        return f_ren == f_swap, f"renaming: {f_ren}", f"swapping: {f_swap}"

    return run_law(f"swap-freshness/{inst.name}: same freshness", 1, law, inst.sampler,
                   inst.support_bound, _shows(inst.show), ("a", "x"), seed, trials)


def check_morphism(
    f: Callable, src: RensetInstance, dst: RensetInstance, seed: int = 0, trials: int = 1000
) -> list[LawReport]:
    """Commutation of ``f`` with renaming, and with the derived swaps."""

    def ren(a, x, y):
        lhs, rhs = f(src.rename(a, x, y)), dst.rename(f(a), x, y)
        return dst.equal(lhs, rhs), lhs, rhs

    def swp(a, x, y):
        lhs, rhs = f(derived_swap(src, a, x, y)), derived_swap(dst, f(a), x, y)
        return dst.equal(lhs, rhs), lhs, rhs

    shw = _shows(dst.show)
    return [
        run_law(f"morphism {src.name}->{dst.name}: commutes with renaming", 2, ren,
                src.sampler, src.support_bound, shw, ("a", "x", "y"), seed, trials),
        run_law(f"morphism {src.name}->{dst.name}: commutes with derived swapping", 2, swp,
                src.sampler, src.support_bound, shw, ("a", "x", "y"), seed, trials),
    ]


# ---------------------------------------------------------------- CE nominal


def check_ce_nominal_laws(
    n: NominalInstance,
    vr: Callable,
    ap: Callable,
    lm: Callable,
    seed: int = 0,
    trials: int = 1000,
    *,
    samples: Iterable | None = None,
    variables: Sequence[VarId] | None = None,
) -> list[LawReport]:
    """(N1)-(N3) constructor equivariance and (N4) the freshness condition for binders."""
    S, eq = n.swap, n.equal

    def n1(a, x, y, z):
        lhs, rhs = S(vr(x), y, z), vr(swap_var(x, y, z))
        return eq(lhs, rhs), lhs, rhs

    def n2(pair, y, z):
        a1, a2 = pair
        lhs, rhs = S(ap(a1, a2), y, z), ap(S(a1, y, z), S(a2, y, z))
        return eq(lhs, rhs), lhs, rhs

    def n3(a, x, y, z):
        lhs, rhs = S(lm(x, a), y, z), lm(swap_var(x, y, z), S(a, y, z))
        return eq(lhs, rhs), lhs, rhs

    def n4(a, x):
        ok = swap_fresh(n, x, lm(x, a))
        return ok, f"{x} # Lm {x} a is {ok}", "True"

    samples = list(samples) if samples is not None else None
    pairs = list(zip(samples, samples[1:] + samples[:1])) if samples is not None else None
    shw = _shows(n.show)

    def pair_show(v):
        return f"({shw(v[0])}, {shw(v[1])})" if isinstance(v, tuple) else shw(v)

    reports = [
        run_law(f"ce-nominal/{n.name}: (N1) Vr equivariant", 3, n1, n.sampler,
                n.support_bound, shw, ("a", "x", "y", "z"), seed, trials, samples, variables),
        run_law(f"ce-nominal/{n.name}: (N2) Ap equivariant", 2, n2,
                lambda rng: (n.sampler(rng), n.sampler(rng)),
                lambda p: n.support_bound(p[0]) | n.support_bound(p[1]), pair_show,
                ("(a1, a2)", "y", "z"), seed, trials, pairs, variables),
        run_law(f"ce-nominal/{n.name}: (N3) Lm equivariant", 3, n3, n.sampler,
                n.support_bound, shw, ("a", "x", "y", "z"), seed, trials, samples, variables),
        run_law(f"ce-nominal/{n.name}: (N4) freshness condition for binders", 1, n4,
                n.sampler, n.support_bound, shw, ("a", "x"), seed, trials, samples, variables),
    ]
    return reports


def check_support_commutation(
    f: Callable,
    src: NominalInstance,
    dst: NominalInstance,
    X: frozenset,
    seed: int = 0,
    trials: int = 1000,
) -> tuple[LawReport, bool, bool]:
    """Support of ``f`` by ``X`` versus commutation with swaps outside ``X``.

    Returns the agreement report together with the two verdicts
    (supported by X, commutes outside X) accumulated over the samples.
    """
    verdict = {"supported": True, "commutes": True}

    def law(a, x, y):
        if x in X or y in X:
            return None
        sa = src.swap(a, x, y)
        supported = dst.equal(dst.swap(f(sa), x, y), f(a))
        commutes = dst.equal(f(sa), dst.swap(f(a), x, y))
        verdict["supported"] &= supported
        verdict["commutes"] &= commutes
        return supported == commutes, f"supported: {supported}", f"commutes: {commutes}"

    def bound(a):
        return src.support_bound(a) | X

    rep = run_law(f"support-commutation/{src.name}->{dst.name}: support by X iff swap-commutation", 2, law,
                  src.sampler, bound, _shows(src.show), ("a", "x", "y"), seed, trials)
    return rep, verdict["supported"], verdict["commutes"]


# ---------------------------------------------------------------- instances

TERM_VARS = tuple(var(i) for i in range(4))


def term_sampler(max_size: int = 10, vars: Sequence[VarId] = TERM_VARS):
    def sample(rng):
        return sample_term(rng, max_size, vars)
    return sample


def _var_rename(v: VarId, new: VarId, old: VarId) -> VarId:
    return new if v == old else v


VAR_RENSET: RensetInstance = RensetInstance(
    name="var",
    rename=_var_rename,
    equal=lambda a, b: a == b,
    support_bound=lambda v: frozenset((v,)),
    sampler=lambda rng: var(rng.randrange(5)),
)

TERM_RENSET: RensetInstance = RensetInstance(
    name="term",
    rename=rename,
    equal=alpha_eq,
    support_bound=free_vars,
    sampler=term_sampler(),
    show=print_term,
)

TERM_NOMINAL: NominalInstance = NominalInstance(
    name="term",
    swap=swap,
    equal=alpha_eq,
    support_bound=free_vars,
    sampler=term_sampler(),
    show=print_term,
)


def _naive_rename(p, new, old):
    if isinstance(p, Var):
        return Var(new) if p.v == old else p
    if isinstance(p, App):
        return App(_naive_rename(p.fun, new, old), _naive_rename(p.arg, new, old))
    if p.binder == old:
        return p
    return Lam(p.binder, _naive_rename(p.body, new, old))


def _binder_blind_swap(p, x1, x2):
    if isinstance(p, Var):
        return Var(swap_var(p.v, x1, x2))
    if isinstance(p, App):
        return App(_binder_blind_swap(p.fun, x1, x2), _binder_blind_swap(p.arg, x1, x2))
    return Lam(p.binder, _binder_blind_swap(p.body, x1, x2))


NAIVE_TERM_RENSET: RensetInstance = RensetInstance(
    name="naive-term",
    rename=lambda t, new, old: Term(_naive_rename(t.pre, new, old)),
    equal=alpha_eq,
    support_bound=free_vars,
    sampler=term_sampler(),
    show=print_term,
)

BINDER_BLIND_NOMINAL: NominalInstance = NominalInstance(
    name="binder-blind-term",
    swap=lambda t, x1, x2: Term(_binder_blind_swap(t.pre, x1, x2)),
    equal=alpha_eq,
    support_bound=free_vars,
    sampler=term_sampler(),
    show=print_term,
)


# ---------------------------------------------------------------- containers


def lift_renset_list(inst: RensetInstance, max_len: int = 3) -> RensetInstance:
    def sample(rng):
        return tuple(inst.sampler(rng) for _ in range(rng.randint(0, max_len)))

    return RensetInstance(
        name=f"list({inst.name})",
        rename=lambda xs, new, old: tuple(inst.rename(a, new, old) for a in xs),
        equal=lambda xs, ys: len(xs) == len(ys) and all(map(inst.equal, xs, ys)),
        support_bound=lambda xs: frozenset().union(*(inst.support_bound(a) for a in xs)),
        sampler=sample,
        show=lambda xs: "[" + ", ".join(inst.show(a) for a in xs) + "]",
    )


def lift_renset_pair(first: RensetInstance, second: RensetInstance) -> RensetInstance:
    return RensetInstance(
        name=f"pair({first.name}, {second.name})",
        rename=lambda p, new, old: (first.rename(p[0], new, old), second.rename(p[1], new, old)),
        equal=lambda p, q: first.equal(p[0], q[0]) and second.equal(p[1], q[1]),
        support_bound=lambda p: first.support_bound(p[0]) | second.support_bound(p[1]),
        sampler=lambda rng: (first.sampler(rng), second.sampler(rng)),
        show=lambda p: f"({first.show(p[0])}, {second.show(p[1])})",
    )


def lift_renset_option(inst: RensetInstance) -> RensetInstance:
    def sample(rng):
        return None if rng.random() < 0.25 else inst.sampler(rng)

    def equal(a, b):
        if a is None or b is None:
            return a is None and b is None
        return inst.equal(a, b)

    return RensetInstance(
        name=f"option({inst.name})",
        rename=lambda a, new, old: None if a is None else inst.rename(a, new, old),
        equal=equal,
        support_bound=lambda a: frozenset() if a is None else inst.support_bound(a),
        sampler=sample,
        show=lambda a: "none" if a is None else inst.show(a),
    )
