"""Finite permutations of variables and permutation-based nominal structure.

Composition convention: ``perm_compose(s, t)`` applies ``t`` first, so
``perm_compose(s, t)(x) == s(t(x))``.  Acting on a carrier element with ``s``
and then ``t`` therefore equals acting once with ``perm_compose(t, s)``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Generic, Iterable, Mapping, Sequence, TypeVar

from .renset import NominalInstance, law_rng, outside_vars, swap_fresh, term_sampler
from .reports import LawReport
from .terms import App, Lam, Term, Var, VarId, alpha_eq, free_vars, print_term, swap

A = TypeVar("A")


class FinPerm:
    """A bijection on variables that moves finitely many of them."""

    __slots__ = ("_fwd",)

    def __init__(self, mapping: Mapping[VarId, VarId] | None = None):
        fwd = {k: v for k, v in (mapping or {}).items() if k != v}
        if set(fwd) != set(fwd.values()):
            raise ValueError("not a permutation: image differs from domain")
        self._fwd = fwd

    def __call__(self, x: VarId) -> VarId:
        return self._fwd.get(x, x)

    @property
    def moved(self) -> frozenset:
        return frozenset(self._fwd)

    def items(self) -> list[tuple[VarId, VarId]]:
        return sorted(self._fwd.items())

    def __eq__(self, other):
        return isinstance(other, FinPerm) and self._fwd == other._fwd

    def __hash__(self):
        return hash(frozenset(self._fwd.items()))

    def __repr__(self):
        if not self._fwd:
            return "FinPerm(id)"
        return "FinPerm(" + ", ".join(f"{a}->{b}" for a, b in self.items()) + ")"

    def to_json(self) -> str:
        return json.dumps({str(a.index): b.index for a, b in self.items()}, sort_keys=False)

    @classmethod
    def from_json(cls, text: str) -> "FinPerm":
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("permutation JSON must be an object of index pairs")
        return cls({VarId(int(k)): VarId(int(v)) for k, v in data.items()})


def perm_identity() -> FinPerm:
    return FinPerm()


def perm_transposition(x: VarId, y: VarId) -> FinPerm:
    return FinPerm({x: y, y: x})


def perm_compose(s: FinPerm, t: FinPerm) -> FinPerm:
    dom = s.moved | t.moved
    return FinPerm({x: s(t(x)) for x in dom})


def perm_invert(s: FinPerm) -> FinPerm:
    return FinPerm({b: a for a, b in s.items()})


def cycles(s: FinPerm, largest_first: bool = False) -> list[list[VarId]]:
    seen = set()
    out = []
    for start in sorted(s.moved, reverse=largest_first):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = s(start)
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = s(x)
        out.append(cyc)
    return out


def decompose_transpositions(s: FinPerm) -> list[tuple[VarId, VarId]]:
    """Transpositions whose right-to-left composition is ``s``.

    Cycles are taken smallest moved index first; the cycle
    ``c0 -> c1 -> ... -> ck`` becomes ``(c0 ck) ... (c0 c2) (c0 c1)``.
    """
    out = []
    for cyc in cycles(s):
        c0 = cyc[0]
        out.extend((c0, c) for c in reversed(cyc[1:]))
    return out


def alternate_decomposition(s: FinPerm) -> list[tuple[VarId, VarId]]:
    """A different factorisation of ``s``: largest anchors, reversed cycle order,
    and a cancelling pair prepended."""
    out = []
    for cyc in cycles(s, largest_first=True):
        c0 = cyc[0]
        out.extend((c0, c) for c in reversed(cyc[1:]))
    if len(s.moved) >= 2:
        a, b = sorted(s.moved)[:2]
        out = [(a, b), (b, a)] + out
    return out


def recompose(ts: Sequence[tuple[VarId, VarId]]) -> FinPerm:
    return reduce(lambda acc, t: perm_compose(acc, perm_transposition(*t)), ts, perm_identity())


def _map_vars(p, s: FinPerm):
    if isinstance(p, Var):
        return Var(s(p.v))
    if isinstance(p, App):
        return App(_map_vars(p.fun, s), _map_vars(p.arg, s))
    return Lam(s(p.binder), _map_vars(p.body, s))


def perm_map_term(t: Term, s: FinPerm) -> Term:
    """Rename every occurrence, bound or free, by ``s`` at once."""
    return Term(_map_vars(t.pre, s))


def perm_action_term(t: Term, s: FinPerm) -> Term:
    """Act on ``t`` by folding the canonical transposition factors through ``swap``."""
    for x, y in reversed(decompose_transpositions(s)):
        t = swap(t, x, y)
    return t


def sample_perm(rng: random.Random, vars: Sequence[VarId]) -> FinPerm:
    vs = list(vars)
    image = vs[:]
    rng.shuffle(image)
    return FinPerm(dict(zip(vs, image)))


@dataclass(frozen=True)
class PermNominalInstance(Generic[A]):
    name: str
    act: Callable[[A, FinPerm], A]
    equal: Callable[[A, A], bool]
    support_bound: Callable[[A], frozenset]
    sampler: Callable[[random.Random], A]
    show: Callable[[A], str] = str


def to_swap_action(p: PermNominalInstance) -> NominalInstance:
    """Restrict a permutation action to transpositions."""
    return NominalInstance(
        name=f"G({p.name})",
        swap=lambda a, x, y: p.act(a, perm_transposition(x, y)),
        equal=p.equal,
        support_bound=p.support_bound,
        sampler=p.sampler,
        show=p.show,
    )


def fold_swaps(n: NominalInstance, a, ts: Iterable[tuple[VarId, VarId]]):
    for x, y in reversed(list(ts)):
        a = n.swap(a, x, y)
    return a


def to_perm_action(n: NominalInstance) -> PermNominalInstance:
    """Extend a swapping action to permutations through transposition factors."""
    return PermNominalInstance(
        name=f"H({n.name})",
        act=lambda a, s: fold_swaps(n, a, decompose_transpositions(s)),
        equal=n.equal,
        support_bound=n.support_bound,
        sampler=n.sampler,
        show=n.show,
    )


PERM_VARS = tuple(VarId(i) for i in range(4))

TERM_PERM: PermNominalInstance = PermNominalInstance(
    name="term",
    act=perm_map_term,
    equal=alpha_eq,
    support_bound=free_vars,
    sampler=term_sampler(),
    show=print_term,
)


# ---------------------------------------------------------------- checks


def _pointwise_eq(s: FinPerm, t: FinPerm, dom: Iterable[VarId]) -> bool:
    return all(s(x) == t(x) for x in dom)


def check_group_laws(
    seed: int = 0, trials: int = 1000, vars: Sequence[VarId] = PERM_VARS
) -> list[LawReport]:
    """Associativity, neutral element and two-sided inverses, pointwise."""
    rng = law_rng(seed, "group")
    assoc = LawReport("perm: compose associative", seed=seed)
    neutral = LawReport("perm: identity neutral", seed=seed)
    inverse = LawReport("perm: invert two-sided", seed=seed)
    e = perm_identity()
    for _ in range(trials):
        s, t, u = (sample_perm(rng, vars) for _ in range(3))
        dom = s.moved | t.moved | u.moved
        l, r = perm_compose(perm_compose(s, t), u), perm_compose(s, perm_compose(t, u))
        assoc.record(_pointwise_eq(l, r, dom) and l == r, (s, t, u), l, r)
        neutral.record(perm_compose(s, e) == s == perm_compose(e, s), s, perm_compose(s, e), s)
        inv = perm_invert(s)
        ok = perm_compose(s, inv) == e == perm_compose(inv, s) and _pointwise_eq(
            perm_compose(s, inv), e, s.moved)
        inverse.record(ok, s, perm_compose(s, inv), e)
    return [assoc, neutral, inverse]


def check_perm_action_laws(
    p: PermNominalInstance,
    seed: int = 0,
    trials: int = 1000,
    vars: Sequence[VarId] = PERM_VARS,
    *,
    samples: Iterable | None = None,
) -> list[LawReport]:
    """``a[id] = a`` and ``a[s][t] = a[perm_compose(t, s)]``."""
    ident = LawReport(f"perm-action/{p.name}: Identity", seed=seed)
    comp = LawReport(f"perm-action/{p.name}: Compositionality", seed=seed)
    e = perm_identity()
    if samples is not None:
        perms = _all_perms(vars)
        for a in samples:
            ident.record(p.equal(p.act(a, e), a), p.show(a), p.show(p.act(a, e)), p.show(a))
            for s in perms:
                for t in perms:
                    _comp_trial(p, comp, a, s, t)
        return [ident, comp]
    rng = law_rng(seed, "perm-action")
    for _ in range(trials):
        a = p.sampler(rng)
        s, t = sample_perm(rng, vars), sample_perm(rng, vars)
        ident.record(p.equal(p.act(a, e), a), p.show(a), p.show(p.act(a, e)), p.show(a))
        _comp_trial(p, comp, a, s, t)
    return [ident, comp]


def _comp_trial(p, rep, a, s, t):
    lhs, rhs = p.act(p.act(a, s), t), p.act(a, perm_compose(t, s))
    ok = p.equal(lhs, rhs)
    rep.record(ok, f"a={p.show(a)}, s={s}, t={t}" if not ok else "", p.show(lhs), p.show(rhs))


def _all_perms(vars):
    from itertools import permutations

    vs = list(vars)
    return [FinPerm(dict(zip(vs, img))) for img in permutations(vs)]


def check_decomposition_independence(
    n: NominalInstance, seed: int = 0, trials: int = 1000, vars: Sequence[VarId] = PERM_VARS
) -> LawReport:
    """Two different transposition factorisations of one permutation act alike."""
    rep = LawReport(f"H({n.name}): independent of factorisation", seed=seed)
    rng = law_rng(seed, "decomposition")
    for _ in range(trials):
        a, s = n.sampler(rng), sample_perm(rng, vars)
        d1, d2 = decompose_transpositions(s), alternate_decomposition(s)
        if recompose(d1) != s or recompose(d2) != s:
            rep.record(False, f"s={s}", recompose(d1), recompose(d2))
            continue
        lhs, rhs = fold_swaps(n, a, d1), fold_swaps(n, a, d2)
        ok = n.equal(lhs, rhs)
        rep.record(ok, f"a={n.show(a)}, s={s}", n.show(lhs), n.show(rhs))
    return rep


def check_gh_roundtrip(
    p: PermNominalInstance,
    n: NominalInstance,
    seed: int = 0,
    trials: int = 1000,
    vars: Sequence[VarId] = PERM_VARS,
) -> list[LawReport]:
    """H(G(p)) acts like ``p``; G(H(n)) swaps like ``n``; freshness is preserved."""
    hg, gh = to_perm_action(to_swap_action(p)), to_swap_action(to_perm_action(n))
    r1 = LawReport(f"roundtrip: H(G({p.name})) = {p.name}", seed=seed)
    r2 = LawReport(f"roundtrip: G(H({n.name})) = {n.name}", seed=seed)
    r3 = LawReport("roundtrip: freshness preserved by G and H", seed=seed)
    rng = law_rng(seed, "roundtrip")
    g = to_swap_action(p)
    for _ in range(trials):
        a, s = p.sampler(rng), sample_perm(rng, vars)
        lhs, rhs = hg.act(a, s), p.act(a, s)
        r1.record(p.equal(lhs, rhs), f"a={p.show(a)}, s={s}", p.show(lhs), p.show(rhs))
        b = n.sampler(rng)
        x, y = rng.choice(vars), rng.choice(vars)
        lhs, rhs = gh.swap(b, x, y), n.swap(b, x, y)
        r2.record(n.equal(lhs, rhs), f"a={n.show(b)}, x={x}, y={y}", n.show(lhs), n.show(rhs))
        pool = sorted(n.support_bound(b)) + outside_vars(n.support_bound(b))
        z = rng.choice(pool)
        f_n, f_gh = swap_fresh(n, z, b), swap_fresh(gh, z, b)
        f_g, f_p = swap_fresh(g, z, a), swap_fresh(to_swap_action(hg), z, a)
        r3.record(f_n == f_gh and f_g == f_p, f"z={z}", f"{f_n}/{f_g}", f"{f_gh}/{f_p}")
    return [r1, r2, r3]
