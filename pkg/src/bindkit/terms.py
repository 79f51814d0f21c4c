"""Nameful lambda-terms modulo alpha-equivalence.

Pre-terms (:class:`Var`, :class:`App`, :class:`Lam`) are the free syntax;
:class:`Term` wraps a pre-term and identifies alpha-equivalent representatives
through their de Bruijn key.  Every operation exported here is alpha-invariant.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "VarId", "Var", "App", "Lam", "PreTerm", "Term", "Vr", "Ap", "Lm",
    "Bound", "Free", "DbApp", "DbLam", "DbTerm", "FinTermEnv", "Names",
    "ParseError", "fresh_var", "free_vars", "is_fresh", "rename", "swap",
    "swap_var", "subst", "psubst", "alpha_eq", "to_debruijn",
    "from_debruijn", "parse_term", "print_term", "print_debruijn",
    "enum_terms", "sample_term", "alpha_variant", "var",
]


@dataclass(frozen=True, order=True)
class VarId:
    """A variable: equality and order are by ``index`` only."""

    index: int
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"variable index must be non-negative, got {self.index}")

    # hand-written for speed: variables are hashed and compared constantly
    def __eq__(self, other):
        if other.__class__ is VarId:
            return self.index == other.index
        return NotImplemented

    def __hash__(self):
        return hash(self.index)

    def __str__(self):
        return self.name if self.name else f"x{self.index}"

    def __repr__(self):
        return f"VarId({self.index}{', ' + repr(self.name) if self.name else ''})"


def var(index: int) -> VarId:
    return VarId(index)


def fresh_var(avoid: Iterable[VarId]) -> VarId:
    """Smallest-index variable not in ``avoid``."""
    taken = {v.index for v in avoid}
    i = 0
    while i in taken:
        i += 1
    return VarId(i)


# ---------------------------------------------------------------- pre-terms

_EMPTY: frozenset = frozenset()


@dataclass(frozen=True, slots=True)
class Var:
    v: VarId
    fv: frozenset = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", frozenset((self.v,)))
        object.__setattr__(self, "size", 1)


@dataclass(frozen=True, slots=True)
class App:
    fun: "PreTerm"
    arg: "PreTerm"
    fv: frozenset = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", self.fun.fv | self.arg.fv)
        object.__setattr__(self, "size", 1 + self.fun.size + self.arg.size)


@dataclass(frozen=True, slots=True)
class Lam:
    binder: VarId
    body: "PreTerm"
    fv: frozenset = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", self.body.fv - {self.binder})
        object.__setattr__(self, "size", 1 + self.body.size)


PreTerm = Union[Var, App, Lam]


# ---------------------------------------------------------------- de Bruijn


@dataclass(frozen=True, slots=True)
class Bound:
    k: int


@dataclass(frozen=True, slots=True)
class Free:
    v: VarId


@dataclass(frozen=True, slots=True)
class DbApp:
    fun: "DbTerm"
    arg: "DbTerm"


@dataclass(frozen=True, slots=True)
class DbLam:
    body: "DbTerm"


DbTerm = Union[Bound, Free, DbApp, DbLam]


def _db(p: PreTerm, scope: tuple) -> DbTerm:
    # scope[0] is the innermost binder
    if isinstance(p, Var):
        for k, b in enumerate(scope):
            if b == p.v:
                return Bound(k)
        return Free(p.v)
    if isinstance(p, App):
        return DbApp(_db(p.fun, scope), _db(p.arg, scope))
    return DbLam(_db(p.body, (p.binder,) + scope))


# ---------------------------------------------------------------- terms


class Term:
    """An alpha-equivalence class, represented by one pre-term."""

    __slots__ = ("pre", "_key", "_hash")

    def __init__(self, pre: PreTerm):
        if not isinstance(pre, (Var, App, Lam)):
            raise TypeError(f"expected a pre-term, got {type(pre).__name__}")
        self.pre = pre
        self._key = None
        self._hash = None

    @property
    def key(self) -> DbTerm:
        if self._key is None:
            self._key = _db(self.pre, ())
        return self._key

    @property
    def fv(self) -> frozenset:
        return self.pre.fv

    @property
    def size(self) -> int:
        return self.pre.size

    def __eq__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        return self.pre is other.pre or self.key == other.key

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key)
        return self._hash

    def __repr__(self):
        return f"Term({print_term(self)!r})"

    def __str__(self):
        return print_term(self)


def Vr(x: VarId) -> Term:
    return Term(Var(x))


def Ap(t1: Term, t2: Term) -> Term:
    return Term(App(t1.pre, t2.pre))


def Lm(x: VarId, t: Term) -> Term:
    return Term(Lam(x, t.pre))


def free_vars(t: Term) -> frozenset:
    return t.pre.fv


def is_fresh(x: VarId, t: Term) -> bool:
    return x not in t.pre.fv


def alpha_eq(t: Term, u: Term) -> bool:
    return t.key == u.key


def to_debruijn(t: Term) -> DbTerm:
    return t.key


def _db_free(d: DbTerm, acc: set) -> set:
    if isinstance(d, Free):
        acc.add(d.v)
    elif isinstance(d, DbApp):
        _db_free(d.fun, acc)
        _db_free(d.arg, acc)
    elif isinstance(d, DbLam):
        _db_free(d.body, acc)
    return acc


def from_debruijn(d: DbTerm) -> Term:
    """Name each binder with the first variable clear of free and enclosing names."""
    free = frozenset(_db_free(d, set()))

    def go(d, scope):
        if isinstance(d, Bound):
            if d.k >= len(scope):
                raise ValueError(f"dangling de Bruijn index {d.k}")
            return Var(scope[d.k])
        if isinstance(d, Free):
            return Var(d.v)
        if isinstance(d, DbApp):
            return App(go(d.fun, scope), go(d.arg, scope))
        z = fresh_var(free.union(scope))
        return Lam(z, go(d.body, (z,) + scope))

    return Term(go(d, ()))


# ---------------------------------------------------------------- operators


def _primed(b: VarId, z: VarId) -> VarId:
    return VarId(z.index, b.name + "'") if b.name else z


def _rename(p: PreTerm, new: VarId, old: VarId) -> PreTerm:
    if old not in p.fv:
        return p
    if isinstance(p, Var):
        return Var(new)
    if isinstance(p, App):
        return App(_rename(p.fun, new, old), _rename(p.arg, new, old))
    b, body = p.binder, p.body
    if b == new:
        z = _primed(b, fresh_var(body.fv | {new, old}))
        body, b = _rename(body, z, b), z
    return Lam(b, _rename(body, new, old))


def rename(t: Term, new: VarId, old: VarId) -> Term:
    """Capture-avoiding ``t[new/old]``."""
    p = _rename(t.pre, new, old)
    return t if p is t.pre else Term(p)


def swap_var(v: VarId, x1: VarId, x2: VarId) -> VarId:
    if v == x1:
        return x2
    if v == x2:
        return x1
    return v


def _swap(p: PreTerm, x1: VarId, x2: VarId) -> PreTerm:
    if isinstance(p, Var):
        return Var(swap_var(p.v, x1, x2))
    if isinstance(p, App):
        return App(_swap(p.fun, x1, x2), _swap(p.arg, x1, x2))
    return Lam(swap_var(p.binder, x1, x2), _swap(p.body, x1, x2))


def swap(t: Term, x1: VarId, x2: VarId) -> Term:
    """Transpose ``x1`` and ``x2`` everywhere, binders included."""
    if x1 == x2:
        return t
    return Term(_swap(t.pre, x1, x2))


def _subst(p: PreTerm, s: PreTerm, x: VarId) -> PreTerm:
    if x not in p.fv:
        return p
    if isinstance(p, Var):
        return s
    if isinstance(p, App):
        return App(_subst(p.fun, s, x), _subst(p.arg, s, x))
    b, body = p.binder, p.body
    if b in s.fv:
        z = _primed(b, fresh_var(body.fv | s.fv | {x, b}))
        body, b = _rename(body, z, b), z
    return Lam(b, _subst(body, s, x))


def subst(t: Term, s: Term, x: VarId) -> Term:
    """Capture-avoiding term-for-variable substitution ``t⟦s/x⟧``."""
    p = _subst(t.pre, s.pre, x)
    return t if p is t.pre else Term(p)


class FinTermEnv:
    """A finitely supported map from variables to terms; identity elsewhere."""

    __slots__ = ("_map", "support", "range_fv")

    def __init__(self, mapping: Mapping[VarId, Term] | None = None):
        m = {}
        for v, t in (mapping or {}).items():
            if not (isinstance(t.pre, Var) and t.pre.v == v):
                m[v] = t
        self._map = m
        self.support = frozenset(m)
        self.range_fv = frozenset().union(*(t.fv for t in m.values()))

    def __call__(self, v: VarId) -> Term:
        return self._map.get(v) or Vr(v)

    def items(self):
        return sorted(self._map.items(), key=lambda kv: kv[0].index)

    def __eq__(self, other):
        return isinstance(other, FinTermEnv) and self._map == other._map

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def __repr__(self):
        body = ", ".join(f"{v}↦{print_term(t)}" for v, t in self.items())
        return f"FinTermEnv({{{body}}})"


def _psubst(p: PreTerm, rho: FinTermEnv, avoid: frozenset) -> PreTerm:
    if not (p.fv & rho.support):
        return p
    if isinstance(p, Var):
        return rho(p.v).pre
    if isinstance(p, App):
        return App(_psubst(p.fun, rho, avoid), _psubst(p.arg, rho, avoid))
    b, body = p.binder, p.body
    if b in avoid:
        z = _primed(b, fresh_var(body.fv | avoid | {b}))
        body, b = _rename(body, z, b), z
    return Lam(b, _psubst(body, rho, avoid))


def psubst(t: Term, rho: FinTermEnv) -> Term:
    """Capture-avoiding simultaneous substitution ``t⟦rho⟧``."""
    p = _psubst(t.pre, rho, rho.support | rho.range_fv)
    return t if p is t.pre else Term(p)


# ---------------------------------------------------------------- enumeration


def _enum_pre(max_size: int, vs: list) -> list:
    by_size: list[list] = [[]]
    for n in range(1, max_size + 1):
        level = []
        if n == 1:
            level.extend(Var(v) for v in vs)
        for k in range(1, n - 1):
            for f in by_size[k]:
                for a in by_size[n - 1 - k]:
                    level.append(App(f, a))
        if n >= 2:
            for b in vs:
                for body in by_size[n - 1]:
                    level.append(Lam(b, body))
        by_size.append(level)
    return by_size


def enum_terms(max_size: int, vars: Iterable[VarId]) -> list[Term]:
    """Every pre-term of at most ``max_size`` nodes over ``vars``.

    Ordered by size, then constructor (variable, application, abstraction),
    then children in order.  Alpha-equivalent pre-terms are all listed.
    """
    vs = sorted(set(vars))
    if not vs:
        raise ValueError("enum_terms needs at least one variable")
    levels = _enum_pre(max_size, vs)
    return [Term(p) for level in levels for p in level]


def sample_term(rng: random.Random, max_size: int, vars: Iterable[VarId]) -> Term:
    """A random term with between 1 and ``max_size`` nodes."""
    vs = sorted(set(vars))
    n = rng.randint(1, max_size)

    def gen(n):
        if n == 1:
            return Var(rng.choice(vs))
        if n == 2 or rng.random() < 0.4:
            return Lam(rng.choice(vs), gen(n - 1))
        k = rng.randint(1, n - 2)
        return App(gen(k), gen(n - 1 - k))

    return Term(gen(n))


def alpha_variant(t: Term, rng: random.Random, pool: Iterable[VarId] = ()) -> Term:
    """A random representative of the same alpha-class as ``t``."""
    extra = sorted(set(pool))

    def go(p):
        if isinstance(p, Var):
            return p
        if isinstance(p, App):
            return App(go(p.fun), go(p.arg))
        body = go(p.body)
        clear = body.fv - {p.binder}
        cands = [v for v in extra if v not in clear]
        cands.append(fresh_var(clear | {p.binder}))
        cands.append(p.binder)
        z = rng.choice(cands)
        return Lam(z, _rename(body, z, p.binder))

    return Term(go(t.pre))


# ---------------------------------------------------------------- text


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


_CANON = re.compile(r"x(0|[1-9][0-9]*)\Z")
_TOKEN = re.compile(r"\s+|[A-Za-z][A-Za-z0-9_']*|[\\λ.()]")


class Names:
    """Interning session binding identifiers to variable indices.

    ``xN`` always denotes index ``N``; other identifiers take the smallest
    index not reserved by a canonical name seen so far.
    """

    def __init__(self):
        self._by_name: dict[str, VarId] = {}
        self._taken: set[int] = set()

    def reserve(self, text: str) -> None:
        for tok in re.findall(r"[A-Za-z][A-Za-z0-9_']*", text):
            m = _CANON.match(tok)
            if m:
                self._taken.add(int(m.group(1)))

    def __call__(self, name: str) -> VarId:
        v = self._by_name.get(name)
        if v is not None:
            return v
        m = _CANON.match(name)
        if m:
            v = VarId(int(m.group(1)))
        else:
            i = 0
            while i in self._taken:
                i += 1
            v = VarId(i, name)
        self._taken.add(v.index)
        self._by_name[name] = v
        return v


def _tokenize(text: str) -> list:
    toks = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        s = m.group()
        if not s.isspace():
            toks.append((s, line, col))
        for ch in s:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    toks.append(("", line, col))
    return toks


def parse_term(text: str, names: Names | None = None) -> Term:
    """Parse ``text`` in the grammar::

        term ::= lam | app
        lam  ::= ("\\" | "λ") ident "." term
        app  ::= atom+
        atom ::= ident | "(" term ")"
    """
    if names is None:
        names = Names()
        names.reserve(text)
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i][0]

    def expect(s):
        nonlocal i
        tok, line, col = toks[i]
        if tok != s:
            raise ParseError(f"expected {s!r}, found {tok or 'end of input'!r}", line, col)
        i += 1

    def ident():
        nonlocal i
        tok, line, col = toks[i]
        if not tok or not tok[0].isalpha() or tok == "λ":
            raise ParseError(f"expected identifier, found {tok or 'end of input'!r}", line, col)
        i += 1
        return names(tok)

    def term():
        nonlocal i
        if peek() in ("\\", "λ"):
            i += 1
            x = ident()
            expect(".")
            return Lam(x, term())
        p = atom()
        while peek() and peek() not in (")", ".", "\\", "λ"):
            p = App(p, atom())
        return p

    def atom():
        nonlocal i
        if peek() == "(":
            i += 1
            p = term()
            expect(")")
            return p
        return Var(ident())

    p = term()
    tok, line, col = toks[i]
    if tok:
        raise ParseError(f"unexpected {tok!r}", line, col)
    return Term(p)


def _display_names(p: PreTerm) -> dict:
    seen: dict[int, str | None] = {}
    stack = [p]
    while stack:
        q = stack.pop()
        if isinstance(q, Var):
            vs = (q.v,)
        elif isinstance(q, App):
            stack += (q.arg, q.fun)
            continue
        else:
            vs = (q.binder,)
            stack.append(q.body)
        for v in vs:
            if seen.get(v.index) is None:
                seen[v.index] = v.name
    owners: dict[str, list] = {}
    for i, n in seen.items():
        if n:
            owners.setdefault(n, []).append(i)
    out = {}
    for i, n in seen.items():
        ok = n and len(owners[n]) == 1 and not _CANON.match(n)
        out[i] = n if ok else f"x{i}"
    return out


def print_term(t: Term | PreTerm) -> str:
    """Render with stored names; clashing or missing names fall back to ``xN``."""
    p = t.pre if isinstance(t, Term) else t
    names = _display_names(p)

    def go(p, ctx):
        # ctx: 0 top, 1 function position, 2 argument position
        if isinstance(p, Var):
            return names[p.v.index]
        if isinstance(p, Lam):
            s = f"\\{names[p.binder.index]}. {go(p.body, 0)}"
            return f"({s})" if ctx else s
        s = f"{go(p.fun, 1)} {go(p.arg, 2)}"
        return f"({s})" if ctx == 2 else s

    return go(p, 0)


def print_debruijn(d: DbTerm) -> str:
    def go(d, ctx):
        if isinstance(d, Bound):
            return str(d.k)
        if isinstance(d, Free):
            return str(d.v)
        if isinstance(d, DbLam):
            s = f"λ. {go(d.body, 0)}"
            return f"({s})" if ctx else s
        s = f"{go(d.fun, 1)} {go(d.arg, 2)}"
        return f"({s})" if ctx == 2 else s

    return go(d, 0)


def iter_subterms(p: PreTerm) -> Iterator[PreTerm]:
    stack = [p]
    while stack:
        q = stack.pop()
        yield q
        if isinstance(q, App):
            stack += (q.arg, q.fun)
        elif isinstance(q, Lam):
            stack.append(q.body)
