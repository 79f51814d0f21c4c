"""Defining functions on terms by renaming-based recursion.

Each function is given by three operations (variables, applications,
abstractions) plus a renaming on the target.  The engine checks nothing by
itself; the law checkers tell you whether a definition is legitimate.

Run with ``python demos/02_recursion_by_renaming.py``.
"""

# %% Counting nodes and free occurrences
from bindkit import check_ce_laws, check_recursor_clauses, parse_term, print_term, recurse
from bindkit.recursion import BROKEN_TERM_CE, REDEX_COUNT, count_redexes
from bindkit.semantics import CFV_SPEC, LENGTH_SPEC, cfv, psubst_via_recursor, subst_via_recursor
from bindkit.terms import FinTermEnv, Names, Vr

names = Names()
x, y = names("x"), names("y")
t = parse_term(r"(\x. x x) (y x)", names)
print("term            :", print_term(t))
print("length          :", recurse(LENGTH_SPEC, (), t))
print("free x count    :", cfv(t, x))
print("all free counts :", dict(recurse(CFV_SPEC, (), t)))

# %% Substitution is itself a recursive definition
s = parse_term(r"\y. y x", names)
print("\nt[s/x]          :", print_term(subst_via_recursor(t, s, x)))
rho = FinTermEnv({x: Vr(y), y: Vr(x)})
print("parallel x<->y  :", print_term(psubst_via_recursor(t, rho)))

# %% Checking a definition before trusting it
for r in check_ce_laws(LENGTH_SPEC, (), seed=1, trials=300):
    print(" ", r.summary())
for r in check_recursor_clauses(LENGTH_SPEC, (), seed=1, trials=200):
    print(" ", r.summary())

# %% A definition that forgets its binder is rejected with a witness
for r in check_ce_laws(BROKEN_TERM_CE, (), seed=0, trials=300, include_base=False):
    print(" ", r.summary())

# %% Primitive recursion sees the subterms too
u = parse_term(r"(\x. x) ((\y. y) x)", names)
print("\nredexes in", print_term(u), "=", count_redexes(u))
print("spec name:", REDEX_COUNT.base.name)
