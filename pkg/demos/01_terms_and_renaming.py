"""Terms modulo alpha, capture-avoiding renaming, and what renaming alone knows.

Run with ``python demos/01_terms_and_renaming.py``.
"""

# %% Parsing and alpha-equivalence
from bindkit import (
    TERM_RENSET, VAR_RENSET, Names, alpha_eq, check_renset_laws, derived_fresh,
    derived_swap, parse_term, print_debruijn, print_term, rename, swap, to_debruijn,
)
from bindkit.renset import NAIVE_TERM_RENSET

names = Names()
x, y = names("x"), names("y")
k = parse_term(r"\x. \y. x", names)
k2 = parse_term(r"\a. \b. a", names)
print("K           :", print_term(k))
print("de Bruijn   :", print_debruijn(to_debruijn(k)))
print("alpha-equal :", alpha_eq(k, k2), "| same hash:", hash(k) == hash(k2))

# %% Renaming avoids capture
t = parse_term(r"\x. x y", names)
moved = rename(t, x, y)  # replace free y by x
print(f"\n({print_term(t)})[x/y] = {print_term(moved)}")
print("binder was renamed, so the new x stays free:", x in moved.fv)

# %% The four renaming laws, checked on random terms
for inst in (TERM_RENSET, VAR_RENSET, NAIVE_TERM_RENSET):
    reports = check_renset_laws(inst, seed=0, trials=2000)
    print()
    for r in reports:
        print(" ", r.summary())

# %% Freshness and swapping recovered from renaming
print("\nx fresh for \\x. x  :", derived_fresh(TERM_RENSET, x, parse_term(r"\x. x", names)))
print("x fresh for x y     :", derived_fresh(TERM_RENSET, x, parse_term("x y", names)))
u = parse_term(r"\z. x (y z)", names)
print("swap via renaming   :", print_term(derived_swap(TERM_RENSET, u, x, y)))
print("direct swap         :", print_term(swap(u, x, y)))
