"""Interpreting terms in a toy semantic domain, and normalizing them.

Run with ``python demos/03_semantics_and_nbe.py``.
"""

# %% Environment-based semantics over arithmetic mod 101
from bindkit.semantics import (
    CHURCH_PLUS, CHURCH_TIMES, OMEGA, Env, FuelExhausted, church, fcb_contrast_report,
    fixture_domain, normalize, sem,
)
from bindkit.terms import Ap, Names, parse_term, print_term

dom = fixture_domain()
names = Names()
y = names("y")
for xi in (Env.const(0), Env.const(5), Env(3, {y: 42})):
    self_app = sem(dom, parse_term(r"\x. x x", names), xi)
    probe = sem(dom, parse_term(r"\x. x y", names), xi)
    print(f"y={xi(y):3d}  [[\\x. x x]] = {self_app:3d}   [[\\x. x y]] = {probe:3d}")

# %% Renaming-freshness versus swapping-freshness
renaming, swapping = fcb_contrast_report(dom, seed=0, trials=100)
print("\n" + renaming.summary())
print(swapping.summary())
print("  counterexample:", swapping.violations[0].inputs)

# %% Normalization by evaluation
two, three = church(2), church(3)
for label, t in (("2 + 2", Ap(Ap(CHURCH_PLUS, two), two)),
                 ("2 * 3", Ap(Ap(CHURCH_TIMES, two), three))):
    print(f"\n{label} normalizes to {print_term(normalize(t))}")

# %% Divergence is reported, not looped on
for fuel in (10, 1000):
    try:
        normalize(OMEGA, fuel)
    except FuelExhausted as exc:
        print(f"omega with fuel {fuel}: {exc}")
