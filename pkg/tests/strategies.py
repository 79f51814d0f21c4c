"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from bindkit.terms import App, Lam, Term, Var, var

VARS = tuple(var(i) for i in range(4))

variables = st.sampled_from(VARS)

pre_terms = st.recursive(
    variables.map(Var),
    lambda inner: st.one_of(
        st.builds(App, inner, inner),
        st.builds(Lam, variables, inner),
    ),
    max_leaves=8,
)

terms = pre_terms.map(Term)
