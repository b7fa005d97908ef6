from hypothesis import settings
from hypothesis import strategies as st

from devlab.term import App, Lam, Red, Var

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

NAMES = st.sampled_from(["x", "y", "z", "a", "b"])


def terms(max_leaves=8):
    """Small terms over a five-name pool, with shadowing and open variables."""
    return st.recursive(
        NAMES.map(Var),
        lambda inner: st.one_of(
            st.builds(Lam, NAMES, inner),
            st.builds(App, inner, inner),
            st.builds(Red, NAMES, inner, inner),
        ),
        max_leaves=max_leaves,
    )
