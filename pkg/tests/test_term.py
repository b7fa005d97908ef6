import pytest
from hypothesis import given
from hypothesis import strategies as st

from devlab.term import (
    App,
    InvalidPath,
    Lam,
    Red,
    Step,
    Var,
    alpha_eq,
    alpha_key,
    check_well_formed,
    free_vars,
    fresh_name,
    is_nf,
    replace_at,
    size,
    subst,
    subterm,
)

from conftest import NAMES, terms

x, y, z, w = Var("x"), Var("y"), Var("z"), Var("w")


def test_free_vars_examples():
    assert free_vars(x) == {"x"}
    assert free_vars(Red("y", y, w)) == {"w"}
    assert free_vars(Lam("x", App(x, z))) == {"z"}


def test_red_binder_does_not_scope_over_argument():
    assert free_vars(Red("y", y, y)) == {"y"}


def test_subst_examples():
    assert subst(x, "x", Lam("y", y)) == Lam("y", y)
    assert subst(z, "x", Lam("y", y)) == z
    result = subst(Lam("y", App(x, y)), "x", y)
    assert alpha_eq(result, Lam("q", App(y, Var("q"))))
    assert result.binder != "y"


def test_subst_renames_marked_binder():
    result = subst(Red("y", App(x, y), w), "x", y)
    assert alpha_eq(result, Red("q", App(y, Var("q")), w))


def test_subst_respects_shadowing():
    m = Lam("x", x)
    assert subst(m, "x", y) is m
    assert subst(Red("x", x, x), "x", y) == Red("x", x, y)


def test_fresh_name_exceeds_suffixes():
    assert fresh_name("y", {"y"}) == "y1"
    assert fresh_name("y", {"y", "y4", "y2", "z9"}) == "y5"
    assert fresh_name("y3", {"y3"}) == "y4"


def test_alpha_eq_examples():
    assert alpha_eq(Lam("x", x), Lam("y", y))
    assert alpha_eq(Red("x", x, w), Red("y", y, w))
    assert not alpha_eq(Lam("x", y), Lam("y", y))
    assert not alpha_eq(Lam("x", x), Red("x", x, w))


def test_is_nf_examples():
    assert is_nf(Lam("x", App(x, x)))
    assert not is_nf(Red("x", x, y))
    assert not is_nf(App(y, Lam("x", Red("z", z, x))))


def test_size_examples():
    assert size(x) == 1
    assert size(Lam("x", x)) == 2
    assert size(Red("x", x, y)) == 3


def test_paths():
    m = Lam("a", App(x, Red("y", y, w)))
    p = (Step.LAM_BODY, Step.APP_ARG)
    assert subterm(m, p) == Red("y", y, w)
    assert subterm(m, p + (Step.RED_ARG,)) == w
    assert replace_at(m, p, z) == Lam("a", App(x, z))
    with pytest.raises(InvalidPath):
        subterm(m, (Step.APP_FUN,))


def test_terms_are_immutable():
    with pytest.raises(AttributeError):
        x.name = "q"


@given(terms(), NAMES, terms())
def test_subst_free_vars(m, v, n):
    result = subst(m, v, n)
    check_well_formed(result)
    expected = (free_vars(m) - {v}) | (free_vars(n) if v in free_vars(m) else set())
    assert free_vars(result) == expected


def _rename_bound(term, suffix):
    """An alpha-variant with every binder renamed; free names untouched."""
    def go(t, env):
        if isinstance(t, Var):
            return Var(env.get(t.name, t.name))
        if isinstance(t, Lam):
            new = t.binder + suffix
            return Lam(new, go(t.body, {**env, t.binder: new}))
        if isinstance(t, App):
            return App(go(t.fun, env), go(t.arg, env))
        new = t.binder + suffix
        return Red(new, go(t.body, {**env, t.binder: new}), go(t.arg, env))
    return go(term, {})


@given(terms(), NAMES, terms())
def test_subst_respects_alpha(m, v, n):
    m2, n2 = _rename_bound(m, "_1"), _rename_bound(n, "_2")
    assert alpha_eq(m, m2) and alpha_eq(n, n2)
    assert alpha_eq(subst(m, v, n), subst(m2, v, n2))


@given(terms(), terms(), terms())
def test_alpha_eq_is_an_equivalence(a, b, c):
    assert alpha_eq(a, a)
    assert alpha_eq(a, b) == alpha_eq(b, a)
    if alpha_eq(a, b) and alpha_eq(b, c):
        assert alpha_eq(a, c)


@given(terms())
def test_alpha_key_ignores_binder_names(m):
    assert alpha_key(m) == alpha_key(_rename_bound(m, "'"))


@given(terms(), NAMES)
def test_subst_variable_with_itself_is_identity(m, v):
    assert alpha_eq(subst(m, v, Var(v)), m)


@given(st.lists(NAMES, max_size=6))
def test_fresh_name_is_fresh(avoid):
    assert fresh_name("x", avoid) not in avoid
