import pytest
from hypothesis import given

from devlab.essential import essential_set, is_essential
from devlab.metrics import h
from devlab.oracle import essential_oracle
from devlab.reduction import redex_positions
from devlab.term import App, InvalidPath, Lam, Red, Step, Var

from conftest import terms

x, y, z, w = (Var(v) for v in "xyzw")
ROOT, ARG = (), (Step.RED_ARG,)
DUP = Red("x", App(x, x), Red("y", y, w))
ERASE = Red("x", z, Red("y", y, w))


def test_is_essential_examples():
    assert is_essential(Red("x", z, w), ROOT)
    assert not is_essential(ERASE, ARG)
    assert is_essential(DUP, ARG)
    assert not essential_oracle(ERASE, ARG)
    assert essential_oracle(DUP, ARG)


def test_essential_set_examples():
    assert essential_set(Lam("x", x)) == []
    assert essential_set(ERASE) == [ROOT]
    assert essential_set(DUP) == [ROOT, ARG]


def test_variable_hidden_in_erased_argument_is_not_essential_use():
    # x occurs in P only inside an erased argument, so m_x(P) = 0
    body = Red("y", z, x)
    t = Red("x", body, Red("u", Var("u"), w))
    assert essential_set(t) == [ROOT, (Step.RED_BODY,)]
    assert h(t) == 2


def test_invalid_path():
    with pytest.raises(InvalidPath):
        is_essential(Lam("x", x), ROOT)


@given(terms())
def test_counting(t):
    ess = essential_set(t)
    assert len(ess) == h(t)
    positions = redex_positions(t)
    assert all(p in positions for p in ess)
    assert ess == [p for p in positions if p in ess]


@given(terms(max_leaves=6))
def test_agrees_with_residual_oracle(t):
    for p in redex_positions(t):
        assert is_essential(t, p) == essential_oracle(t, p)
