import pytest
from hypothesis import given
from hypothesis import strategies as st

from devlab.oracle import (
    DevStats,
    GenParams,
    LimitExceeded,
    dev_stats,
    enumerate_terms,
    essential_oracle,
    gen_term,
    label,
)
from devlab.reduction import one_step_all
from devlab.syntax import parse
from devlab.term import App, Lam, Red, Step, Var, alpha_eq, alpha_key, is_nf

from conftest import terms

x, y, z, w = (Var(v) for v in "xyzw")
DUP = Red("x", App(x, x), Red("y", y, w))
ERASE = Red("x", z, Red("y", y, w))
BLOWUP = parse("(\\*a. a a a) ((\\*b. b b b) ((\\*c. c c c) ((\\*d. d d d) w)))")


def test_dev_stats_examples():
    assert dev_stats(Lam("x", x)) == DevStats(0, 0, 1, True)
    s = dev_stats(ERASE)
    assert (s.shortest, s.longest, s.complete) == (1, 2, True)
    s = dev_stats(DUP)
    assert (s.shortest, s.longest, s.complete) == (2, 3, True)


def test_dev_stats_state_limit():
    s = dev_stats(BLOWUP, state_limit=50)
    assert not s.complete
    assert s.shortest is None and s.longest is None
    assert "limit" in s.detail
    with pytest.raises(ValueError):
        dev_stats(x, state_limit=0)


def test_state_limit_from_environment(monkeypatch):
    monkeypatch.setenv("DEVLAB_STATE_LIMIT", "10")
    assert not dev_stats(BLOWUP).complete


def test_label_examples():
    assert label(Lam("x", x)).labels() == []
    assert label(Red("x", x, y)).redexes() == [((), 0)]
    assert label(Red("x", Red("y", y, z), w)).redexes() == [((), 0), ((Step.RED_BODY,), 1)]


def test_residuals_share_labels():
    lt = label(DUP).contract(())
    assert lt.labels() == [1, 1]


def test_essential_oracle_examples():
    assert essential_oracle(Red("x", x, y), ())
    assert not essential_oracle(ERASE, (Step.RED_ARG,))
    assert essential_oracle(DUP, (Step.RED_ARG,))


def test_essential_oracle_limit():
    with pytest.raises(LimitExceeded):
        essential_oracle(BLOWUP, (), state_limit=5)


@given(terms())
def test_label_erasure_gives_valid_steps(t):
    lt = label(t)
    assert alpha_eq(lt.erase(), t)
    reducts = one_step_all(t)
    for path, _, nxt in lt.successors():
        assert any(p == path and alpha_key(r) == alpha_key(nxt.erase()) for p, r in reducts)
        assert nxt.is_nf() == is_nf(nxt.erase())


def test_gen_term_examples():
    for seed in range(20):
        assert isinstance(gen_term(GenParams(max_size=1, seed=seed)), Var)
        assert is_nf(gen_term(GenParams(max_redexes=0, seed=seed)))
    assert gen_term(GenParams(seed=7)) == gen_term(GenParams(seed=7))


@given(st.integers(0, 2**64 - 1), st.integers(1, 30), st.integers(0, 8))
def test_gen_term_respects_bounds(seed, max_size, max_redexes):
    t = gen_term(GenParams(max_size=max_size, max_redexes=max_redexes, seed=seed))
    assert t.size <= max_size and t.reds <= max_redexes


def test_gen_params_validation():
    with pytest.raises(ValueError):
        GenParams(max_size=0)
    with pytest.raises(ValueError):
        GenParams(p_red=0)


def test_enumeration_counts():
    # T(1) = 2, T(k) = 2 T(k-1) + 3 sum T(i) T(k-1-i)
    counts = [0, 2]
    for k in range(2, 6):
        counts.append(2 * counts[k - 1] + 3 * sum(counts[i] * counts[k - 1 - i] for i in range(1, k - 1)))
    assert len(list(enumerate_terms(5))) == sum(counts)
    assert counts[1:] == [2, 4, 20, 88, 464]
