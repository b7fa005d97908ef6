"""Brute-force ground truth for development lengths and essentiality.

Nothing here uses the closed-form metrics or the strategies: lengths come
from exhaustive search of the development graph, and essentiality from
following labelled redexes through every complete development.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass, field

from .reduction import one_step_all
from .term import App, InvalidPath, Lam, Red, Step, Term, Var, alpha_key, subterm

__all__ = [
    "DEFAULT_STATE_LIMIT",
    "default_state_limit",
    "ESSENTIAL_MAX_REDEXES",
    "VAR_POOL",
    "LimitExceeded",
    "CycleDetected",
    "DevStats",
    "dev_stats",
    "LabeledTerm",
    "label",
    "essential_oracle",
    "GenParams",
    "gen_term",
    "enumerate_terms",
]

DEFAULT_STATE_LIMIT = 200_000
ESSENTIAL_MAX_REDEXES = 5
VAR_POOL = ("a", "b", "c", "d", "e")


def default_state_limit() -> int:
    return int(os.environ.get("DEVLAB_STATE_LIMIT", DEFAULT_STATE_LIMIT))


class LimitExceeded(RuntimeError):
    pass


class CycleDetected(RuntimeError):
    """A development returned to a term on the current path.

    Developments are finite, so this always means a bug in reduction.
    """


@dataclass(frozen=True)
class DevStats:
    shortest: int | None
    longest: int | None
    states: int
    complete: bool
    detail: str = ""


def dev_stats(term: Term, state_limit: int | None = None) -> DevStats:
    """Shortest and longest complete development lengths by exhaustive search.

    States are alpha-canonical terms.  The search is a depth-first walk with
    memoised ``(shortest, longest)`` per state; a state seen again while
    still on the walk's path raises :class:`CycleDetected`.
    """
    if state_limit is None:
        state_limit = default_state_limit()
    if state_limit <= 0:
        raise ValueError("state_limit must be positive")

    memo: dict = {}
    on_path: set = set()
    root = alpha_key(term)
    # frame: [key, term, successors, next index, best shortest, best longest]
    stack = [[root, term, None, 0, None, None]]
    on_path.add(root)
    while stack:
        frame = stack[-1]
        key, t, succ = frame[0], frame[1], frame[2]
        if succ is None:
            succ = frame[2] = [s for _, s in one_step_all(t)]
        if frame[3] < len(succ):
            child = succ[frame[3]]
            frame[3] += 1
            ckey = alpha_key(child)
            if ckey in memo:
                _absorb(frame, memo[ckey])
            elif ckey in on_path:
                raise CycleDetected(f"development cycle through {child!r}")
            else:
                if len(memo) + len(stack) >= state_limit:
                    return DevStats(
                        None, None, len(memo) + len(stack), False,
                        f"state limit {state_limit} exceeded",
                    )
                on_path.add(ckey)
                stack.append([ckey, child, None, 0, None, None])
            continue
        if succ:
            result = (frame[4] + 1, frame[5] + 1)
        else:
            result = (0, 0)
        memo[key] = result
        on_path.discard(key)
        stack.pop()
        if stack:
            _absorb(stack[-1], result)
    shortest, longest = memo[root]
    return DevStats(shortest, longest, len(memo), True)


def _absorb(frame, result):
    s, l = result
    frame[4] = s if frame[4] is None else min(frame[4], s)
    frame[5] = l if frame[5] is None else max(frame[5], l)


# -- labelled terms ----------------------------------------------------------
#
# Labelled terms are kept nameless: a bound variable is an int (distance to
# its binder), a free one a str; (0, body) is an abstraction, (1, f, a) an
# application and (2, body, arg, label) a labelled marked redex.  Being
# nameless, the tuples double as alpha-canonical memo keys.


def _shift(t, d, cutoff):
    if isinstance(t, int):
        return t + d if t >= cutoff else t
    if isinstance(t, str):
        return t
    tag = t[0]
    if tag == 0:
        return (0, _shift(t[1], d, cutoff + 1))
    if tag == 1:
        return (1, _shift(t[1], d, cutoff), _shift(t[2], d, cutoff))
    return (2, _shift(t[1], d, cutoff + 1), _shift(t[2], d, cutoff), t[3])


def _subst(t, j, s):
    if isinstance(t, int):
        if t == j:
            return s
        return t
    if isinstance(t, str):
        return t
    tag = t[0]
    if tag == 0:
        return (0, _subst(t[1], j + 1, _shift(s, 1, 0)))
    if tag == 1:
        return (1, _subst(t[1], j, s), _subst(t[2], j, s))
    return (2, _subst(t[1], j + 1, _shift(s, 1, 0)), _subst(t[2], j, s), t[3])


def _beta(body, arg):
    # copies of arg keep their labels: they are the residuals
    return _shift(_subst(body, 0, _shift(arg, 1, 0)), -1, 0)


def _redexes(t, path, out):
    if isinstance(t, (int, str)):
        return
    tag = t[0]
    if tag == 0:
        _redexes(t[1], path + (Step.LAM_BODY,), out)
    elif tag == 1:
        _redexes(t[1], path + (Step.APP_FUN,), out)
        _redexes(t[2], path + (Step.APP_ARG,), out)
    else:
        out.append((path, t[3]))
        _redexes(t[1], path + (Step.RED_BODY,), out)
        _redexes(t[2], path + (Step.RED_ARG,), out)


_SLOT = {
    Step.LAM_BODY: (0, 1),
    Step.APP_FUN: (1, 1),
    Step.APP_ARG: (1, 2),
    Step.RED_BODY: (2, 1),
    Step.RED_ARG: (2, 2),
}


def _contract_at(t, path):
    if not path:
        if isinstance(t, tuple) and t[0] == 2:
            return _beta(t[1], t[2])
        raise InvalidPath("no marked redex at path")
    if isinstance(t, (int, str)):
        raise InvalidPath("path leaves the term")
    tag, slot = _SLOT[path[0]]
    if t[0] != tag:
        raise InvalidPath("path leaves the term")
    new = list(t)
    new[slot] = _contract_at(t[slot], path[1:])
    return tuple(new)


@dataclass(frozen=True)
class LabeledTerm:
    """A term whose marked redexes carry labels; residuals share a label."""

    data: object = field(repr=False)

    def redexes(self) -> list:
        """``(path, label)`` pairs, leftmost-outermost."""
        out = []
        _redexes(self.data, (), out)
        return out

    def labels(self) -> list:
        return [lbl for _, lbl in self.redexes()]

    def contract(self, path) -> LabeledTerm:
        return LabeledTerm(_contract_at(self.data, tuple(path)))

    def successors(self) -> list:
        """``(path, label, reduct)`` for every one-step reduct."""
        return [(p, lbl, self.contract(p)) for p, lbl in self.redexes()]

    def is_nf(self) -> bool:
        return not self.redexes()

    def erase(self) -> Term:
        """Forget the labels, giving back a named term."""
        return _to_named(self.data, [], _free_names(self.data))


def _free_names(t, out=None):
    out = set() if out is None else out
    if isinstance(t, str):
        out.add(t)
    elif isinstance(t, tuple):
        for part in t[1:3]:
            _free_names(part, out)
    return out


def _binder_name(depth, taken):
    name = f"v{depth}"
    while name in taken:
        name += "'"
    return name


def _to_named(t, env, taken):
    if isinstance(t, int):
        return Var(env[len(env) - 1 - t])
    if isinstance(t, str):
        return Var(t)
    tag = t[0]
    if tag == 0:
        y = _binder_name(len(env), taken)
        return Lam(y, _to_named(t[1], env + [y], taken))
    if tag == 1:
        return App(_to_named(t[1], env, taken), _to_named(t[2], env, taken))
    y = _binder_name(len(env), taken)
    return Red(y, _to_named(t[1], env + [y], taken), _to_named(t[2], env, taken))


def label(term: Term) -> LabeledTerm:
    """Label each marked redex with its index in leftmost-outermost order."""
    counter = itertools.count()
    return LabeledTerm(_labelled(term, (), counter))


def _labelled(term, env, counter):
    match term:
        case Var(name):
            for i in range(len(env) - 1, -1, -1):
                if env[i] == name:
                    return len(env) - 1 - i
            return name
        case Lam(y, body):
            return (0, _labelled(body, env + (y,), counter))
        case App(f, a):
            return (1, _labelled(f, env, counter), _labelled(a, env, counter))
        case Red(y, body, arg):
            lbl = next(counter)
            return (2, _labelled(body, env + (y,), counter), _labelled(arg, env, counter), lbl)
    raise TypeError(f"not a term: {term!r}")


def essential_oracle(term: Term, path, state_limit: int | None = None) -> bool:
    """Does every complete development contract the redex at ``path`` or a residual of it?

    Searches for a normal form reachable without ever contracting a redex
    carrying that redex's label; the redex is essential iff none exists.
    """
    if state_limit is None:
        state_limit = default_state_limit()
    path = tuple(path)
    if not isinstance(subterm(term, path), Red):
        raise InvalidPath(f"no marked redex at {list(path)}")
    start = label(term)
    target = dict(start.redexes())[path]

    seen = {start.data}
    stack = [start]
    while stack:
        t = stack.pop()
        moves = t.redexes()
        if not moves:
            return False
        for p, lbl in moves:
            if lbl == target:
                continue
            nxt = t.contract(p)
            if nxt.data not in seen:
                if len(seen) >= state_limit:
                    raise LimitExceeded(f"state limit {state_limit} exceeded")
                seen.add(nxt.data)
                stack.append(nxt)
    return True


# -- term generation ---------------------------------------------------------


@dataclass(frozen=True)
class GenParams:
    max_size: int = 25
    max_redexes: int = 8
    seed: int = 0
    p_var: float = 0.25
    p_lam: float = 0.15
    p_app: float = 0.20
    p_red: float = 0.40
    binders: tuple = ("x", "y", "z")
    p_bound: float = 0.75

    def __post_init__(self):
        if self.max_size < 1:
            raise ValueError("max_size must be at least 1")
        if self.max_redexes < 0:
            raise ValueError("max_redexes must be non-negative")
        probs = (self.p_var, self.p_lam, self.p_app, self.p_red)
        if any(p <= 0 for p in probs):
            raise ValueError("constructor probabilities must be positive")


_GEN_RETRIES = 1000


def gen_term(params: GenParams) -> Term:
    """Draw a term deterministically from ``params.seed``.

    A weighted constructor walk under a random size budget; the result has at
    most ``max_size`` nodes and ``max_redexes`` marked redexes.  Free variables
    come from :data:`VAR_POOL`.
    """
    rng = random.Random(params.seed)
    for _ in range(_GEN_RETRIES):
        budget = rng.randint((params.max_size + 1) // 2, params.max_size)
        reds = [params.max_redexes]
        term = _gen(rng, params, budget, (), reds)
        if term.size <= params.max_size and term.reds <= params.max_redexes:
            return term
    raise RuntimeError("generator failed to meet its constraints")  # pragma: no cover


def _gen(rng, params, budget, scope, reds):
    choices = [("var", params.p_var)]
    if budget >= 2:
        choices.append(("lam", params.p_lam))
    if budget >= 3:
        choices.append(("app", params.p_app))
        if reds[0] > 0:
            choices.append(("red", params.p_red))
    if budget > 1 and len(choices) > 1:
        # A variable would waste the budget; prefer to use it up.
        choices[0] = ("var", params.p_var * 0.1)
    kinds, weights = zip(*choices)
    kind = rng.choices(kinds, weights)[0]
    if kind == "var":
        if scope and rng.random() < params.p_bound:
            return Var(rng.choice(scope))
        return Var(rng.choice(VAR_POOL))
    if kind == "lam":
        y = rng.choice(params.binders)
        return Lam(y, _gen(rng, params, budget - 1, scope + (y,), reds))
    left = rng.randint(1, budget - 2)
    right = budget - 1 - left
    if kind == "app":
        f = _gen(rng, params, left, scope, reds)
        return App(f, _gen(rng, params, right, scope, reds))
    reds[0] -= 1
    y = rng.choice(params.binders)
    body = _gen(rng, params, left, scope + (y,), reds)
    return Red(y, body, _gen(rng, params, right, scope, reds))


def enumerate_terms(max_size: int, names=("x", "y")):
    """Yield every term with at most ``max_size`` nodes over ``names``.

    The same names serve as binders and as variables, so the enumeration
    includes open terms, shadowing and every binding pattern.
    """
    table: dict[int, list] = {}
    for k in range(1, max_size + 1):
        level = [Var(x) for x in names] if k == 1 else []
        if k >= 2:
            level += [Lam(y, b) for y in names for b in table[k - 1]]
        for left in range(1, k - 1):
            right = k - 1 - left
            for p in table[left]:
                for q in table[right]:
                    level.append(App(p, q))
                    level.extend(Red(y, p, q) for y in names)
        table[k] = level
        yield from level

