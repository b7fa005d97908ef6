"""The shortest (H) and longest (G) development strategies."""

from __future__ import annotations

from .metrics import measure
from .reduction import Trace, contract_root
from .term import App, Lam, Red, Step, Term, Var, is_nf

__all__ = [
    "AlreadyNormal",
    "H_step",
    "G_step",
    "H_choice",
    "G_choice",
    "shortest_trace",
    "longest_trace",
]


class AlreadyNormal(ValueError):
    pass


def _choose(term: Term, pick) -> tuple:
    """Return ``(path, reduct)`` for one strategy step.

    At a marked redex ``(\\*y. P) Q`` the strategy reduces inside ``Q`` when
    ``pick(mult_y(P), 1) == 1`` and ``Q`` still has marks; otherwise it
    contracts the redex itself.  Applications go left while the function
    part has marks.
    """
    match term:
        case Var():
            raise AlreadyNormal(f"{term!r} has no marked redex")
        case Lam(y, body):
            path, new = _choose(body, pick)
            return (Step.LAM_BODY,) + path, Lam(y, new)
        case App(f, a):
            if not is_nf(f):
                path, new = _choose(f, pick)
                return (Step.APP_FUN,) + path, App(new, a)
            path, new = _choose(a, pick)
            return (Step.APP_ARG,) + path, App(f, new)
        case Red(y, body, arg):
            weight = pick(measure(body, pick)[1].get(y, 0), 1)
            if weight == 1 and not is_nf(arg):
                path, new = _choose(arg, pick)
                return (Step.RED_ARG,) + path, Red(y, body, new)
            return (), contract_root(term)
    raise TypeError(f"not a term: {term!r}")


def H_choice(term: Term) -> tuple:
    """``(path, H(term))``: the redex H contracts and the resulting term."""
    return _choose(term, min)


def G_choice(term: Term) -> tuple:
    return _choose(term, max)


def H_step(term: Term) -> Term:
    """One step of the shortest-development strategy; raises on normal forms."""
    return _choose(term, min)[1]


def G_step(term: Term) -> Term:
    """One step of the longest-development strategy; raises on normal forms."""
    return _choose(term, max)[1]


def _drive(term: Term, pick) -> Trace:
    steps = []
    current = term
    while not is_nf(current):
        path, current = _choose(current, pick)
        steps.append((path, current))
    return Trace(term, tuple(steps))


def shortest_trace(term: Term) -> Trace:
    return _drive(term, min)


def longest_trace(term: Term) -> Trace:
    return _drive(term, max)
