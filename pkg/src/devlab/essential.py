"""Essential redexes: those every complete development has to contract.

A redex is essential in ``(\\*y. P) Q`` if it is the redex itself, is
essential in ``P``, or is essential in ``Q`` while ``y`` still occurs in
``P`` with positive shortest-development multiplicity.  Applications and
abstractions just pass the question down.
"""

from __future__ import annotations

from .metrics import measure
from .term import App, InvalidPath, Lam, Red, Step, Term, subterm

__all__ = ["is_essential", "essential_set"]


def essential_set(term: Term) -> list:
    """Paths of essential redexes in leftmost-outermost order."""
    return _essential(term)[0]


def _essential(term):
    """Return ``(paths, multiplicities)`` where paths are relative to ``term``.

    Multiplicities are the min-based counts, computed alongside so each node
    is visited once.
    """
    match term:
        case Lam(y, body):
            paths, counts = _essential(body)
            counts.pop(y, None)
            return [(Step.LAM_BODY,) + p for p in paths], counts
        case App(f, a):
            pf, cf = _essential(f)
            pa, ca = _essential(a)
            for x, k in ca.items():
                cf[x] = cf.get(x, 0) + k
            return [(Step.APP_FUN,) + p for p in pf] + [(Step.APP_ARG,) + p for p in pa], cf
        case Red(y, body, arg):
            pb, cb = _essential(body)
            pa, ca = _essential(arg)
            occurs = cb.pop(y, 0)
            weight = min(occurs, 1)
            for x, k in ca.items():
                cb[x] = cb.get(x, 0) + k * weight
            paths = [()] + [(Step.RED_BODY,) + p for p in pb]
            if occurs > 0:
                paths += [(Step.RED_ARG,) + p for p in pa]
            return paths, cb
    # a variable: no redexes
    return [], measure(term)[1]


def is_essential(term: Term, path) -> bool:
    path = tuple(path)
    if not isinstance(subterm(term, path), Red):
        raise InvalidPath(f"no marked redex at {list(path)}")
    return path in _essential(term)[0]
