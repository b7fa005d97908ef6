"""Closed-form lengths of shortest and longest complete developments.

``m(x, M)`` counts how many copies of a term substituted for ``x`` a
shortest complete development of ``M`` has to reduce, and ``h(M)`` is the
length of such a development.  ``n`` and ``g`` are the same recursions with
every ``min(., 1)`` replaced by ``max(., 1)``; they describe longest
developments instead.

All counts are Python ints, so the exponential growth of ``n`` and ``g`` on
nested duplicators never overflows.
"""

from __future__ import annotations

from .term import App, Lam, Red, Term, Var

__all__ = ["m", "h", "n", "g", "measure"]


def measure(term: Term, pick=min) -> tuple[int, dict]:
    """Return ``(length, multiplicities)`` for ``term`` in one bottom-up pass.

    With ``pick=min`` this is ``(h(M), {x: m_x(M)})``; with ``pick=max`` it is
    ``(g(M), {x: n_x(M)})``.  Only free variables appear in the dict; every
    other variable has multiplicity 0.
    """
    match term:
        case Var(x):
            return 0, {x: 1}
        case Lam(y, body):
            length, counts = measure(body, pick)
            counts.pop(y, None)
            return length, counts
        case App(f, a):
            # An App never holds a marked lambda in function position, so the
            # plain application clause always applies.
            lf, cf = measure(f, pick)
            la, ca = measure(a, pick)
            for x, k in ca.items():
                cf[x] = cf.get(x, 0) + k
            return lf + la, cf
        case Red(y, body, arg):
            lb, cb = measure(body, pick)
            la, ca = measure(arg, pick)
            weight = pick(cb.pop(y, 0), 1)
            for x, k in ca.items():
                cb[x] = cb.get(x, 0) + k * weight
            return lb + la * weight + 1, cb
    raise TypeError(f"not a term: {term!r}")


def m(x: str, term: Term) -> int:
    return measure(term, min)[1].get(x, 0)


def h(term: Term) -> int:
    """Length of a shortest complete development of ``term``."""
    return measure(term, min)[0]


def n(x: str, term: Term) -> int:
    return measure(term, max)[1].get(x, 0)


def g(term: Term) -> int:
    """Length of a longest complete development of ``term``."""
    return measure(term, max)[0]
