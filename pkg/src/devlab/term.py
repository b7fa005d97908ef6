"""Terms of the marked lambda calculus.

A term is one of four immutable nodes: a variable, an abstraction, an
application, or a marked redex ``(\\*x. P) Q``.  Marked lambdas only ever
appear inside a :class:`Red` node, so an application's function position can
never hold one.

Bound variables are named.  Substitution renames binders on demand, and
alpha-equivalence is decided by comparing nameless (index-based) keys.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

__all__ = [
    "Var",
    "Lam",
    "App",
    "Red",
    "Term",
    "Step",
    "Path",
    "InvalidPath",
    "free_vars",
    "subst",
    "rename",
    "fresh_name",
    "alpha_eq",
    "alpha_key",
    "is_nf",
    "size",
    "subterm",
    "replace_at",
    "check_well_formed",
]

_IDENT = re.compile(r"[a-z][A-Za-z0-9_']*\Z")
_SUFFIX = re.compile(r"(.*?)(\d*)\Z")


@dataclass(frozen=True, slots=True)
class Var:
    name: str
    fv: frozenset = field(init=False, repr=False, compare=False)
    reds: int = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", frozenset((self.name,)))
        object.__setattr__(self, "reds", 0)
        object.__setattr__(self, "size", 1)


@dataclass(frozen=True, slots=True)
class Lam:
    binder: str
    body: Term
    fv: frozenset = field(init=False, repr=False, compare=False)
    reds: int = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", self.body.fv - {self.binder})
        object.__setattr__(self, "reds", self.body.reds)
        object.__setattr__(self, "size", self.body.size + 1)


@dataclass(frozen=True, slots=True)
class App:
    fun: Term
    arg: Term
    fv: frozenset = field(init=False, repr=False, compare=False)
    reds: int = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", self.fun.fv | self.arg.fv)
        object.__setattr__(self, "reds", self.fun.reds + self.arg.reds)
        object.__setattr__(self, "size", self.fun.size + self.arg.size + 1)


@dataclass(frozen=True, slots=True)
class Red:
    """The marked redex ``(\\*binder. body) arg``; ``binder`` scopes over ``body`` only."""

    binder: str
    body: Term
    arg: Term
    fv: frozenset = field(init=False, repr=False, compare=False)
    reds: int = field(init=False, repr=False, compare=False)
    size: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", (self.body.fv - {self.binder}) | self.arg.fv)
        object.__setattr__(self, "reds", self.body.reds + self.arg.reds + 1)
        object.__setattr__(self, "size", self.body.size + self.arg.size + 1)


Term = Union[Var, Lam, App, Red]


class Step(Enum):
    """Child selector used to address subterms."""

    LAM_BODY = "LamBody"
    APP_FUN = "AppFun"
    APP_ARG = "AppArg"
    RED_BODY = "RedBody"
    RED_ARG = "RedArg"

    def __repr__(self):
        return self.value


Path = tuple  # tuple[Step, ...]; the empty tuple is the root


class InvalidPath(ValueError):
    pass


def free_vars(term: Term) -> frozenset:
    return term.fv


def is_nf(term: Term) -> bool:
    """True iff the term contains no marked redex."""
    return term.reds == 0


def size(term: Term) -> int:
    return term.size


def fresh_name(base: str, avoid) -> str:
    """A variant of ``base`` whose numeric suffix exceeds every suffix in ``avoid``.

    Names sharing ``base``'s stem are inspected; the result is the stem
    followed by one more than the largest suffix found (0 if unsuffixed).
    """
    stem = _SUFFIX.match(base).group(1)
    top = 0
    for name in avoid:
        s, digits = _SUFFIX.match(name).groups()
        if s == stem:
            top = max(top, int(digits) if digits else 0)
    return f"{stem}{top + 1}"


def rename(binder: str, body: Term, avoid) -> tuple[str, Term]:
    """Rename ``binder`` in ``body`` to a name outside ``avoid`` and ``body``'s free variables."""
    new = fresh_name(binder, set(avoid) | body.fv | {binder})
    return new, subst(body, binder, Var(new))


def subst(term: Term, x: str, n: Term) -> Term:
    """Capture-avoiding substitution ``term[x := n]``."""
    if x not in term.fv:
        return term
    match term:
        case Var():
            return n
        case Lam(y, body):
            # x is free, so y != x
            if y in n.fv:
                y, body = rename(y, body, n.fv | {x})
            return Lam(y, subst(body, x, n))
        case App(f, a):
            return App(subst(f, x, n), subst(a, x, n))
        case Red(y, body, arg):
            if y != x and x in body.fv:
                if y in n.fv:
                    y, body = rename(y, body, n.fv | {x})
                body = subst(body, x, n)
            return Red(y, body, subst(arg, x, n))
    raise TypeError(f"not a term: {term!r}")


def alpha_key(term: Term):
    """Nameless form of ``term``: equal keys iff the terms are alpha-equivalent.

    Bound occurrences become ints (distance to their binder), free ones keep
    their name.  Abstractions are ``(0, body)``, applications ``(1, f, a)``
    and marked redexes ``(2, body, arg)``.
    """
    return _key(term, ())


def _key(term, env):
    match term:
        case Var(name):
            for i in range(len(env) - 1, -1, -1):
                if env[i] == name:
                    return len(env) - 1 - i
            return name
        case Lam(y, body):
            return (0, _key(body, env + (y,)))
        case App(f, a):
            return (1, _key(f, env), _key(a, env))
        case Red(y, body, arg):
            return (2, _key(body, env + (y,)), _key(arg, env))
    raise TypeError(f"not a term: {term!r}")


def alpha_eq(m: Term, n: Term) -> bool:
    return m == n or alpha_key(m) == alpha_key(n)


def subterm(term: Term, path: Path) -> Term:
    for step in path:
        match (step, term):
            case (Step.LAM_BODY, Lam(_, body)):
                term = body
            case (Step.APP_FUN, App(f, _)):
                term = f
            case (Step.APP_ARG, App(_, a)):
                term = a
            case (Step.RED_BODY, Red(_, body, _)):
                term = body
            case (Step.RED_ARG, Red(_, _, arg)):
                term = arg
            case _:
                raise InvalidPath(f"path {list(path)} leaves the term")
    return term


def replace_at(term: Term, path: Path, new: Term) -> Term:
    """Rebuild ``term`` with the subterm at ``path`` swapped for ``new``.

    No renaming happens: callers must ensure ``new`` is not captured by the
    binders above ``path`` in a way that changes its meaning.
    """
    if not path:
        return new
    step, rest = path[0], path[1:]
    match (step, term):
        case (Step.LAM_BODY, Lam(y, body)):
            return Lam(y, replace_at(body, rest, new))
        case (Step.APP_FUN, App(f, a)):
            return App(replace_at(f, rest, new), a)
        case (Step.APP_ARG, App(f, a)):
            return App(f, replace_at(a, rest, new))
        case (Step.RED_BODY, Red(y, body, arg)):
            return Red(y, replace_at(body, rest, new), arg)
        case (Step.RED_ARG, Red(y, body, arg)):
            return Red(y, body, replace_at(arg, rest, new))
    raise InvalidPath(f"path {list(path)} leaves the term")


def check_well_formed(term) -> None:
    """Raise ``ValueError`` unless ``term`` is a structurally valid term.

    Checks node types, identifier syntax and the cached attributes.
    """
    stack = [term]
    while stack:
        t = stack.pop()
        match t:
            case Var(name):
                if not isinstance(name, str) or not _IDENT.match(name):
                    raise ValueError(f"bad variable name {name!r}")
            case Lam(y, body):
                if not _IDENT.match(y):
                    raise ValueError(f"bad binder {y!r}")
                stack.append(body)
            case App(f, a):
                stack += [f, a]
            case Red(y, body, arg):
                if not _IDENT.match(y):
                    raise ValueError(f"bad binder {y!r}")
                stack += [body, arg]
            case _:
                raise ValueError(f"not a term node: {t!r}")
        if t.fv != _fv_slow(t):
            raise ValueError(f"stale free-variable cache on {t!r}")


def _fv_slow(t):
    match t:
        case Var(name):
            return {name}
        case Lam(y, body):
            return _fv_slow(body) - {y}
        case App(f, a):
            return _fv_slow(f) | _fv_slow(a)
        case Red(y, body, arg):
            return (_fv_slow(body) - {y}) | _fv_slow(arg)
