"""One-step contraction of marked redexes and development traces."""

from __future__ import annotations

from dataclasses import dataclass, field

from .term import (
    App,
    InvalidPath,
    Lam,
    Path,
    Red,
    Step,
    Term,
    alpha_eq,
    is_nf,
    replace_at,
    subst,
    subterm,
)

__all__ = [
    "Trace",
    "redex_positions",
    "contract",
    "contract_root",
    "one_step_all",
    "validate_trace",
]


@dataclass(frozen=True)
class Trace:
    """A finite development: a start term and the (path, result) of each step."""

    start: Term
    steps: tuple = field(default=())

    def __len__(self):
        return len(self.steps)

    @property
    def terms(self) -> list:
        return [self.start] + [t for _, t in self.steps]

    @property
    def final(self) -> Term:
        return self.steps[-1][1] if self.steps else self.start

    @property
    def complete(self) -> bool:
        return is_nf(self.final)


def redex_positions(term: Term) -> list:
    """Paths of all marked redexes, leftmost-outermost first."""
    out = []
    _collect(term, (), out)
    return out


def _collect(term, path, out):
    if term.reds == 0:
        return
    match term:
        case Lam(_, body):
            _collect(body, path + (Step.LAM_BODY,), out)
        case App(f, a):
            _collect(f, path + (Step.APP_FUN,), out)
            _collect(a, path + (Step.APP_ARG,), out)
        case Red(_, body, arg):
            out.append(path)
            _collect(body, path + (Step.RED_BODY,), out)
            _collect(arg, path + (Step.RED_ARG,), out)


def contract_root(red: Red) -> Term:
    return subst(red.body, red.binder, red.arg)


def contract(term: Term, path: Path) -> Term:
    """Contract the marked redex at ``path``.

    Raises :class:`InvalidPath` unless ``path`` addresses a :class:`Red` node.
    """
    target = subterm(term, path)
    if not isinstance(target, Red):
        raise InvalidPath(f"no marked redex at {list(path)}")
    # Contraction only removes free variables, so nothing placed back under
    # the enclosing binders can be captured.
    return replace_at(term, path, contract_root(target))


def one_step_all(term: Term) -> list:
    return [(p, contract(term, p)) for p in redex_positions(term)]


def validate_trace(trace: Trace) -> bool:
    prev = trace.start
    for path, result in trace.steps:
        try:
            expected = contract(prev, tuple(path))
        except InvalidPath:
            return False
        if not alpha_eq(expected, result):
            return False
        prev = result
    return True
