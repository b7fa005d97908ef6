"""Concrete syntax for marked terms.

Grammar::

    term   := lam | app
    lam    := '\\' ident '.' term
    app    := factor factor*
    factor := ident | '(' term ')' | marked
    marked := '(' '\\*' ident '.' term ')' factor

``λ`` may be written for ``\\`` and ``λ*`` for ``\\*``.  A marked lambda
must be applied straight away; it has no meaning on its own.

Terms also have a JSON form built from nested arrays:
``["var", x]``, ``["lam", x, t]``, ``["app", t, t]``, ``["red", x, t, t]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .term import App, Lam, Red, Term, Var

__all__ = [
    "SourceSpan",
    "SyntaxError",
    "parse",
    "print_term",
    "to_json",
    "from_json",
]


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


class SyntaxError(ValueError):  # noqa: A001 - shadows the builtin on purpose
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{message} at {span.start}:{span.end}")
        self.message = message
        self.span = span


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<mark>\\\*|λ\*)
  | (?P<lam>\\|λ)
  | (?P<ident>[a-z][A-Za-z0-9_']*)
  | (?P<punct>[().])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        mo = _TOKEN.match(text, pos)
        if mo is None:
            raise SyntaxError(f"unexpected character {text[pos]!r}", SourceSpan(pos, pos + 1))
        kind = mo.lastgroup
        if kind != "ws":
            value = mo.group() if kind in ("ident", "punct") else kind
            tokens.append((kind if kind != "punct" else value, value, mo.start(), mo.end()))
        pos = mo.end()
    tokens.append(("eof", "", len(text), len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def peek(self):
        return self.tokens[self.i]

    def peek2(self):
        return self.tokens[min(self.i + 1, len(self.tokens) - 1)]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek
        return SyntaxError(message, SourceSpan(tok[2], tok[3]))

    def expect(self, kind, what):
        tok = self.peek
        if tok[0] != kind:
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise self.error(f"expected {what}, found {found}")
        return self.advance()

    def term(self):
        if self.peek[0] == "lam":
            self.advance()
            name = self.expect("ident", "identifier")[1]
            self.expect(".", "'.'")
            return Lam(name, self.term())
        if self.peek[0] == "mark":
            raise self.error("marked lambda must be applied")
        result = self.factor()
        while self.peek[0] in ("ident", "("):
            result = App(result, self.factor())
        return result

    def factor(self):
        tok = self.peek
        if tok[0] == "ident":
            self.advance()
            return Var(tok[1])
        if tok[0] != "(":
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise self.error(f"expected a term, found {found}")
        opening = self.advance()
        if self.peek[0] == "mark":
            mark = self.advance()
            name = self.expect("ident", "identifier")[1]
            self.expect(".", "'.'")
            body = self.term()
            self.close(opening)
            if self.peek[0] not in ("ident", "("):
                raise SyntaxError(
                    "marked lambda must be applied",
                    SourceSpan(mark[2], self.tokens[self.i - 1][3]),
                )
            return Red(name, body, self.factor())
        inner = self.term()
        self.close(opening)
        return inner

    def close(self, opening):
        if self.peek[0] != ")":
            if self.peek[0] == "eof":
                raise SyntaxError("unbalanced parenthesis", SourceSpan(opening[2], opening[3]))
            raise self.error(f"expected ')', found {self.peek[1]!r}")
        self.advance()


def parse(text: str) -> Term:
    """Parse ``text`` into a term, raising :class:`SyntaxError` on bad input."""
    p = _Parser(text)
    if p.peek[0] == "eof":
        raise p.error("empty input")
    result = p.term()
    if p.peek[0] != "eof":
        tok = p.peek
        if tok[0] == ")":
            raise p.error("unbalanced parenthesis")
        if tok[0] in ("lam", "mark"):
            raise p.error("lambda in argument position must be parenthesised")
        raise p.error(f"unexpected {tok[1]!r}")
    return result


def print_term(term: Term) -> str:
    """Canonical text of ``term``; ``parse`` reads it back to an alpha-equal term."""
    return _print(term)


def _print(term) -> str:
    match term:
        case Var(name):
            return name
        case Lam(y, body):
            return f"\\{y}. {_print(body)}"
        case App(f, a):
            left = f"({_print(f)})" if isinstance(f, Lam) else _print(f)
            return f"{left} {_factor(a)}"
        case Red(y, body, arg):
            return f"(\\*{y}. {_print(body)}) {_factor(arg)}"
    raise TypeError(f"not a term: {term!r}")


def _factor(term) -> str:
    # Nested marked redexes in argument position are parenthesised for
    # readability even though the grammar does not require it.
    if isinstance(term, Var):
        return term.name
    return f"({_print(term)})"


def to_json(term: Term):
    match term:
        case Var(name):
            return ["var", name]
        case Lam(y, body):
            return ["lam", y, to_json(body)]
        case App(f, a):
            return ["app", to_json(f), to_json(a)]
        case Red(y, body, arg):
            return ["red", y, to_json(body), to_json(arg)]
    raise TypeError(f"not a term: {term!r}")


def from_json(data) -> Term:
    try:
        match data:
            case ["var", str(name)]:
                return Var(name)
            case ["lam", str(y), body]:
                return Lam(y, from_json(body))
            case ["app", f, a]:
                return App(from_json(f), from_json(a))
            case ["red", str(y), body, arg]:
                return Red(y, from_json(body), from_json(arg))
    except RecursionError:
        raise ValueError("term nesting too deep") from None
    raise ValueError(f"malformed term array: {data!r}")
