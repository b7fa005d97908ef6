import json

import pytest
from hypothesis import given

from devlab.syntax import SyntaxError, from_json, parse, print_term, to_json
from devlab.term import App, Lam, Red, Var, alpha_eq

from conftest import terms

x, y, w = Var("x"), Var("y"), Var("w")

# (text, expected printed form) for inputs that parse
GOOD = [
    ("x", "x"),
    ("(\\*x. x x) ((\\*y. y) w)", "(\\*x. x x) ((\\*y. y) w)"),
    ("(\\*x. x x) (\\*y. y) w", "(\\*x. x x) ((\\*y. y) w)"),
    ("\\x. \\y. x y", "\\x. \\y. x y"),
    ("λx. λy. x y", "\\x. \\y. x y"),
    ("(λ*x. x) y", "(\\*x. x) y"),
    ("(λ*x.x)y", "(\\*x. x) y"),
    ("\\x.\\x. x", "\\x. \\x. x"),
    ("(\\*x. \\x. x) x", "(\\*x. \\x. x) x"),
    ("(\\*x. x) a b", "(\\*x. x) a b"),
    ("(\\*x. x) (a b)", "(\\*x. x) (a b)"),
    ("((\\*x. x) a) b", "(\\*x. x) a b"),
    ("a (b c)", "a (b c)"),
    ("(a b) c", "a b c"),
    ("(\\x. x) y", "(\\x. x) y"),
    ("a (\\x. x)", "a (\\x. x)"),
    ("\\x. (\\*y. y x) (\\z. z)", "\\x. (\\*y. y x) (\\z. z)"),
    ("  (( x ))  ", "x"),
    ("x' y_1 zZ9", "x' y_1 zZ9"),
    ("(\\*f. f (f a)) (\\*g. g) (\\z. z)", "(\\*f. f (f a)) ((\\*g. g) (\\z. z))"),
    ("((\\*x. x) y) ((\\*x. x) y)", "(\\*x. x) y ((\\*x. x) y)"),
    ("\\y. (\\*x. \\y. x) y", "\\y. (\\*x. \\y. x) y"),
]

BAD = [
    ("(\\*x. x)", "marked lambda must be applied"),
    ("(\\*x. x) )", "marked lambda must be applied"),
    ("\\*x. x", "marked lambda must be applied"),
    ("a (\\*x. x)", "marked lambda must be applied"),
    ("(x", "unbalanced parenthesis"),
    ("x)", "unbalanced parenthesis"),
    ("", "empty input"),
    ("\\x x", "expected '.'"),
    ("\\. x", "expected identifier"),
    ("X", "unexpected character"),
    ("x \\y. y", "parenthesised"),
    ("()", "expected a term"),
    ("(\\ *x. x) y", "unexpected character"),
]


def test_examples():
    assert parse("x") == Var("x")
    assert parse("(\\*x. x x) ((\\*y. y) w)") == Red("x", App(x, x), Red("y", y, w))
    with pytest.raises(SyntaxError, match="marked lambda must be applied"):
        parse("(\\*x. x)")
    assert print_term(Var("x")) == "x"
    assert print_term(Red("x", App(x, x), w)) == "(\\*x. x x) w"
    assert print_term(Lam("x", Lam("y", App(x, y)))) == "\\x. \\y. x y"


@pytest.mark.parametrize("text,printed", GOOD)
def test_corpus_parses(text, printed):
    t = parse(text)
    assert print_term(t) == printed
    assert alpha_eq(parse(printed), t)
    assert print_term(parse(printed)) == printed


@pytest.mark.parametrize("text,message", BAD)
def test_corpus_errors(text, message):
    with pytest.raises(SyntaxError) as info:
        parse(text)
    assert message in str(info.value)
    span = info.value.span
    assert 0 <= span.start <= span.end <= len(text)


def test_marked_redex_takes_one_factor():
    assert parse("(\\*x. x) a b") == App(Red("x", x, Var("a")), Var("b"))


@given(terms(max_leaves=12))
def test_round_trip(t):
    text = print_term(t)
    back = parse(text)
    assert alpha_eq(back, t)
    assert print_term(back) == text


@given(terms())
def test_json_round_trip(t):
    assert from_json(json.loads(json.dumps(to_json(t)))) == t


def test_json_shape():
    assert to_json(Red("x", App(x, x), w)) == ["red", "x", ["app", ["var", "x"], ["var", "x"]], ["var", "w"]]
    with pytest.raises(ValueError):
        from_json(["lam", "x"])
