"""Executable forms of the development theorems, applied term by term.

Each ``check_*`` function raises :class:`PropertyFailure` with a short
description when its property does not hold.  :func:`run_checks` bundles
them into the batch runner used by ``devlab check``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace

from .essential import essential_set
from .metrics import measure
from .oracle import (
    ESSENTIAL_MAX_REDEXES,
    VAR_POOL,
    GenParams,
    LimitExceeded,
    dev_stats,
    essential_oracle,
    gen_term,
)
from .reduction import one_step_all, redex_positions, validate_trace
from .strategy import G_choice, H_choice, longest_trace, shortest_trace
from .syntax import parse, print_term
from .term import Step, Term, alpha_eq, check_well_formed, is_nf, subst

__all__ = [
    "PropertyFailure",
    "CheckReport",
    "check_lengths",
    "check_traces",
    "check_monotone",
    "check_substitution",
    "check_essential",
    "check_syntax",
    "check_term",
    "run_checks",
]


class PropertyFailure(AssertionError):
    pass


def _require(cond, message):
    if not cond:
        raise PropertyFailure(message)


def check_lengths(term: Term, state_limit=None) -> bool:
    """Formulas, strategies and the exhaustive oracle agree on both lengths.

    Returns False (nothing checked against the oracle) when the search hits
    its state limit.
    """
    hv, mins = measure(term, min)
    gv, maxs = measure(term, max)
    _require(hv <= gv, f"h={hv} exceeds g={gv}")
    for x in term.fv:
        _require(mins.get(x, 0) <= maxs.get(x, 0), f"m_{x} exceeds n_{x}")
    _require((hv == 0) == is_nf(term), "h is zero exactly on normal forms")
    _require((gv == 0) == is_nf(term), "g is zero exactly on normal forms")
    short, long_ = shortest_trace(term), longest_trace(term)
    _require(len(short) == hv, f"shortest trace has {len(short)} steps, h={hv}")
    _require(len(long_) == gv, f"longest trace has {len(long_)} steps, g={gv}")
    stats = dev_stats(term, state_limit)
    if not stats.complete:
        return False
    _require(stats.shortest == hv, f"oracle shortest {stats.shortest} != h {hv}")
    _require(stats.longest == gv, f"oracle longest {stats.longest} != g {gv}")
    return True


def check_traces(term: Term) -> None:
    """Both traces are complete developments made of genuine one-step reductions.

    Along the H trace h drops by exactly one per step (likewise g along the
    G trace), and every redex H picks is essential with no essential redex
    inside its argument.
    """
    for trace, pick in ((shortest_trace(term), min), (longest_trace(term), max)):
        _require(validate_trace(trace), "trace fails validation")
        _require(trace.complete, "trace does not end in a normal form")
        prev = trace.start
        for path, result in trace.steps:
            reducts = one_step_all(prev)
            _require(
                any(p == path and alpha_eq(r, result) for p, r in reducts),
                f"step at {list(path)} is not a one-step reduct",
            )
            before, after = measure(prev, pick)[0], measure(result, pick)[0]
            _require(before == after + 1, f"strategy step takes length {before} to {after}")
            if pick is min:
                _check_h_choice(prev, path)
            check_well_formed(result)
            prev = result


def _check_h_choice(term, path):
    chosen, _ = H_choice(term)
    _require(chosen == path, "trace path differs from H's choice")
    ess = essential_set(term)
    _require(path in ess, f"H contracts the inessential redex at {list(path)}")
    inside_arg = path + (Step.RED_ARG,)
    _require(
        not any(p[: len(inside_arg)] == inside_arg for p in ess),
        f"H's redex at {list(path)} has an essential redex in its argument",
    )


def check_monotone(term: Term) -> None:
    """Every one-step reduct can raise m and lower n, h by at most one, g by at least one."""
    hv, mins = measure(term, min)
    gv, maxs = measure(term, max)
    for path, reduct in one_step_all(term):
        check_well_formed(reduct)
        hr, mr = measure(reduct, min)
        gr, nr = measure(reduct, max)
        _require(hv <= hr + 1, f"h drops by more than one at {list(path)}")
        _require(gv >= gr + 1, f"g does not drop at {list(path)}")
        for x in term.fv | set(VAR_POOL):
            _require(mins.get(x, 0) <= mr.get(x, 0), f"m_{x} decreases at {list(path)}")
            _require(maxs.get(x, 0) >= nr.get(x, 0), f"n_{x} increases at {list(path)}")
    if not is_nf(term):
        _, hs = H_choice(term)
        _, gs = G_choice(term)
        _require(measure(hs, min)[0] == hv - 1, "h(H(M)) != h(M) - 1")
        _require(measure(gs, max)[0] == gv - 1, "g(G(M)) != g(M) - 1")


def check_substitution(term: Term, x: str, arg: Term) -> None:
    """Lengths and multiplicities of ``term[x := arg]`` follow from the parts."""
    result = subst(term, x, arg)
    check_well_formed(result)
    for pick in (min, max):
        lm, cm = measure(term, pick)
        ln, cn = measure(arg, pick)
        lr, cr = measure(result, pick)
        weight = cm.get(x, 0)
        _require(lr == lm + ln * weight, f"length law fails under {pick.__name__}")
        for y in (term.fv | arg.fv | set(VAR_POOL)) - {x}:
            _require(
                cr.get(y, 0) == cm.get(y, 0) + cn.get(y, 0) * weight,
                f"multiplicity law for {y} fails under {pick.__name__}",
            )
    expected_fv = (term.fv - {x}) | (arg.fv if x in term.fv else frozenset())
    _require(result.fv == expected_fv, "free variables of substitution")


def check_essential(term: Term, use_oracle: bool = True, state_limit=None) -> None:
    ess = essential_set(term)
    _require(len(ess) == measure(term, min)[0], "essential count differs from h")
    positions = redex_positions(term)
    _require(all(p in positions for p in ess), "essential path is not a redex")
    if use_oracle and term.reds <= ESSENTIAL_MAX_REDEXES:
        for p in positions:
            try:
                truth = essential_oracle(term, p, state_limit)
            except LimitExceeded:
                return
            _require((p in ess) == truth, f"essentiality of {list(p)} disagrees with the oracle")


def check_syntax(term: Term) -> None:
    text = print_term(term)
    back = parse(text)
    _require(alpha_eq(back, term), f"round trip changes {text!r}")
    _require(print_term(back) == text, f"printing is unstable on {text!r}")


def check_term(term: Term, rng: random.Random, state_limit=None) -> bool:
    """Run every property on ``term``; returns False if the oracle was skipped."""
    check_well_formed(term)
    complete = check_lengths(term, state_limit)
    check_traces(term)
    check_monotone(term)
    arg = gen_term(GenParams(max_size=6, max_redexes=2, seed=rng.getrandbits(64)))
    x = rng.choice(sorted(term.fv) or list(VAR_POOL))
    check_substitution(term, x, arg)
    check_essential(term, use_oracle=complete, state_limit=state_limit)
    check_syntax(term)
    return complete


@dataclass
class CheckReport:
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexample: str | None = None
    message: str | None = None
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def run_checks(params: GenParams, count: int, state_limit=None) -> CheckReport:
    """Generate ``count`` terms from ``params`` and check each in order.

    Term ``i`` uses seed ``params.seed + i``.  Terms whose oracle search hits
    the state limit still get every oracle-free check and count as skipped.
    """
    report = CheckReport()
    for i in range(count):
        seed = params.seed + i
        term = gen_term(replace(params, seed=seed))
        rng = random.Random(seed)
        try:
            complete = check_term(term, rng, state_limit)
        except PropertyFailure as exc:
            report.failed += 1
            report.failures.append((print_term(term), str(exc)))
            if report.counterexample is None:
                report.counterexample = print_term(term)
                report.message = str(exc)
            continue
        if complete:
            report.passed += 1
        else:
            report.skipped += 1
    return report

