"""Command line front end: ``devlab {metrics,trace,essential,oracle,check}``.

Exit codes: 0 success, 1 property failure, 2 parse error, 3 internal
invariant violation, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import checks
from .essential import essential_set
from .metrics import measure
from .oracle import DEFAULT_STATE_LIMIT, GenParams, dev_stats, default_state_limit
from .reduction import validate_trace
from .strategy import longest_trace, shortest_trace
from .syntax import SyntaxError as TermSyntaxError
from .syntax import parse, print_term, to_json
from .term import subterm

EXIT_OK, EXIT_PROPERTY, EXIT_PARSE, EXIT_INTERNAL, EXIT_LIMIT = 0, 1, 2, 3, 4


def format_path(path) -> str:
    return ".".join(step.value for step in path) if path else "root"


def _path_json(path) -> list:
    return [step.value for step in path]


class _Report:
    def __init__(self, command, text):
        self.command = command
        self.input = text
        self.result = {}
        self.lines = []
        self.diagnostics = {"limits_hit": False}
        self.code = EXIT_OK

    def as_dict(self):
        return {
            "command": self.command,
            "input": self.input,
            "result": self.result,
            "diagnostics": self.diagnostics,
            "exit_code": self.code,
        }


def _metrics(term, args, rep):
    hv, mins = measure(term, min)
    gv, maxs = measure(term, max)
    rep.result.update(h=hv, g=gv)
    rep.lines.append(f"h={hv} g={gv}")
    if args.var:
        mx, nx = mins.get(args.var, 0), maxs.get(args.var, 0)
        rep.result.update(var=args.var, m=mx, n=nx)
        rep.lines.append(f"m_{args.var}={mx} n_{args.var}={nx}")


def _trace(term, args, rep):
    if args.mode == "shortest":
        trace, pick, name = shortest_trace(term), min, "h"
    else:
        trace, pick, name = longest_trace(term), max, "g"
    expected = measure(term, pick)[0]
    ok = len(trace) == expected and trace.complete and validate_trace(trace)
    rep.result.update(
        mode=args.mode,
        steps=[{"path": _path_json(p), "term": to_json(t)} for p, t in trace.steps],
        final=to_json(trace.final),
        length=len(trace),
        **{name: expected},
        check=ok,
    )
    rep.lines.append(f"    {print_term(trace.start)}")
    for i, (path, result) in enumerate(trace.steps, 1):
        rep.lines.append(f"{i:>3} {format_path(path)}: {print_term(result)}")
    rep.lines.append(f"length={len(trace)} {name}={expected} check={'ok' if ok else 'FAILED'}")
    if not ok:
        rep.code = EXIT_INTERNAL


def _essential(term, args, rep):
    ess = essential_set(term)
    hv = measure(term, min)[0]
    ok = len(ess) == hv
    rep.result.update(
        essential=[{"path": _path_json(p), "term": to_json(subterm(term, p))} for p in ess],
        count=len(ess),
        h=hv,
        check=ok,
    )
    for p in ess:
        rep.lines.append(f"{format_path(p)}: {print_term(subterm(term, p))}")
    rep.lines.append(
        f"essential=[{', '.join(format_path(p) for p in ess)}] count={len(ess)} h={hv}"
        f" check={'ok' if ok else 'FAILED'}"
    )
    if not ok:
        rep.code = EXIT_INTERNAL


def _oracle(term, args, rep):
    stats = dev_stats(term, args.state_limit)
    hv, gv = measure(term, min)[0], measure(term, max)[0]
    rep.result.update(
        shortest=stats.shortest,
        longest=stats.longest,
        states=stats.states,
        complete=stats.complete,
        h=hv,
        g=gv,
    )
    if not stats.complete:
        rep.diagnostics.update(limits_hit=True, detail=stats.detail)
        rep.lines.append(f"states={stats.states} complete=no ({stats.detail})")
        rep.code = EXIT_LIMIT
        return
    agree = stats.shortest == hv and stats.longest == gv
    rep.result["agree"] = agree
    rep.lines.append(
        f"shortest={stats.shortest} longest={stats.longest} states={stats.states}"
        f" complete=yes agree={'yes' if agree else 'NO'} (h={hv} g={gv})"
    )
    if not agree:
        rep.code = EXIT_INTERNAL


_TERM_COMMANDS = {
    "metrics": _metrics,
    "trace": _trace,
    "essential": _essential,
    "oracle": _oracle,
}


def _run_term(command, text, args) -> _Report:
    rep = _Report(command, text)
    start = time.perf_counter()
    try:
        term = parse(text)
    except TermSyntaxError as exc:
        rep.code = EXIT_PARSE
        rep.result["error"] = {"message": exc.message, "span": [exc.span.start, exc.span.end]}
        rep.lines.append(f"syntax error: {exc}")
        return rep
    rep.input = print_term(term)
    _TERM_COMMANDS[command](term, args, rep)
    rep.diagnostics["time_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return rep


def _run_check(args) -> _Report:
    params = GenParams(max_size=args.max_size, max_redexes=args.max_redexes, seed=args.seed)
    rep = _Report("check", None)
    start = time.perf_counter()
    result = checks.run_checks(params, args.count, args.state_limit)
    rep.result.update(
        count=args.count,
        seed=args.seed,
        passed=result.passed,
        failed=result.failed,
        skipped=result.skipped,
    )
    rep.diagnostics["limits_hit"] = result.skipped > 0
    rep.lines.append(
        f"count={args.count} passed={result.passed} failed={result.failed} skipped={result.skipped}"
    )
    if result.failed:
        rep.result["counterexample"] = result.counterexample
        rep.result["message"] = result.message
        rep.lines.append(f"counterexample: {result.counterexample}")
        rep.lines.append(f"  {result.message}")
        rep.code = EXIT_PROPERTY
    rep.diagnostics["time_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return rep


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="emit one JSON document")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-size", type=int, default=25)
    common.add_argument("--max-redexes", type=int, default=8)
    common.add_argument(
        "--state-limit",
        type=int,
        default=None,
        help=f"oracle state limit (default {DEFAULT_STATE_LIMIT} or $DEVLAB_STATE_LIMIT)",
    )

    parser = argparse.ArgumentParser(
        prog="devlab", description="Shortest and longest developments of marked lambda terms."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def term_command(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("term", nargs="?", help="term text, e.g. '(\\*x. x x) ((\\*y. y) w)'")
        p.add_argument("-f", "--file", help="read one term per line from FILE")
        return p

    p = term_command("metrics", "print h and g (and m/n for --var)")
    p.add_argument("--var", help="also report m and n for this variable")
    p = term_command("trace", "print the shortest or longest complete development")
    p.add_argument("--mode", choices=("shortest", "longest"), default="shortest")
    term_command("essential", "list essential redexes")
    term_command("oracle", "exhaustive development-graph search")
    p = sub.add_parser("check", parents=[common], help="run the property suite on generated terms")
    p.add_argument("--count", type=int, default=500)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.state_limit is None:
        args.state_limit = default_state_limit()

    if args.command == "check":
        reports = [_run_check(args)]
    else:
        if args.file:
            with open(args.file, encoding="utf-8") as fh:
                texts = [line.strip() for line in fh if line.strip()]
        elif args.term is not None:
            texts = [args.term]
        else:
            parser.error(f"{args.command}: a term or -f FILE is required")
        reports = [_run_term(args.command, text, args) for text in texts]

    if args.machine:
        if len(reports) == 1:
            doc = reports[0].as_dict()
        else:
            doc = {"reports": [r.as_dict() for r in reports]}
        json.dump(doc, sys.stdout)
        sys.stdout.write("\n")
    else:
        for rep in reports:
            if rep.input is not None and len(reports) > 1:
                print(f"# {rep.input}")
            for line in rep.lines:
                print(line)
    return max((r.code for r in reports), default=EXIT_OK)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
