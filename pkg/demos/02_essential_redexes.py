"""
Essential redexes
=================

A redex is essential when no complete development can avoid it (or one of
its residuals).  The count of essential redexes is the shortest development
length.  Here the closed-form test is compared with a brute-force search over
labelled developments.
"""

from devlab import essential_oracle, essential_set, h, parse, print_term, redex_positions
from devlab.cli import format_path
from devlab.term import subterm

for text in [
    "(\\*x. z) ((\\*y. y) w)",
    "(\\*x. x x) ((\\*y. y) w)",
    "(\\*x. (\\*u. z) x) ((\\*y. y) w)",
    "\\a. (\\*f. f (f a)) (\\b. (\\*c. c) b)",
]:
    term = parse(text)
    ess = essential_set(term)
    print(print_term(term))
    for p in redex_positions(term):
        mark = "essential" if p in ess else "avoidable"
        oracle = "essential" if essential_oracle(term, p) else "avoidable"
        print(f"  {format_path(p):<22} {mark:<10} (search says {oracle})  {print_term(subterm(term, p))}")
    print(f"  count = {len(ess)}, h = {h(term)}\n")
