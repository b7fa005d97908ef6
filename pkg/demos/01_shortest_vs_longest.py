"""
Shortest and longest developments side by side
===============================================

Two tiny terms show where the shortest strategy H and the longest strategy
G part ways: an erasing redex and a duplicating one.
"""

from devlab import g, h, longest_trace, parse, print_term, shortest_trace
from devlab.cli import format_path

##############################################################################
# An erasing redex.  ``x`` does not occur in the body, so the argument can be
# thrown away unreduced.  H does exactly that; G first normalises the
# argument, since it would otherwise be lost.

erase = parse("(\\*x. z) ((\\*y. y) w)")
print("h =", h(erase), " g =", g(erase))


def show(trace):
    print("   ", print_term(trace.start))
    for path, term in trace.steps:
        print(f"    -> {print_term(term)}    [{format_path(path)}]")


show(shortest_trace(erase))
show(longest_trace(erase))

##############################################################################
# A duplicating redex.  Now H reduces the argument first, before it gets
# copied, while G contracts the head and pays for both copies.

dup = parse("(\\*x. x x) ((\\*y. y) w)")
print("\nh =", h(dup), " g =", g(dup))
show(shortest_trace(dup))
show(longest_trace(dup))
