"""
Exponential growth of the longest development
=============================================

Nesting duplicators doubles the longest development at every level, while
the shortest one grows by one step per level.  Counts are exact integers.
"""

from devlab import App, Red, Var, g, h, n

term = Var("v")
for level in range(1, 41):
    u = f"u{level}"
    term = Red(u, App(Var(u), Var(u)), term)
    if level % 8 == 0:
        print(f"depth {level:>2}: h = {h(term):>2}  g = {g(term):>14}  n_v = {n('v', term)}")
