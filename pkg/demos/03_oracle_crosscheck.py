"""
Formulas against exhaustive search
==================================

Random terms are generated and, for each, the development graph is explored
completely.  The shortest and longest path lengths found by the search are
compared with ``h`` and ``g``.
"""

from collections import Counter

from devlab import GenParams, dev_stats, g, gen_term, h, print_term

agree = Counter()
widest = None
for seed in range(200):
    term = gen_term(GenParams(seed=seed))
    stats = dev_stats(term)
    if not stats.complete:
        agree["skipped"] += 1
        continue
    ok = (stats.shortest, stats.longest) == (h(term), g(term))
    agree["agree" if ok else "DISAGREE"] += 1
    if widest is None or stats.longest - stats.shortest > widest[0]:
        widest = (stats.longest - stats.shortest, term, stats)

print(dict(agree))

##############################################################################
# The term with the biggest gap between its shortest and longest
# developments:

gap, term, stats = widest
print(print_term(term))
print(f"shortest {stats.shortest}, longest {stats.longest}, {stats.states} distinct terms reachable")
