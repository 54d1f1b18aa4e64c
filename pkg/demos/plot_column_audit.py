"""
Column audits on random dominating sets
=======================================

Draw minimal dominating sets of P(25, 5) with the seeded greedy sampler and
look at how they spread over the five columns.
"""

from collections import Counter

from gpdom import PetersenParams, audit_lemmas, build_petersen, column_profile, random_dominating_sets

g = build_petersen(PetersenParams.from_ck(5, 5))
sets = random_dominating_sets(g, 200, seed=0)

sizes = Counter(len(s) for s in sets)
print("set sizes:", dict(sorted(sizes.items())))

profiles = Counter(column_profile(g, s).sizes for s in sets if len(s) == min(sizes))
print("column sizes of the smallest sets:")
for sizes_, count in profiles.most_common(5):
    print("  ", sizes_, count)

failed = sum(len(audit_lemmas(g, s).violations) for s in sets)
print("audit violations:", failed)
