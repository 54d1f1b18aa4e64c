"""
Efficient domination
====================

An efficient dominating set covers every vertex exactly once.  Sweep small
graphs and see which ones admit one.
"""

from gpdom import PetersenParams, build_petersen, exists_efficient

hits = []
for n in range(3, 25):
    for k in range(1, (n - 1) // 2 + 1):
        found, witness = exists_efficient(build_petersen(PetersenParams(n, k)))
        if found:
            hits.append((n, k))

print("graphs with an efficient dominating set:")
print(" ", ", ".join(f"P({n},{k})" for n, k in hits))
# every hit has n divisible by 4 and odd k
print("all n % 4 == 0 and k odd:", all(n % 4 == 0 and k % 2 for n, k in hits))
