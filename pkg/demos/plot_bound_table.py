"""
Bound comparison table
======================

Tabulate the earlier bound, the piecewise bound and the construction size
over a small grid, then write a DOT drawing of one construction.
"""

import sys

from gpdom import bound_table, bound_violations, build_petersen, construct_ck, write_bound_csv
from gpdom.export import to_dot

rows = bound_table(range(3, 8), range(3, 7), solve_limit=40)
write_bound_csv(rows, sys.stdout)

print()
for line in bound_violations(rows):
    print("note:", line)

rep = construct_ck(4, 3)
with open("p12_3.dot", "w") as fh:
    fh.write(to_dot(build_petersen(rep.params), rep.set))
print("wrote p12_3.dot; render with: neato -n -Tsvg p12_3.dot")
