"""Independent reference computations used only by the tests.

Nothing here imports the solver.  Closed neighborhoods are rebuilt from the
edge definition with plain sets so the oracles do not share code paths with
``gpdom.graph`` either.
"""

from __future__ import annotations

import itertools
from collections import deque

import numpy as np


def closed_neighborhoods(n, k):
    """N[x] for the dense encoding, straight from the edge relation."""
    nb = {x: {x} for x in range(2 * n)}
    for i in range(n):
        for a, b in ((i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)):
            nb[a].add(b)
            nb[b].add(a)
    return nb


def brute_gamma(n, k):
    """Smallest s such that some s-subset dominates, by plain enumeration."""
    nb = closed_neighborhoods(n, k)
    masks = [sum(1 << y for y in nb[x]) for x in range(2 * n)]
    full = (1 << 2 * n) - 1
    for size in range(1, 2 * n + 1):
        for combo in itertools.combinations(range(2 * n), size):
            m = 0
            for x in combo:
                m |= masks[x]
            if m == full:
                return size, set(combo)
    raise AssertionError("unreachable")


def milp_gamma(n, k):
    """Domination number as a 0/1 covering program solved by HiGHS."""
    from scipy.optimize import Bounds, LinearConstraint, milp

    nb = closed_neighborhoods(n, k)
    order = 2 * n
    a = np.zeros((order, order))
    for x, ys in nb.items():
        for y in ys:
            a[x, y] = 1
    res = milp(
        c=np.ones(order),
        constraints=LinearConstraint(a, lb=np.ones(order), ub=np.inf),
        integrality=np.ones(order),
        bounds=Bounds(0, 1),
    )
    assert res.success
    return int(round(res.fun))


def brute_efficient_exists(n, k):
    """Search all n/2-subsets for one whose closed neighborhoods tile V."""
    if (2 * n) % 4:
        return False
    nb = closed_neighborhoods(n, k)
    masks = [sum(1 << y for y in nb[x]) for x in range(2 * n)]
    full = (1 << 2 * n) - 1

    def rec(start, used, left):
        if left == 0:
            return used == full
        for x in range(start, 2 * n):
            if masks[x] & used == 0 and rec(x + 1, used | masks[x], left - 1):
                return True
        return False

    return rec(0, 0, n // 2)


def girth(n, k):
    nb = closed_neighborhoods(n, k)
    best = None
    for s in range(2 * n):
        dist, parent = {s: 0}, {s: -1}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in nb[x] - {x}:
                if y not in dist:
                    dist[y], parent[y] = dist[x] + 1, x
                    q.append(y)
                elif parent[x] != y:
                    cyc = dist[x] + dist[y] + 1
                    best = cyc if best is None else min(best, cyc)
    return best


def inner_cycles(n, k):
    """Connected components of the inner edges, as sorted index lists."""
    adj = {i: set() for i in range(n)}
    for i in range(n):
        adj[i].add((i + k) % n)
        adj[(i + k) % n].add(i)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps, adj


def multiplicity(n, k, members):
    nb = closed_neighborhoods(n, k)
    counts = [0] * (2 * n)
    for x in members:
        for y in nb[x]:
            counts[y] += 1
    return counts
