"""Exact domination numbers and efficient-domination search.

``exact_gamma`` is a branch and bound over undominated vertices: the
lowest-id undominated vertex w must be dominated by some member of N[w], so
the search branches on those (at most four) candidates in ascending order.
After trying candidate x, later branches forbid x, which keeps the branches
disjoint.  The lower bound greedily packs undominated vertices whose
remaining candidate sets are pairwise disjoint; each packed vertex needs its
own dominator.

Random sets use numpy's PCG64 bit generator seeded with the caller's seed.
Per set the draw sequence is one ``Generator.permutation(2n)`` followed by
one ``Generator.integers(len(N[w]))`` per greedy step.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidParams
from .graph import Graph, PetersenParams, VertexSet, is_dominating

__all__ = [
    "MAX_VERTICES",
    "SolveBudget",
    "SolveReport",
    "exact_gamma",
    "exists_efficient",
    "random_dominating_sets",
    "greedy_dominating_set",
]

# Largest order exact_gamma accepts.  P(30,6) (60 vertices) takes ~10 s.
MAX_VERTICES = 64

_CLOCK_EVERY = 1 << 12


@dataclass(frozen=True)
class SolveBudget:
    max_nodes: int | None = None
    max_seconds: float | None = None
    target: int | None = None


@dataclass(frozen=True)
class SolveReport:
    params: PetersenParams
    gamma: int
    witness: VertexSet
    optimal: bool
    nodes_explored: int
    elapsed: float  # seconds

    def to_dict(self) -> dict:
        return {
            "n": self.params.n,
            "k": self.params.k,
            "gamma": self.gamma,
            "optimal": self.optimal,
            "nodes": self.nodes_explored,
            "millis": int(round(self.elapsed * 1000)),
            "witness": self.witness.tokens(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "SolveReport":
        params = PetersenParams.factored(d["n"], d["k"])
        witness = VertexSet.from_tokens(d["witness"], params.n)
        if len(witness) != d["gamma"]:
            raise ValueError("gamma disagrees with witness size")
        return cls(params, d["gamma"], witness, d["optimal"], d["nodes"], d["millis"] / 1000)


class _Stop(Exception):
    pass


def _check_size(g: Graph):
    if g.order > MAX_VERTICES:
        raise InvalidParams(
            f"{g.params.label()} has {g.order} vertices; the exact solver supports at most {MAX_VERTICES}"
        )


def greedy_dominating_set(g: Graph) -> VertexSet:
    """Deterministic max-gain greedy; lowest id wins ties."""
    full = (1 << g.order) - 1
    covered, chosen = 0, 0
    while covered != full:
        best, gain = -1, -1
        for x, row in enumerate(g.rows):
            c = (row & ~covered).bit_count()
            if c > gain:
                best, gain = x, c
        chosen |= 1 << best
        covered |= g.rows[best]
    return VertexSet(g.order, chosen)


def exact_gamma(g: Graph, budget: SolveBudget | None = None) -> SolveReport:
    """Minimum dominating set of ``g`` by branch and bound.

    Within budget the result is optimal and the witness is the first minimum
    set the fixed search order reaches.  When ``max_nodes`` or
    ``max_seconds`` runs out, or a set of size ``target`` or less turns up,
    the best set found so far comes back with ``optimal=False``.

    Raises
    ------
    InvalidParams
        If ``g`` has more than :data:`MAX_VERTICES` vertices.
    """
    _check_size(g)
    budget = budget or SolveBudget()
    rows = g.rows
    full = (1 << g.order) - 1
    start = time.perf_counter()

    seed = greedy_dominating_set(g)
    best_size = len(seed) + 1  # search strictly below this
    best_bits = seed.bits
    nodes = 0
    deadline = None if budget.max_seconds is None else start + budget.max_seconds

    def lower_bound(dominated, forbidden):
        rest = full & ~dominated
        used = 0
        count = 0
        while rest:
            low = rest & -rest
            rest ^= low
            cand = rows[low.bit_length() - 1] & ~forbidden
            if not cand:
                return g.order + 1
            if not cand & used:
                used |= cand
                count += 1
        return count

    def search(dominated, forbidden, chosen, size):
        nonlocal nodes, best_size, best_bits
        nodes += 1
        if budget.max_nodes is not None and nodes > budget.max_nodes:
            raise _Stop
        if deadline is not None and nodes % _CLOCK_EVERY == 0 and time.perf_counter() > deadline:
            raise _Stop
        if dominated == full:
            best_size, best_bits = size, chosen
            if budget.target is not None and size <= budget.target:
                raise _Stop
            return
        if size + lower_bound(dominated, forbidden) >= best_size:
            return
        rest = full & ~dominated
        w = (rest & -rest).bit_length() - 1
        cand = rows[w] & ~forbidden
        banned = forbidden
        while cand:
            low = cand & -cand
            cand ^= low
            x = low.bit_length() - 1
            search(dominated | rows[x], banned, chosen | low, size + 1)
            banned |= low

    stopped = False
    try:
        search(0, 0, 0, 0)
    except _Stop:
        stopped = True
    witness = VertexSet(g.order, best_bits)
    assert is_dominating(g, witness)
    # An exhausted search that never beat the greedy seed proves the seed minimum.
    optimal = not stopped
    return SolveReport(
        g.params, len(witness), witness, optimal, nodes, time.perf_counter() - start
    )


def exists_efficient(g: Graph) -> tuple[bool, VertexSet | None]:
    """Search for a partition of V into closed neighborhoods (exact cover).

    Algorithm X over dict-of-sets columns, always covering the element with
    the fewest remaining candidate dominators.  Returns ``(True, witness)``
    or ``(False, None)``.  Unlike :func:`exact_gamma` there is no size
    ceiling; perfect covers prune hard enough to stay fast.
    """
    rows = {x: [y for y in range(g.order) if g.rows[x] >> y & 1] for x in range(g.order)}
    cols: dict[int, set[int]] = {y: set() for y in range(g.order)}
    for x, elems in rows.items():
        for y in elems:
            cols[y].add(x)

    def select(x):
        removed = []
        for y in rows[x]:
            for z in cols[y]:
                for w in rows[z]:
                    if w != y:
                        cols[w].remove(z)
            removed.append(cols.pop(y))
        return removed

    def deselect(x, removed):
        for y in reversed(rows[x]):
            cols[y] = removed.pop()
            for z in cols[y]:
                for w in rows[z]:
                    if w != y:
                        cols[w].add(z)

    solution: list[int] = []

    def search():
        if not cols:
            return True
        y = min(cols, key=lambda e: (len(cols[e]), e))
        for x in sorted(cols[y]):
            solution.append(x)
            removed = select(x)
            if search():
                return True
            deselect(x, removed)
            solution.pop()
        return False

    if search():
        return True, VertexSet.from_ids(g.order, solution)
    return False, None


def _prune(g: Graph, chosen: list[int]) -> list[int]:
    full = (1 << g.order) - 1
    keep = list(chosen)
    for x in reversed(chosen):
        others = [y for y in keep if y != x]
        cover = 0
        for y in others:
            cover |= g.rows[y]
        if cover == full:
            keep = others
    return keep


def random_dominating_sets(g: Graph, count: int, seed: int) -> list[VertexSet]:
    """Seeded randomized-greedy minimal dominating sets.

    For each set: shuffle the vertices, walk the shuffled order and, for
    every vertex still undominated, add a uniformly chosen member of its
    closed neighborhood; then drop redundant members in reverse insertion
    order.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    nbhd = [[y for y in range(g.order) if row >> y & 1] for row in g.rows]
    for _ in range(count):
        order = rng.permutation(g.order)
        covered = 0
        chosen: list[int] = []
        for w in order.tolist():
            if covered >> w & 1:
                continue
            opts = nbhd[w]
            x = opts[int(rng.integers(len(opts)))]
            chosen.append(x)
            covered |= g.rows[x]
        out.append(VertexSet.from_ids(g.order, _prune(g, chosen)))
    return out
