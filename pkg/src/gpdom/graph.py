"""Generalized Petersen graphs and domination predicates.

Vertices use one dense integer encoding throughout the package: outer
vertex ``v_i`` is ``i`` and inner vertex ``u_i`` is ``n + i``.  Vertex sets
are fixed-width bit vectors stored in a Python ``int``; bit ``x`` is set when
vertex ``x`` is a member.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, NamedTuple, Union

from .exceptions import InvalidParams

__all__ = [
    "PetersenParams",
    "VertexId",
    "VertexSet",
    "Graph",
    "build_petersen",
    "closed_neighborhood",
    "is_dominating",
    "is_efficient_dominating",
    "undominated_vertices",
    "coverage_counts",
    "parse_token",
]

_TOKEN = re.compile(r"^([vu])(\d+)$")


@dataclass(frozen=True)
class PetersenParams:
    """Parameters of P(n, k), optionally carrying the factorization n = c*k."""

    n: int
    k: int
    c: int | None = None

    def __post_init__(self):
        n, k, c = self.n, self.k, self.c
        for name, value in (("n", n), ("k", k)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidParams(f"{name} must be an int, got {value!r}")
        if n < 3:
            raise InvalidParams(f"n must be at least 3, got n={n}")
        if not 1 <= k <= (n - 1) // 2:
            raise InvalidParams(
                f"k must lie in [1, {(n - 1) // 2}] for n={n}, got k={k}"
            )
        if c is not None:
            if c * k != n:
                raise InvalidParams(f"c*k must equal n, got c={c}, k={k}, n={n}")
            if c < 3:
                raise InvalidParams(f"c must be at least 3, got c={c}")

    @classmethod
    def from_ck(cls, c: int, k: int) -> "PetersenParams":
        return cls(c * k, k, c)

    @classmethod
    def factored(cls, n: int, k: int) -> "PetersenParams":
        """Build params, filling in c = n/k when k divides n with quotient >= 3."""
        c = n // k if k > 0 and n % k == 0 and n // k >= 3 else None
        return cls(n, k, c)

    @property
    def order(self) -> int:
        return 2 * self.n

    def outer(self, i: int) -> int:
        return i % self.n

    def inner(self, i: int) -> int:
        return self.n + i % self.n

    def label(self) -> str:
        return f"P({self.n},{self.k})"


class VertexId(NamedTuple):
    role: str  # "outer" or "inner"
    index: int

    def code(self, n: int) -> int:
        if self.role == "outer":
            return self.index % n
        if self.role == "inner":
            return n + self.index % n
        raise ValueError(f"unknown vertex role {self.role!r}")

    @classmethod
    def decode(cls, code: int, n: int) -> "VertexId":
        if not 0 <= code < 2 * n:
            raise ValueError(f"vertex code {code} outside [0, {2 * n})")
        return cls("outer", code) if code < n else cls("inner", code - n)

    def token(self) -> str:
        return f"{'v' if self.role == 'outer' else 'u'}{self.index}"


Vertex = Union[int, VertexId]


def token(code: int, n: int) -> str:
    return f"v{code}" if code < n else f"u{code - n}"


def parse_token(text: str, n: int) -> int:
    """Convert a ``"v<i>"``/``"u<i>"`` token to its dense code."""
    m = _TOKEN.match(text.strip())
    if m is None:
        raise ValueError(f"malformed vertex token {text!r}")
    i = int(m.group(2))
    if i >= n:
        raise ValueError(f"vertex token {text!r} out of range for n={n}")
    return i if m.group(1) == "v" else n + i


@dataclass(frozen=True)
class VertexSet:
    """Immutable subset of ``range(universe)`` backed by an int bitmask."""

    universe: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe:
            raise ValueError("member ids must lie in [0, universe)")

    @classmethod
    def from_ids(cls, universe: int, ids: Iterable[int]) -> "VertexSet":
        bits = 0
        for x in ids:
            if not 0 <= x < universe:
                raise ValueError(f"vertex id {x} outside [0, {universe})")
            bits |= 1 << x
        return cls(universe, bits)

    @classmethod
    def full(cls, universe: int) -> "VertexSet":
        return cls(universe, (1 << universe) - 1)

    @classmethod
    def from_tokens(cls, tokens: Iterable[str], n: int) -> "VertexSet":
        return cls.from_ids(2 * n, (parse_token(t, n) for t in tokens))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and 0 <= x < self.universe and bool(self.bits >> x & 1)

    def __iter__(self) -> Iterator[int]:
        b = self.bits
        while b:
            low = b & -b
            yield low.bit_length() - 1
            b ^= low

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe, self.bits | other.bits)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe, self.bits & other.bits)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe, self.bits & ~other.bits)

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def _check(self, other):
        if not isinstance(other, VertexSet) or other.universe != self.universe:
            raise ValueError("vertex sets over different universes")

    def complement(self) -> "VertexSet":
        return VertexSet(self.universe, ((1 << self.universe) - 1) & ~self.bits)

    def ids(self) -> list[int]:
        return list(self)

    def tokens(self) -> list[str]:
        n = self.universe // 2
        return [token(x, n) for x in self]

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(self.tokens())}}})"


@dataclass(frozen=True)
class Graph:
    """P(n, k) with neighbor lists and closed-neighborhood bit rows.

    ``rows[x]`` is the bitmask of N[x].  Both views are derived from the
    edge relation once, in :func:`build_petersen`.
    """

    params: PetersenParams
    neighbors: tuple[tuple[int, ...], ...] = field(repr=False)
    rows: tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def order(self) -> int:
        return 2 * self.params.n

    def edges(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a, nbrs in enumerate(self.neighbors) for b in nbrs if a < b)

    def empty_set(self) -> VertexSet:
        return VertexSet(self.order)

    def vertex_set(self, ids: Iterable[int]) -> VertexSet:
        return VertexSet.from_ids(self.order, ids)

    def token(self, x: int) -> str:
        return token(x, self.n)

    def inner_cycle_count(self) -> int:
        return gcd(self.n, self.k)

    def __repr__(self) -> str:
        return f"Graph({self.params.label()})"


def build_petersen(params: PetersenParams) -> Graph:
    """Build the generalized Petersen graph P(n, k).

    Edges are ``v_i v_{i+1}``, ``v_i u_i`` and ``u_i u_{i+k}`` for every i,
    subscripts mod n.  Parameter validation happens in
    :class:`PetersenParams`; degenerate k (including k = n/2) is rejected
    there.
    """
    n, k = params.n, params.k
    nbrs: list[set[int]] = [set() for _ in range(2 * n)]

    def link(a, b):
        nbrs[a].add(b)
        nbrs[b].add(a)

    for i in range(n):
        link(params.outer(i), params.outer(i + 1))
        link(params.outer(i), params.inner(i))
        link(params.inner(i), params.inner(i + k))

    neighbors = tuple(tuple(sorted(s)) for s in nbrs)
    if any(len(s) != 3 for s in neighbors):
        raise InvalidParams(f"{params.label()} is not 3-regular")
    rows = tuple((1 << x) | sum(1 << y for y in ns) for x, ns in enumerate(neighbors))
    return Graph(params, neighbors, rows)


def _code(g: Graph, v: Vertex) -> int:
    x = v.code(g.n) if isinstance(v, VertexId) else v
    if not 0 <= x < g.order:
        raise ValueError(f"vertex {v!r} outside {g.params.label()}")
    return x


def closed_neighborhood(g: Graph, v: Vertex) -> VertexSet:
    return VertexSet(g.order, g.rows[_code(g, v)])


def _cover_bits(g: Graph, s: VertexSet) -> int:
    if s.universe != g.order:
        raise ValueError("vertex set universe does not match graph order")
    covered = 0
    for x in s:
        covered |= g.rows[x]
    return covered


def undominated_vertices(g: Graph, s: VertexSet) -> VertexSet:
    """Return V minus N[s]."""
    return VertexSet(g.order, ((1 << g.order) - 1) & ~_cover_bits(g, s))


def is_dominating(g: Graph, s: VertexSet) -> bool:
    return _cover_bits(g, s) == (1 << g.order) - 1


def coverage_counts(g: Graph, s: VertexSet) -> list[int]:
    """For each vertex, the number of members of ``s`` whose N[.] contains it."""
    counts = [0] * g.order
    for x in s:
        counts[x] += 1
        for y in g.neighbors[x]:
            counts[y] += 1
    return counts


def is_efficient_dominating(g: Graph, s: VertexSet) -> bool:
    """True when every vertex lies in exactly one member's closed neighborhood."""
    if s.universe != g.order:
        raise ValueError("vertex set universe does not match graph order")
    return all(c == 1 for c in coverage_counts(g, s))
