"""Explicit dominating sets for P(ck, k) and P(6k, k).

Each block of a construction has its own generator yielding
``(role, raw_index)`` pairs, where ``role`` is ``"v"`` (outer) or ``"u"``
(inner) and ``raw_index`` may be negative or exceed n.  :func:`_assemble`
is the single place indices are reduced mod n; it refuses overlapping
blocks so a miscounted construction fails loudly instead of shrinking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .bounds import ck_upper_bound, p6k_size
from .exceptions import NotApplicable, TranscriptionError, UnsupportedParams
from .graph import (
    PetersenParams,
    VertexSet,
    build_petersen,
    undominated_vertices,
)

__all__ = [
    "CaseLabel",
    "ConstructionReport",
    "construct_ck",
    "construct_p6k",
    "construct_efficient",
    "ck_blocks",
    "p6k_blocks",
]

Block = Iterator[tuple[str, int]]
BlockList = list[tuple[str, Block]]


@dataclass(frozen=True)
class CaseLabel:
    family: str
    residues: dict = field(default_factory=dict)
    special: str = "none"

    def to_dict(self) -> dict:
        return {"family": self.family, "residues": dict(self.residues), "special": self.special}

    @classmethod
    def from_dict(cls, d: dict) -> "CaseLabel":
        return cls(d["family"], dict(d.get("residues", {})), d.get("special", "none"))

    def __str__(self) -> str:
        parts = [f"{k}={v}" for k, v in self.residues.items()]
        if self.special != "none":
            parts.append(self.special)
        return f"{self.family}[{','.join(parts)}]"


@dataclass(frozen=True)
class ConstructionReport:
    params: PetersenParams
    case: CaseLabel
    set: VertexSet
    claimed_size: int
    verified: bool
    undominated: VertexSet

    @property
    def actual_size(self) -> int:
        return len(self.set)

    @property
    def size_matches(self) -> bool:
        return self.actual_size == self.claimed_size

    def to_dict(self) -> dict:
        return {
            "n": self.params.n,
            "k": self.params.k,
            "c": self.params.c,
            "case": self.case.to_dict(),
            "claimed_size": self.claimed_size,
            "actual_size": self.actual_size,
            "verified": self.verified,
            "set": self.set.tokens(),
            "undominated": self.undominated.tokens(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "ConstructionReport":
        params = PetersenParams(d["n"], d["k"], d.get("c"))
        s = VertexSet.from_tokens(d["set"], params.n)
        if len(s) != d["actual_size"]:
            raise ValueError("actual_size disagrees with the serialized set")
        return cls(
            params,
            CaseLabel.from_dict(d["case"]),
            s,
            d["claimed_size"],
            d["verified"],
            VertexSet.from_tokens(d.get("undominated", []), params.n),
        )


def _assemble(n: int, blocks: BlockList, remove: Iterable[tuple[str, int]] = ()) -> VertexSet:
    owner: dict[int, str] = {}
    for name, block in blocks:
        for role, raw in block:
            x = raw % n if role == "v" else n + raw % n
            if x in owner:
                tok = f"{role}{raw % n}"
                raise TranscriptionError(
                    f"blocks {owner[x]!r} and {name!r} both contain {tok} (n={n})"
                )
            owner[x] = name
    for role, raw in remove:
        x = raw % n if role == "v" else n + raw % n
        if x not in owner:
            raise TranscriptionError(f"removed vertex {role}{raw % n} is not in the union")
        del owner[x]
    return VertexSet.from_ids(2 * n, owner)


# P(ck, k), odd k ---------------------------------------------------------

def _odd_outer_stride4(n, k):
    yield from (("v", 4 * i) for i in range(n // 4))


def _odd_inner_stride4(n, k):
    yield from (("u", 4 * i + 2) for i in range(n // 4))


def _odd_tail_c1_k1(n, k):
    for i in range(k // 4):
        yield "u", n - 2 - 4 * i
        yield "u", n - 4 - 4 * i
    yield "u", n - 1


def _odd_tail_c1_k3(n, k):
    for i in range((k + 3) // 4):
        yield "u", n - 2 - 4 * i
        yield "u", n - 4 - 4 * i
    yield "v", n - 3


def _odd_tail_c2_k1(n, k):
    for i in range(k // 4):
        yield "u", n - 2 - 4 * i
        yield "u", n - 5 - 4 * i
    yield "u", n - 1
    yield "u", n - 3


def _odd_tail_c2_k3(n, k):
    for i in range((k + 3) // 4):
        yield "u", n - 2 - 4 * i
        yield "u", n - 3 - 4 * i


def _odd_tail_c3_k1(n, k):
    yield from (("u", n - 2 - 4 * i) for i in range(k // 4 + 1))
    yield "v", n - 3


def _odd_tail_c3_k3(n, k):
    yield from (("u", n - 2 - 4 * i) for i in range(k // 4 + 1))


_ODD_TAILS: dict[tuple[int, int], Callable] = {
    (1, 1): _odd_tail_c1_k1,
    (1, 3): _odd_tail_c1_k3,
    (2, 1): _odd_tail_c2_k1,
    (2, 3): _odd_tail_c2_k3,
    (3, 1): _odd_tail_c3_k1,
    (3, 3): _odd_tail_c3_k3,
}


# P(ck, k), even k: periodic blocks over j in [0, c // 4) -------------------

def _blocks_k0(k, m2):
    """The four paired blocks plus the singleton block used when 4 | k."""
    q = k // 4

    def a40():
        for j in range(m2):
            for i in range(q):
                yield "v", 4 * k * j + 2 + 4 * i
                yield "u", 4 * k * j + 4 * i

    def b40():
        for j in range(m2):
            for i in range(q):
                yield "v", 4 * k * j + k + 1 + 4 * i
                yield "u", 4 * k * j + k + 3 + 4 * i

    def c40():
        for j in range(m2):
            for i in range(q):
                yield "v", 4 * k * j + 2 * k + 4 * i
                yield "u", 4 * k * j + 2 * k + 2 + 4 * i

    def d40():
        for j in range(m2):
            for i in range(q):
                yield "v", 4 * k * j + 3 * k + 3 + 4 * i
                yield "u", 4 * k * j + 3 * k + 1 + 4 * i

    def e40():
        for j in range(m2):
            yield "v", 4 * k * j + 3 * k

    return [("A40", a40()), ("B40", b40()), ("C40", c40()), ("D40", d40()), ("E40", e40())]


def _blocks_k2(k, m2):
    p = (k - 2) // 4

    def a42():
        for j in range(m2):
            for i in range(p):
                yield "v", 4 * k * j + 4 * i
                yield "u", 4 * k * j + 2 + 4 * i

    def b42():
        for j in range(m2):
            for i in range(p):
                yield "v", 4 * k * j + k + 1 + 4 * i
                yield "u", 4 * k * j + k - 1 + 4 * i

    def c42():
        for j in range(m2):
            for i in range(p):
                yield "v", 4 * k * j + 2 * k + 2 + 4 * i
                yield "u", 4 * k * j + 2 * k + 4 * i

    def d42():
        for j in range(m2):
            for i in range(p):
                yield "v", 4 * k * j + 3 * k - 1 + 4 * i
                yield "u", 4 * k * j + 3 * k + 1 + 4 * i

    def e42():
        for j in range(m2):
            b = 4 * k * j
            yield "v", b + k - 2
            yield "v", b + 2 * k - 2
            yield "v", b + 4 * k - 3
            yield "u", b + 2 * k - 3
            yield "u", b + 4 * k - 2

    return [("A42", a42()), ("B42", b42()), ("C42", c42()), ("D42", d42()), ("E42", e42())]


# Even-k tails covering the last (c mod 4)*k indices.  Each returns
# (blocks, removed vertices).

def _even_tail_c1(n, k):
    if k % 4 == 0:
        return [("tail-c1-inner-run", (("u", i) for i in range(n - k + 1, n)))], []

    def extra():
        yield "v", n - k
        yield "v", n - 3
        yield "u", n - 1

    return [
        ("tail-c1-inner-run", (("u", i) for i in range(n - k + 1, n - 3))),
        ("tail-c1-extra", extra()),
    ], []


def _even_tail_c2(n, k):
    if k % 4 == 0:
        def pairs():
            for i in range(k // 4):
                yield "v", n - 2 * k + 2 + 4 * i
                yield "u", n - 2 * k + 4 * i

        return [
            ("tail-c2-pairs", pairs()),
            ("tail-c2-inner-run", (("u", i) for i in range(n - k, n))),
        ], [("u", n - 2 * k)]

    def pairs():
        for i in range((k - 2) // 4):
            yield "v", n - 2 * k + 4 * i
            yield "u", n - 2 * k + 2 + 4 * i

    return [
        ("tail-c2-pairs", pairs()),
        ("tail-c2-inner-run", (("u", i) for i in range(n - k - 3, n - 4))),
        ("tail-c2-extra", iter([("v", n - 3)])),
    ], []


def _even_tail_c3_k4(n, k):
    def outer():
        for i in range(1, 4):
            yield "v", n - i * k
            yield "v", n - i * k + 3

    inner = iter([("u", n - 2 * k + 2), ("u", n - k + 1)])
    return [("tail-c3-k4-outer", outer()), ("tail-c3-k4-inner", inner)], [("v", n - k)]


def _even_tail_c3_k8(n, k):
    def outer():
        for i in range(1, 4):
            yield "v", n - i * k
            yield "v", n - i * k + 3
            yield "v", n - i * k + 6

    inner = iter([
        ("u", n - 3 * k + 4), ("u", n - 2 * k + 2), ("u", n - 2 * k + 7),
        ("u", n - k + 1), ("u", n - k + 5),
    ])
    return [("tail-c3-k8-outer", outer()), ("tail-c3-k8-inner", inner)], []


def _even_tail_c3_k0(n, k):
    q = k // 4

    def third():
        for i in range(q - 1):
            yield "v", n - 3 * k + 6 + 4 * i
            yield "u", n - 3 * k + 4 + 4 * i

    def second():
        for i in range(q - 2):
            yield "v", n - 2 * k + 9 + 4 * i
            yield "u", n - 2 * k + 11 + 4 * i

    def first():
        for i in range(q - 2):
            yield "v", n - k + 8 + 4 * i
            yield "u", n - k + 9 + 4 * i
            yield "u", n - k + 10 + 4 * i

    def column_pairs():
        for i in range(1, 4):
            yield "v", n - i * k
            yield "v", n - i * k + 3

    fixed = iter([
        ("v", n - 2 * k + 6), ("v", n - k + 6), ("v", n - 1),
        ("u", n - 2 * k + 2), ("u", n - 2 * k + 7), ("u", n - k + 1), ("u", n - k + 5),
    ])
    return [
        ("tail-c3-k0-third", third()),
        ("tail-c3-k0-second", second()),
        ("tail-c3-k0-first", first()),
        ("tail-c3-k0-column-pairs", column_pairs()),
        ("tail-c3-k0-fixed", fixed),
    ], []


def _even_tail_c3_k2(n, k):
    p = (k - 2) // 4

    def third():
        for i in range(p):
            yield "v", n - 3 * k + 4 * i
            yield "u", n - 3 * k + 2 + 4 * i

    def second():
        for i in range(p + 1):
            yield "v", n - 2 * k + 1 + 4 * i
            yield "u", n - 2 * k - 1 + 4 * i

    def first():
        for i in range(p):
            yield "v", n - k + 3 + 4 * i
            yield "u", n - k + 4 * i
            yield "u", n - k + 1 + 4 * i

    fixed = iter([("v", n - 2 * k - 2), ("u", n - 2)])
    return [
        ("tail-c3-k2-third", third()),
        ("tail-c3-k2-second", second()),
        ("tail-c3-k2-first", first()),
        ("tail-c3-k2-fixed", fixed),
    ], []


def _ck_case(c: int, k: int) -> CaseLabel:
    residues = {"c_mod4": c % 4, "k_mod2": k % 2, "k_mod4": k % 4}
    if k % 2:
        return CaseLabel("ck-odd-k", residues)
    special = f"k={k}" if c % 4 == 3 and k in (4, 8) else "none"
    return CaseLabel("ck-even-k", residues, special)


def ck_blocks(c: int, k: int) -> tuple[BlockList, list[tuple[str, int]]]:
    """Named blocks (and removed vertices) of the P(ck, k) construction."""
    if c < 3 or k < 3:
        raise UnsupportedParams(f"construction needs c >= 3 and k >= 3, got c={c}, k={k}")
    n = c * k
    r = c % 4
    if k % 2:
        blocks = [("A-outer", _odd_outer_stride4(n, k)), ("B-inner", _odd_inner_stride4(n, k))]
        if r:
            tail = _ODD_TAILS[(r, k % 4)]
            blocks.append((tail.__name__.lstrip("_").replace("_", "-"), tail(n, k)))
        return blocks, []

    m2 = c // 4
    blocks = _blocks_k0(k, m2) if k % 4 == 0 else _blocks_k2(k, m2)
    removed: list[tuple[str, int]] = []
    if r == 1:
        tail, removed = _even_tail_c1(n, k)
    elif r == 2:
        tail, removed = _even_tail_c2(n, k)
    elif r == 3:
        if k == 4:
            tail, removed = _even_tail_c3_k4(n, k)
        elif k == 8:
            tail, removed = _even_tail_c3_k8(n, k)
        elif k % 4 == 0:
            tail, removed = _even_tail_c3_k0(n, k)
        else:
            tail, removed = _even_tail_c3_k2(n, k)
    else:
        tail = []
    return blocks + tail, removed


def _report(params, case, s, claimed) -> ConstructionReport:
    g = build_petersen(params)
    und = undominated_vertices(g, s)
    return ConstructionReport(params, case, s, claimed, len(und) == 0, und)


def construct_ck(c: int, k: int) -> ConstructionReport:
    """Dominating set of P(ck, k) meeting :func:`~gpdom.bounds.ck_upper_bound`.

    The result is checked, not trusted: ``verified`` is the outcome of a full
    domination test and ``undominated`` lists any vertex the set misses.

    Raises
    ------
    UnsupportedParams
        If ``c < 3`` or ``k < 3``.
    """
    blocks, removed = ck_blocks(c, k)
    s = _assemble(c * k, blocks, removed)
    return _report(PetersenParams.from_ck(c, k), _ck_case(c, k), s, ck_upper_bound(c, k))


def p6k_blocks(k: int) -> BlockList:
    if k < 4:
        raise UnsupportedParams(f"P(6k,k) construction needs k >= 4, got k={k}")
    t = k % 3

    def inner_run(lo, hi):
        return (("u", i) for i in range(lo, hi + 1))

    def outer_progression(start, count):
        return (("v", start + 3 * i) for i in range(count))

    if t == 0:
        return [
            ("inner-0", inner_run(0, k - 1)),
            ("inner-3k", inner_run(3 * k, 4 * k - 1)),
            ("outer-k", outer_progression(k + 1, 2 * k // 3)),
            ("outer-4k", outer_progression(4 * k + 1, 2 * k // 3)),
        ]
    if t == 1:
        return [
            ("inner-0", inner_run(0, k - 1)),
            ("inner-3k", inner_run(3 * k - 2, 4 * k - 3)),
            ("outer-k", outer_progression(k + 1, (2 * k - 2) // 3)),
            ("outer-4k", outer_progression(4 * k - 1, (k - 1) // 3)),
            ("outer-5k-pair", iter([("v", 5 * k - 2), ("v", 5 * k - 1)])),
            ("outer-5k", outer_progression(5 * k + 2, (k - 1) // 3)),
        ]
    return [
        ("inner-0", inner_run(0, k - 1)),
        ("outer-k", outer_progression(k + 1, (k - 2) // 3 + 1)),
        ("outer-2k", outer_progression(2 * k + 2, (k - 5) // 3)),
        ("inner-3k", inner_run(3 * k, 4 * k - 5)),
        ("outer-4k", outer_progression(4 * k + 1, (k - 5) // 3)),
        ("outer-5k", outer_progression(5 * k, (k - 2) // 3 + 1)),
        ("fixed", iter([
            ("u", 3 * k - 4), ("v", 3 * k - 2), ("u", 4 * k - 3), ("u", 4 * k - 1),
            ("v", 4 * k - 3), ("u", 5 * k - 2), ("v", 5 * k - 4),
        ])),
    ]


def construct_p6k(k: int) -> ConstructionReport:
    """Dominating set of P(6k, k) with ceil(10k/3) vertices, for k >= 4."""
    s = _assemble(6 * k, p6k_blocks(k))
    case = CaseLabel("p6k", {"t": k % 3})
    return _report(PetersenParams.from_ck(6, k), case, s, p6k_size(k))


def _stride4_pattern(n: int) -> VertexSet:
    return _assemble(n, [("A-outer", _odd_outer_stride4(n, 0)), ("B-inner", _odd_inner_stride4(n, 0))])


def construct_efficient(params: PetersenParams) -> ConstructionReport:
    """Efficient dominating set of P(n, k), which exists iff 4 | n and k is odd.

    When n = c*k with 4 | c the stride-4 pattern ``{v_4i} | {u_4i+2}`` is
    used directly; otherwise the witness comes from the exact-cover search.

    Raises
    ------
    NotApplicable
        If n is not divisible by 4 or k is even.
    """
    n, k = params.n, params.k
    if n % 4 or k % 2 == 0:
        raise NotApplicable(f"P({n},{k}) has no efficient dominating set (needs 4 | n, k odd)")
    c = params.c if params.c is not None else (n // k if n % k == 0 else None)
    residues = {"n_mod4": n % 4, "k_mod2": k % 2}
    if c is not None and c % 4 == 0:
        s = _stride4_pattern(n)
        case = CaseLabel("ck-odd-k", {"c_mod4": 0, "k_mod2": 1, "k_mod4": k % 4})
    else:
        from .solver import exists_efficient

        found, witness = exists_efficient(build_petersen(params))
        if not found:
            raise NotApplicable(f"exact-cover search found no efficient set for P({n},{k})")
        s = witness
        case = CaseLabel("efficient-search", residues)
    return _report(params, case, s, n // 2)
