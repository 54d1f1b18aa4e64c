"""Column decompositions, structural audits and bound tables for P(ck, k).

Column i of P(ck, k) is the vertex set ``{v_{i+jk}, u_{i+jk} : 0 <= j < c}``;
the trace of a set S on column i is written S_i.  The audits check, for a
given dominating set, the column-size facts that every dominating set of
P(5k, k) or P(6k, k) must satisfy.  Because those facts are theorems, a
failing check means a bug (in this package or in the input), never a
legitimate counterexample.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence, TextIO

from .bounds import (
    ck_upper_bound,
    known_gamma,
    known_gamma_detail,
    prior_upper_bound,
)
from .constructions import construct_ck
from .exceptions import LemmaViolation, NotApplicable, NotFactored
from .graph import Graph, PetersenParams, VertexSet, build_petersen, is_dominating
from .solver import SolveBudget, exact_gamma

__all__ = [
    "ColumnProfile",
    "AuditCheck",
    "AuditReport",
    "BoundTableRow",
    "column_profile",
    "audit_lemmas",
    "bound_table",
    "bound_violations",
    "write_bound_csv",
    "known_gamma",
    "prior_upper_bound",
    "ck_upper_bound",
]

CSV_HEADER = ("c", "k", "zhao", "thm21", "construction", "exact", "optimal")


@dataclass(frozen=True)
class ColumnProfile:
    k: int
    c: int
    sizes: tuple[int, ...]
    column_sets: tuple[VertexSet, ...] = field(repr=False)
    inner_sizes: tuple[int, ...] = field(repr=False, default=())

    def size(self, i: int) -> int:
        return self.sizes[i % self.k]

    def inner(self, i: int) -> int:
        return self.inner_sizes[i % self.k]


def column_profile(g: Graph, s: VertexSet) -> ColumnProfile:
    """Split ``s`` by vertex index mod k.

    Raises
    ------
    NotFactored
        If ``g`` was built without c.
    """
    c = g.params.c
    if c is None:
        raise NotFactored(f"{g.params.label()} carries no c; build it with PetersenParams.from_ck")
    n, k = g.n, g.k
    cols = [0] * k
    inner = [0] * k
    for x in s:
        i = (x % n) % k
        cols[i] |= 1 << x
        if x >= n:
            inner[i] += 1
    sets = tuple(VertexSet(g.order, b) for b in cols)
    return ColumnProfile(k, c, tuple(len(t) for t in sets), sets, tuple(inner))


@dataclass(frozen=True)
class AuditCheck:
    name: str
    passed: bool
    column: int | None = None
    detail: str = ""


@dataclass(frozen=True)
class AuditReport:
    params: PetersenParams
    set: VertexSet
    checks: tuple[AuditCheck, ...]

    @property
    def violations(self) -> list[AuditCheck]:
        return [ch for ch in self.checks if not ch.passed]

    @property
    def ok(self) -> bool:
        return not self.violations

    def reproducer(self) -> dict:
        return {"n": self.params.n, "k": self.params.k, "set": self.set.tokens()}

    def raise_on_violation(self) -> None:
        bad = self.violations
        if bad:
            names = ", ".join(f"{ch.name}@{ch.column}" for ch in bad)
            raise LemmaViolation(
                f"{self.params.label()}: failed {names}; reproducer {json.dumps(self.reproducer())}",
                self.reproducer(),
            )

    def json_lines(self) -> list[str]:
        lines = []
        for ch in self.checks:
            d = {
                "n": self.params.n,
                "k": self.params.k,
                "check": ch.name,
                "column": ch.column,
                "passed": ch.passed,
                "detail": ch.detail,
            }
            if not ch.passed:
                d["set"] = self.set.tokens()
            lines.append(json.dumps(d))
        return lines


def _row(x: int, n: int, k: int) -> int:
    return (x % n) // k


def _is_independent(g: Graph, s: VertexSet) -> bool:
    return all(g.rows[x] & s.bits == 1 << x for x in s)


def _audit_p5k(g: Graph, s: VertexSet, prof: ColumnProfile) -> list[AuditCheck]:
    n, k = g.n, g.k
    out = []
    for i in range(k):
        size = prof.size(i)
        out.append(AuditCheck("column-min-2", size >= 2, i, f"|S_i|={size}"))

        rows = sorted(_row(x, n, k) for x in prof.column_sets[i] if x < n)
        far = [(a, b) for a in rows for b in rows if a < b and (b - a) in (2, 3)]
        if far:
            out.append(AuditCheck("outer-gap-forces-4", size >= 4, i, f"outer rows {far[0]}, |S_i|={size}"))
        else:
            out.append(AuditCheck("outer-gap-forces-4", True, i, "vacuous"))

        if size == 2:
            col = prof.column_sets[i]
            inner_only = prof.inner(i) == 2
            indep = _is_independent(g, col)
            out.append(AuditCheck(
                "pair-column-inner-independent", inner_only and indep, i,
                f"inner={prof.inner(i)}, independent={indep}",
            ))
        else:
            out.append(AuditCheck("pair-column-inner-independent", True, i, "vacuous"))

    if k < 4:
        return out

    for i in range(k):
        a, b, c2, d = (prof.size(i + t) for t in range(4))
        detail = f"sizes {a},{b},{c2},{d}"
        if a == 2 and b == 2:
            ok = c2 >= 4 and (c2 != 4 or d >= 4)
            out.append(AuditCheck("pair-then-pair", ok, i, detail))
        else:
            out.append(AuditCheck("pair-then-pair", True, i, "vacuous"))
        if a == 2 and b == 3:
            ok = c2 >= 3 and (c2 != 3 or d >= 4)
            out.append(AuditCheck("pair-then-triple", ok, i, detail))
        else:
            out.append(AuditCheck("pair-then-triple", True, i, "vacuous"))

    out.extend(_block_sum_checks(prof))
    total = sum(prof.size(x) for x in range(n))
    out.append(AuditCheck("counting-identity", total == 5 * len(s), None, f"sum={total}, |S|={len(s)}"))
    return out


def _block_sum_checks(prof: ColumnProfile) -> list[AuditCheck]:
    """Each maximal run starting at a size-2 column averages at least 3."""
    k = prof.k
    sizes = prof.sizes
    starts = [i for i in range(k) if sizes[i] == 2 and sizes[i - 1] > 2]
    if not starts:
        ok = any(x != 2 for x in sizes)
        return [AuditCheck("block-sum", ok, None, "no size-2 run start" if ok else "every column has size 2")]
    out = []
    for idx, t in enumerate(starts):
        nxt = starts[(idx + 1) % len(starts)]
        length = (nxt - t) % k or k
        total = sum(sizes[(t + x) % k] for x in range(length))
        out.append(AuditCheck("block-sum", total >= 3 * length, t, f"sum={total}, length={length}"))
    return out


def _audit_p6k(g: Graph, s: VertexSet, prof: ColumnProfile) -> list[AuditCheck]:
    k = g.k
    out = []
    for i in range(k):
        size = prof.size(i)
        out.append(AuditCheck("column-min-2", size >= 2, i, f"|S_i|={size}"))
        if prof.inner(i) == 1:
            out.append(AuditCheck("single-inner-forces-4", size >= 4, i, f"|S_i|={size}"))
        else:
            out.append(AuditCheck("single-inner-forces-4", True, i, "vacuous"))
    if k >= 3:
        for i in range(k):
            tri = prof.size(i - 1) + prof.size(i) + prof.size(i + 1)
            out.append(AuditCheck("triple-at-least-10", tri >= 10, i, f"sum={tri}"))
    total = sum(prof.size(i) + prof.size(i + 1) + prof.size(i + 2) for i in range(6 * k))
    out.append(AuditCheck("counting-identity", total == 18 * len(s), None, f"sum={total}, |S|={len(s)}"))
    return out


def audit_lemmas(g: Graph, s: VertexSet, require_dominating: bool = True) -> AuditReport:
    """Check the column-size facts for a dominating set of P(5k,k) or P(6k,k).

    For c = 5: every column has at least 2 members; two outer members two
    rows apart force 4; a 2-member column is inner and independent; the
    follow-on size chains after a 2-column and the run averages (k >= 4).
    For c = 6: at least 2 per column; a single inner member forces 4; any
    three consecutive columns hold at least 10 (k >= 3).

    ``require_dominating=False`` runs the checks on arbitrary sets, which is
    only useful for exercising the checker itself.

    Raises
    ------
    NotApplicable
        If ``g`` is not P(5k,k) or P(6k,k), or ``s`` does not dominate ``g``.
    """
    c = g.params.c
    if c is None and g.n % g.k == 0:
        c = g.n // g.k
        g = build_petersen(PetersenParams(g.n, g.k, c))
    if c not in (5, 6):
        raise NotApplicable(f"audits cover P(5k,k) and P(6k,k), not {g.params.label()}")
    if require_dominating and not is_dominating(g, s):
        raise NotApplicable("audits require a dominating set")
    prof = column_profile(g, s)
    checks = _audit_p5k(g, s, prof) if c == 5 else _audit_p6k(g, s, prof)
    return AuditReport(g.params, s, tuple(checks))


@dataclass(frozen=True)
class BoundTableRow:
    c: int
    k: int
    prior: int
    ck_bound: int
    construction_size: int | None  # None when the construction failed verification
    exact: int | None = None
    optimal: str | None = None  # "true"/"false" from the solver, "proved"/"quoted" from closed forms

    def values(self) -> tuple:
        return (self.c, self.k, self.prior, self.ck_bound, self.construction_size, self.exact, self.optimal)

    def csv_fields(self) -> list[str]:
        return ["" if v is None else str(v) for v in self.values()]


def _table_cell(args) -> BoundTableRow:
    c, k, solve_limit, budget = args
    rep = construct_ck(c, k)
    size = rep.actual_size if rep.verified else None
    exact, optimal = None, None
    if 2 * c * k <= solve_limit:
        sr = exact_gamma(build_petersen(PetersenParams.from_ck(c, k)), budget)
        exact, optimal = sr.gamma, "true" if sr.optimal else "false"
    else:
        kv = known_gamma_detail(c * k, k)
        if kv is not None:
            exact, optimal = kv.value, "quoted" if kv.quoted else "proved"
    return BoundTableRow(c, k, prior_upper_bound(c, k), ck_upper_bound(c, k), size, exact, optimal)


def bound_table(
    c_values: Iterable[int],
    k_values: Iterable[int],
    solve_limit: int = 40,
    budget: SolveBudget | None = None,
    workers: int = 1,
) -> list[BoundTableRow]:
    """One row per (c, k), ordered by c then k.

    Graphs with at most ``solve_limit`` vertices are solved exactly; other
    rows take ``exact`` from :func:`~gpdom.bounds.known_gamma` when a
    closed form exists.  ``workers > 1`` evaluates cells in a process pool;
    output order does not depend on completion order.
    """
    cells = [(c, k, solve_limit, budget) for c in sorted(set(c_values)) for k in sorted(set(k_values))]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_table_cell, cells))
    return [_table_cell(cell) for cell in cells]


def bound_violations(rows: Sequence[BoundTableRow]) -> list[str]:
    """Rows where the ck bound exceeds the prior bound or disagrees with other columns."""
    found = []
    for r in rows:
        if r.ck_bound > r.prior:
            found.append(f"({r.c},{r.k}): ck bound {r.ck_bound} > prior {r.prior}")
        if r.construction_size is not None and r.construction_size != r.ck_bound:
            found.append(f"({r.c},{r.k}): construction {r.construction_size} != bound {r.ck_bound}")
        if r.exact is not None and r.construction_size is not None and r.exact > r.construction_size:
            found.append(f"({r.c},{r.k}): exact {r.exact} > construction {r.construction_size}")
    return found


def write_bound_csv(rows: Sequence[BoundTableRow], fh: TextIO | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.csv_fields())
    text = buf.getvalue()
    if fh is not None:
        fh.write(text)
    return text
