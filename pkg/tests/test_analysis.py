import io
import itertools
import math
from fractions import Fraction as F

import pytest

from gpdom import (
    LemmaViolation,
    NotApplicable,
    NotFactored,
    PetersenParams,
    VertexSet,
    audit_lemmas,
    bound_table,
    bound_violations,
    build_petersen,
    ck_upper_bound,
    column_profile,
    construct_ck,
    known_gamma,
    prior_upper_bound,
    random_dominating_sets,
    write_bound_csv,
)
from gpdom.bounds import all_known_values

import oracles


def ceil(x):
    return math.ceil(F(x))


def floor(x):
    return math.floor(F(x))


def ref_prior(c, k):
    top = ceil(F(5 * k, 3))
    if c % 3 == 0:
        return F(c, 3) * top
    base = ceil(F(c, 3)) * top - ceil(F(2 * k, 3))
    return base if c % 3 == 1 else base + ceil(F(k, 3))


def ref_ck(c, k):
    """Piecewise bound evaluated with exact fractions, case by case."""
    a = 0 if k % 2 else floor(F(c, 4))
    h = F(c * k, 2)
    r = c % 4
    if r == 0:
        v = h + a
    elif r in (1, 2) and k % 2 == 0:
        v = h + F(k, 2) - 1 + a
    elif r == 1:
        v = F(c * k - 1, 2) + F(k + 1, 2) + a
    elif r == 2 and k % 4 == 1:
        v = h + F(k + 1, 2) + a
    elif r == 2:
        v = h + F(k - 1, 2) + a
    elif k in (4, 8):
        v = h + F(k, 4) + a
    else:
        v = floor(h) + floor(F(k, 4)) + 1 + a
    assert F(v).denominator == 1
    return int(v)


@pytest.mark.parametrize("c,k,want", [(3, 3, 5), (4, 3, 8), (5, 3, 9), (6, 6, 20)])
def test_prior_examples(c, k, want):
    assert prior_upper_bound(c, k) == want


@pytest.mark.parametrize("c,k,want", [(4, 3, 6), (4, 4, 9), (6, 3, 10), (3, 6, 11)])
def test_ck_examples(c, k, want):
    assert ck_upper_bound(c, k) == want


def test_bounds_match_fraction_transcription():
    for c in range(3, 21):
        for k in range(3, 21):
            assert ck_upper_bound(c, k) == ref_ck(c, k)
            assert prior_upper_bound(c, k) == ref_prior(c, k)


def test_ck_bound_exceeds_prior_only_for_c_multiple_of_3():
    worse = [(c, k) for c in range(3, 21) for k in range(3, 21) if ref_ck(c, k) > ref_prior(c, k)]
    assert len(worse) == 27
    assert {c for c, _ in worse} == {3, 6, 9}
    assert (3, 6) in worse and (6, 6) in worse
    assert (ck_upper_bound(3, 6), prior_upper_bound(3, 6)) == (11, 10)


@pytest.mark.parametrize("n,k,want", [(20, 5, 10), (25, 5, 15), (12, 2, 8), (15, 3, 9), (16, 4, 9), (18, 3, 10), (12, 3, 6)])
def test_known_values(n, k, want):
    assert known_gamma(n, k) == want


def test_known_absent():
    assert known_gamma(9, 3) is None
    assert known_gamma(7, 3) is None or known_gamma(7, 3) == oracles.brute_gamma(7, 3)[0]


def test_known_sources_agree():
    for n in range(3, 40):
        for k in range(1, (n - 1) // 2 + 1):
            vals = {kv.value for kv in all_known_values(n, k)}
            assert len(vals) <= 1, (n, k, all_known_values(n, k))


def test_known_values_against_oracle():
    for n in range(3, 13):
        for k in range(1, (n - 1) // 2 + 1):
            v = known_gamma(n, k)
            if v is not None:
                assert v == oracles.brute_gamma(n, k)[0], (n, k)


def test_column_profile():
    g = build_petersen(PetersenParams.from_ck(4, 3))
    s = construct_ck(4, 3).set
    prof = column_profile(g, s)
    assert prof.sizes == (2, 2, 2)
    assert prof.size(4) == prof.size(1)
    assert sum(len(t) for t in prof.column_sets) == len(s)
    empty = column_profile(g, g.empty_set())
    assert empty.sizes == (0, 0, 0)
    with pytest.raises(NotFactored):
        column_profile(build_petersen(PetersenParams(12, 3)), s)


def test_every_minimum_set_of_p15_3_has_columns_of_two_or_more():
    g = build_petersen(PetersenParams.from_ck(5, 3))
    nb = oracles.closed_neighborhoods(15, 3)
    masks = [sum(1 << y for y in nb[x]) for x in range(30)]
    full = (1 << 30) - 1
    count = 0
    for combo in itertools.combinations(range(30), 9):
        m = 0
        for x in combo:
            m |= masks[x]
        if m != full:
            continue
        count += 1
        prof = column_profile(g, g.vertex_set(combo))
        assert min(prof.sizes) >= 2 and sum(prof.sizes) == 9
        if count >= 200:
            break
    assert count > 0


@pytest.mark.parametrize("c,k", [(5, 5), (6, 5), (5, 6), (6, 6), (5, 4), (6, 4), (5, 3), (6, 3)])
def test_audits_clean_on_random_sets(c, k):
    g = build_petersen(PetersenParams.from_ck(c, k))
    for s in random_dominating_sets(g, 100, 0):
        rep = audit_lemmas(g, s)
        assert rep.ok, rep.violations
        rep.raise_on_violation()


def test_audits_clean_on_constructions():
    for c, k in [(5, 4), (5, 5), (5, 7), (6, 4), (6, 5), (6, 7)]:
        rep = construct_ck(c, k)
        g = build_petersen(rep.params)
        assert audit_lemmas(g, rep.set).ok


def test_audit_infers_c():
    g = build_petersen(PetersenParams(25, 5))
    (s,) = random_dominating_sets(g, 1, 1)
    assert audit_lemmas(g, s).params.c == 5


def test_audit_not_applicable():
    with pytest.raises(NotApplicable):
        audit_lemmas(build_petersen(PetersenParams.from_ck(4, 3)), construct_ck(4, 3).set)
    g = build_petersen(PetersenParams.from_ck(5, 5))
    with pytest.raises(NotApplicable):
        audit_lemmas(g, g.empty_set())


def test_checker_flags_bad_sets():
    g = build_petersen(PetersenParams.from_ck(5, 5))
    rep = audit_lemmas(g, g.empty_set(), require_dominating=False)
    assert not rep.ok
    assert {ch.name for ch in rep.violations} >= {"column-min-2"}
    with pytest.raises(LemmaViolation) as err:
        rep.raise_on_violation()
    assert err.value.reproducer == {"n": 25, "k": 5, "set": []}
    # outer members two rows apart with nothing else in the column
    s = VertexSet.from_tokens(["v0", "v10"], 25)
    rep = audit_lemmas(g, s, require_dominating=False)
    assert any(ch.name == "outer-gap-forces-4" and ch.column == 0 for ch in rep.violations)
    assert any('"set"' in line for line in rep.json_lines())
    g6 = build_petersen(PetersenParams.from_ck(6, 4))
    s = VertexSet.from_tokens(["u0", "v4"], 24)
    bad = {ch.name for ch in audit_lemmas(g6, s, require_dominating=False).violations}
    assert "single-inner-forces-4" in bad and "triple-at-least-10" in bad


def test_two_member_column_must_be_inner_and_independent():
    """Inner vertices of a column are dominated only from inside the column,
    so a 2-member trace must dominate the column's inner cycle by itself.
    Exhaustively, every such pair is two independent inner vertices."""
    n, k = 25, 5
    nb = oracles.closed_neighborhoods(n, k)
    col = [i for i in range(n) if i % k == 0] + [n + i for i in range(n) if i % k == 0]
    inner = [x for x in col if x >= n]
    outside = set(range(2 * n)) - set(col)
    assert not any(u in nb[x] for u in inner for x in outside)
    good = [p for p in itertools.combinations(col, 2) if all(u in nb[p[0]] | nb[p[1]] for u in inner)]
    assert good
    for a, b in good:
        assert a >= n and b >= n and b not in nb[a]

    g = build_petersen(PetersenParams.from_ck(5, 5))
    seen = 0
    for s in random_dominating_sets(g, 300, 4):
        prof = column_profile(g, s)
        for i in range(k):
            if prof.size(i) == 2:
                seen += 1
                a, b = prof.column_sets[i]
                assert a >= n and b >= n and b not in nb[a]
    assert seen > 0


def test_table_rows():
    rows = bound_table([4, 6], [3], solve_limit=36)
    r43, r63 = rows
    assert (r43.c, r43.k, r43.prior, r43.ck_bound, r43.construction_size) == (4, 3, 8, 6, 6)
    assert r43.exact == 6 and r43.optimal == "true"
    assert r63.exact == 10 and r63.optimal == "true"


def test_table_unverified_construction_left_blank():
    (row,) = bound_table([3], [4], solve_limit=0)
    assert row.construction_size is None
    assert row.csv_fields()[4] == ""


def test_table_quoted_and_proved_cells():
    rows = {(r.c, r.k): r for r in bound_table([4, 5, 6, 10], [3, 7], solve_limit=0)}
    assert rows[4, 7].exact == 14 and rows[4, 7].optimal == "proved"
    assert rows[10, 3].exact == 16 and rows[10, 3].optimal == "quoted"
    assert rows[5, 7].exact == 21 and rows[5, 7].optimal == "proved"
    assert rows[6, 7].exact == 24


def test_violation_cells_frozen():
    rows = bound_table(range(3, 21), range(3, 21), solve_limit=0)
    bad = bound_violations(rows)
    exceed = [v for v in bad if "> prior" in v]
    expected = [f"({c},{k})" for c in range(3, 21) for k in range(3, 21) if ref_ck(c, k) > ref_prior(c, k)]
    assert [v.split(":")[0] for v in exceed] == expected
    # apart from the exceedances, only the one failing construction is blank
    assert [v for v in bad if "> prior" not in v] == []
    assert [(r.c, r.k) for r in rows if r.construction_size is None] == [(3, 4)]


def test_csv_deterministic():
    a = write_bound_csv(bound_table(range(3, 6), range(3, 6), solve_limit=30))
    b = write_bound_csv(bound_table(range(5, 2, -1), [5, 4, 3], solve_limit=30, workers=2))
    assert a == b
    lines = a.splitlines()
    assert lines[0] == "c,k,zhao,thm21,construction,exact,optimal"
    assert len(lines) == 10
    buf = io.StringIO()
    write_bound_csv([], buf)
    assert buf.getvalue() == lines[0] + "\n"
