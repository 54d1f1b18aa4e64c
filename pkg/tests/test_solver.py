import json

import pytest

from gpdom import (
    InvalidParams,
    PetersenParams,
    SolveBudget,
    SolveReport,
    build_petersen,
    construct_ck,
    construct_p6k,
    exact_gamma,
    exists_efficient,
    is_dominating,
    is_efficient_dominating,
    random_dominating_sets,
)
from gpdom.solver import MAX_VERTICES

import oracles


def all_params(max_order):
    for n in range(3, max_order // 2 + 1):
        for k in range(1, (n - 1) // 2 + 1):
            yield n, k


def g_(n, k):
    return build_petersen(PetersenParams(n, k))


@pytest.mark.parametrize("n,k,gamma", [(5, 1, 3), (10, 2, 6), (8, 2, 5)])
def test_examples(n, k, gamma):
    rep = exact_gamma(g_(n, k))
    assert rep.gamma == gamma and rep.optimal


@pytest.mark.parametrize("n,k", list(all_params(24)))
def test_matches_brute_force(n, k):
    want, _ = oracles.brute_gamma(n, k)
    rep = exact_gamma(g_(n, k))
    assert rep.optimal and rep.gamma == want
    assert len(rep.witness) == rep.gamma
    assert is_dominating(g_(n, k), rep.witness)


@pytest.mark.parametrize("n,k", [p for p in all_params(40) if p[0] > 12])
def test_matches_milp(n, k):
    rep = exact_gamma(g_(n, k))
    assert rep.optimal and rep.gamma == oracles.milp_gamma(n, k)


def test_witness_deterministic():
    g = g_(14, 3)
    a, b = exact_gamma(g), exact_gamma(g)
    assert a.witness == b.witness


def test_node_budget():
    rep = exact_gamma(g_(20, 4), SolveBudget(max_nodes=50))
    assert not rep.optimal
    assert rep.nodes_explored <= 51
    assert is_dominating(g_(20, 4), rep.witness)
    assert rep.gamma >= 12


def test_time_budget():
    rep = exact_gamma(g_(30, 6), SolveBudget(max_seconds=0.05))
    assert not rep.optimal and is_dominating(g_(30, 6), rep.witness)


def test_target_stops_early():
    rep = exact_gamma(g_(20, 4), SolveBudget(target=14))
    assert rep.gamma <= 14 and not rep.optimal


def test_size_ceiling():
    assert MAX_VERTICES >= 48
    with pytest.raises(InvalidParams):
        exact_gamma(g_(MAX_VERTICES // 2 + 1, 2))


def test_constructions_are_upper_bounds():
    for c, k in [(3, 3), (4, 3), (5, 3), (6, 3), (4, 4), (5, 4), (3, 5), (4, 5), (3, 6)]:
        rep = construct_ck(c, k)
        assert exact_gamma(build_petersen(rep.params)).gamma <= rep.actual_size
    rep = construct_p6k(4)
    assert exact_gamma(build_petersen(rep.params)).gamma <= rep.actual_size


def test_report_roundtrip():
    text = exact_gamma(g_(10, 2)).to_json()
    d = json.loads(text)
    assert list(d) == ["n", "k", "gamma", "optimal", "nodes", "millis", "witness"]
    assert SolveReport.from_dict(d).to_json() == text


@pytest.mark.parametrize("n,k,want", [(12, 3, True), (12, 2, False), (14, 3, False)])
def test_efficient_examples(n, k, want):
    found, witness = exists_efficient(g_(n, k))
    assert found is want
    assert (witness is not None) is want


@pytest.mark.parametrize("n,k", list(all_params(56)))
def test_efficient_sweep(n, k):
    found, witness = exists_efficient(g_(n, k))
    assert found == (n % 4 == 0 and k % 2 == 1)
    if found:
        assert is_efficient_dominating(g_(n, k), witness)
        assert len(witness) == n // 2


@pytest.mark.parametrize("n,k", list(all_params(32)))
def test_efficient_matches_enumeration(n, k):
    assert exists_efficient(g_(n, k))[0] == oracles.brute_efficient_exists(n, k)


def test_random_sets_basic():
    g = g_(9, 2)
    (s,) = random_dominating_sets(g, 1, 3)
    assert is_dominating(g, s)
    assert random_dominating_sets(g, 5, 11) == random_dominating_sets(g, 5, 11)
    assert random_dominating_sets(g, 5, 11) != random_dominating_sets(g, 5, 12)
    with pytest.raises(ValueError):
        random_dominating_sets(g, 0, 0)


def test_random_sets_are_minimal():
    g = g_(16, 3)
    for s in random_dominating_sets(g, 30, 5):
        for x in s:
            assert not is_dominating(g, s - g.vertex_set([x]))


@pytest.mark.slow
def test_random_sets_p30_6():
    g = build_petersen(PetersenParams.from_ck(5, 6))
    gamma = exact_gamma(g).gamma
    assert gamma == 18
    sets = random_dominating_sets(g, 100, 7)
    assert len(sets) == 100
    assert all(is_dominating(g, s) and len(s) >= gamma for s in sets)
