import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pvckernel.graph import Graph, edges_after_delete
from pvckernel.instances import COUNTEREXAMPLE_NAMES, bipartite, complete_bipartite, complete_graph
from pvckernel.oracle import (
    OracleTooLarge,
    OracleVerdict,
    brute_lp_opt,
    brute_min_surplus,
    solve_pvc_exact,
)

from strategies import graphs

H2 = COUNTEREXAMPLE_NAMES["h2"] - 1


def test_counterexample_unique_witness(cex):
    verdict = solve_pvc_exact(cex, 1, 3)
    assert verdict.answer and verdict.witness == (H2,)
    singles = [v for v in range(cex.n) if edges_after_delete(cex, [v]) <= 3]
    assert singles == [H2]


def test_counterexample_no_for_l2(cex):
    assert not solve_pvc_exact(cex, 1, 2).answer


def test_few_edges_empty_witness():
    g = complete_graph(3)
    assert solve_pvc_exact(g, 0, 3) == OracleVerdict(True, ())


def test_budget_error():
    with pytest.raises(OracleTooLarge):
        solve_pvc_exact(complete_graph(30), 10, 0)
    with pytest.raises(OracleTooLarge):
        brute_lp_opt(complete_graph(13))
    big = bipartite(13, 1, [(i, 0) for i in range(13)])
    with pytest.raises(OracleTooLarge):
        brute_min_surplus(big, 0)


def test_lp_small_cases(cex):
    assert brute_lp_opt(complete_graph(3)) == 3
    assert brute_lp_opt(Graph.from_edges(2, [(0, 1)])) == 2
    assert brute_lp_opt(cex) == 6
    assert brute_lp_opt(Graph.from_edges(0, [])) == 0


def test_min_surplus_cases():
    assert brute_min_surplus(bipartite(1, 2, [(0, 0), (0, 1)]), 0) == 1
    assert brute_min_surplus(bipartite(2, 1, [(0, 0), (1, 0)]), 0) == -1
    h = bipartite(3, 5, list(itertools.product(range(3), range(5))))
    assert brute_min_surplus(h, 1) == 2


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9), st.integers(0, 3), st.integers(0, 4))
def test_monotone_and_witness_valid(g, k, l):
    v = solve_pvc_exact(g, k, l)
    if v.answer:
        assert len(v.witness) <= k
        assert edges_after_delete(g, v.witness) <= l
        assert solve_pvc_exact(g, k + 1, l).answer
        assert solve_pvc_exact(g, k, l + 1).answer


def _min_vertex_cover(g):
    for r in range(g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            if edges_after_delete(g, s) == 0:
                return r


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_lp_below_twice_cover(g):
    assert brute_lp_opt(g) <= 2 * _min_vertex_cover(g)


@pytest.mark.parametrize("p, r", [(1, 1), (2, 3), (3, 3), (2, 5)])
def test_lp_equals_matching_on_bipartite(p, r):
    # Koenig: on bipartite graphs the LP optimum equals the maximum matching min(p, r)
    assert brute_lp_opt(complete_bipartite(p, r)) == 2 * min(p, r)
