import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pvckernel.graph import Graph, edges_after_delete
from pvckernel.instances import complete_graph, erdos_renyi, planted, star
from pvckernel.kernel import (
    ADDITIVE,
    EXPANSION,
    VARIANTS,
    KernelTrace,
    PvcInstance,
    Reduction,
    apply_reduction,
    kernel_bound,
    kernelize,
    lift_solution,
    rr_additive,
    rr_expansion,
    rr_isolated,
    rr_lp_bound,
)
from pvckernel.oracle import solve_pvc_exact
from pvckernel.vclp import solve_vclp

from strategies import graphs


def oracle_answer(inst):
    return solve_pvc_exact(inst.graph, inst.k, inst.l).answer


def kernel_answer(out):
    if out.decided:
        return out.answer
    return oracle_answer(out.instance)


def double_star(leaves):
    # centers 0 and 1 are adjacent; each has `leaves` private leaves
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(leaves)]
    edges += [(1, 2 + leaves + i) for i in range(leaves)]
    return Graph.from_edges(2 + 2 * leaves, edges, labels=range(1, 3 + 2 * leaves))


def test_rr_isolated_examples(cex):
    g = Graph.from_edges(5, [(3, 4)])
    out, gone, _ = rr_isolated(PvcInstance(g, 1, 0))
    assert out.graph.n == 2 and gone == (0, 1, 2)
    out, gone, _ = rr_isolated(PvcInstance(cex, 1, 3))
    assert out.graph == cex and gone == ()
    out, _, _ = rr_isolated(PvcInstance(Graph.from_edges(4, []), 2, 1))
    assert out.graph.n == 0


def test_rr_lp_bound_examples(cex):
    assert rr_lp_bound(solve_vclp(complete_graph(5)), 0, 1) is not None
    assert not oracle_answer(PvcInstance(complete_graph(5), 0, 1))
    assert rr_lp_bound(solve_vclp(cex), 1, 3) is None
    assert rr_lp_bound(solve_vclp(Graph.from_edges(3, [])), 0, 0) is None


def test_rr_expansion_star():
    g = star(5)
    inst = PvcInstance(g, 1, 0)
    sol = solve_vclp(g)
    red = rr_expansion(inst, sol)
    assert red.x == {0} and red.y == {1, 2, 3, 4, 5}
    after, _, step = apply_reduction(inst, sol, red)
    assert after.graph.n == 0 and after.k == 0 and step.k_decrement == 1


def test_rules_skip_counterexample(cex):
    inst = PvcInstance(cex, 1, 3)
    sol = solve_vclp(cex)
    assert rr_expansion(inst, sol) is None
    assert rr_additive(inst, sol) is None


@pytest.mark.parametrize("l", [1, 2, 3])
def test_double_star_one_application(l):
    g = double_star(2 * l + 2)
    out = kernelize(PvcInstance(g, 2, l), EXPANSION)
    rule3 = [s for s in out.trace.steps if s.rule == 3]
    assert sum(s.k_decrement for s in rule3) == 2
    assert out.status == "yes"
    assert kernel_answer(out) == oracle_answer(PvcInstance(g, 2, l))
    # with k = 1 the certificate needs two deletions, and the oracle agrees this is No
    low = kernelize(PvcInstance(g, 1, l), EXPANSION)
    assert low.status == "no" and not oracle_answer(PvcInstance(g, 1, l))


def test_rr_additive_small_star():
    g = star(2)
    inst = PvcInstance(g, 1, 1)
    sol = solve_vclp(g)
    red = rr_additive(inst, sol)
    assert red.x == {0} and red.y == {1, 2}
    after, _, _ = apply_reduction(inst, sol, red)
    assert after.graph.n == 0 and after.k == 0


def test_rr_additive_rejects_l0():
    with pytest.raises(ValueError):
        rr_additive(PvcInstance(star(2), 1, 0), solve_vclp(star(2)))


def test_rule4_fires_where_rule3_cannot():
    # c1 = 0 sees 2, 3, 4; c2 = 1 sees 4, 5, 6; l = 2 so |V0| = 5 is in (l|V1|, (l+1)|V1|)
    g = Graph.from_edges(7, [(0, 2), (0, 3), (0, 4), (1, 4), (1, 5), (1, 6)])
    sol = solve_vclp(g)
    assert sol.v1 == {0, 1}
    for k in range(4):
        inst = PvcInstance(g, k, 2)
        assert rr_expansion(inst, sol) is None
        assert rr_additive(inst, sol) is not None
        assert kernel_answer(kernelize(inst, ADDITIVE)) == oracle_answer(inst)
        assert kernel_answer(kernelize(inst, EXPANSION)) == oracle_answer(inst)
    assert kernelize(PvcInstance(g, 2, 2), ADDITIVE).trace.count(4) == 1


@pytest.mark.parametrize("l", [1, 2, 3])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_star_with_l_plus_one_leaves(k, l):
    inst = PvcInstance(star(l + 1), k, l)
    for variant in VARIANTS:
        assert kernel_answer(kernelize(inst, variant)) == oracle_answer(inst)


def test_kernelize_counterexample(cex):
    inst = PvcInstance(cex, 1, 3)
    for variant in VARIANTS:
        out = kernelize(inst, variant)
        assert out.status == "reduced"
        assert out.instance.graph == cex and out.instance.k == 1
        assert out.trace.steps == []
    assert kernel_bound(ADDITIVE, 1, 3) == 16
    assert kernel_bound(EXPANSION, 1, 3) == 20


def test_kernelize_big_star():
    out = kernelize(PvcInstance(star(100), 1, 1), ADDITIVE)
    assert out.status == "yes"
    assert out.instance.graph.n == 0 and out.instance.k == 0
    assert oracle_answer(PvcInstance(star(100), 1, 1))


def test_kernelize_k5():
    out = kernelize(PvcInstance(complete_graph(5), 0, 1), EXPANSION)
    assert out.status == "no" and out.reason.startswith("rule 2")
    assert out.trace.count(2) == 1


def test_bad_arguments():
    with pytest.raises(ValueError):
        kernelize(PvcInstance(star(2), 1, 1), "crown")
    with pytest.raises(ValueError):
        kernelize(PvcInstance(star(2), -1, 1))
    with pytest.raises(ValueError):
        PvcInstance(star(2), 1, -1)


def test_bound_formulas():
    for k in range(6):
        assert kernel_bound(ADDITIVE, k, 1) == 2 * k + 2
        assert kernel_bound(ADDITIVE, k, 0) == kernel_bound(EXPANSION, k, 0) == 2 * k


def test_lift_star():
    g = Graph.from_edges(6, [(0, i) for i in range(1, 6)], labels=range(1, 7))
    out = kernelize(PvcInstance(g, 1, 0), EXPANSION)
    assert out.status == "yes"
    lifted = lift_solution(out.trace, [])
    assert lifted == [1]
    assert edges_after_delete(g, g.indices(lifted)) == 0


def test_lift_empty_trace():
    assert lift_solution(KernelTrace(3), [4, 2]) == [2, 4]


def test_lift_two_stacked_steps():
    # two hand-picked 2-expansions on a double star with l = 1
    g = double_star(4)
    inst = PvcInstance(g, 2, 1)
    sol = solve_vclp(g)
    trace = KernelTrace(inst.k)
    first = Reduction(3, frozenset({0}), frozenset(range(2, 6)), None)
    inst, sol, step = apply_reduction(inst, sol, first)
    trace.steps.append(step)
    center = inst.graph.index_of(2)
    leaves = frozenset(v for v in range(inst.graph.n) if v != center)
    inst, sol, step = apply_reduction(inst, sol, Reduction(3, frozenset({center}), leaves, None))
    trace.steps.append(step)
    assert inst.graph.n == 0 and inst.k == 0
    lifted = lift_solution(trace, [])
    assert lifted == [1, 2]
    assert len(lifted) <= 2 and edges_after_delete(g, g.indices(lifted)) <= 1


def _check_outcome(inst, variant):
    out = kernelize(inst, variant)
    assert kernel_answer(out) == oracle_answer(inst)
    assert out.instance.l == inst.l
    k_run = inst.k
    for step in out.trace.steps:
        k_run -= step.k_decrement
        assert k_run >= 0 and step.k_after == k_run
    if not out.decided:
        g = out.instance.graph
        assert g.n <= kernel_bound(variant, inst.k, inst.l)
        assert all(g.adj[v] for v in range(g.n))
        assert out.instance.graph.m <= inst.graph.m
        part = out.partition
        assert all(w in part.v1 for v in part.v0 for w in g.adj[v])
        witness = solve_pvc_exact(g, out.instance.k, inst.l).witness
        if witness is not None:
            lifted = lift_solution(out.trace, [g.labels[v] for v in witness])
            assert len(lifted) <= inst.k
            assert edges_after_delete(inst.graph, inst.graph.indices(lifted)) <= inst.l
    return out


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=11), st.integers(0, 4), st.integers(0, 4), st.sampled_from(VARIANTS))
def test_safety_property(g, k, l, variant):
    _check_outcome(PvcInstance(g, k, l), variant)


@pytest.mark.parametrize("seed", range(40))
def test_planted_instances_stay_yes(seed):
    n, k, l = 10 + seed % 5, seed % 4, seed % 3
    g, s = planted(n, k, l, seed)
    assert edges_after_delete(g, g.indices(s)) == l
    for variant in VARIANTS:
        out = _check_outcome(PvcInstance(g, k, l), variant)
        assert kernel_answer(out)


def test_deterministic():
    g = erdos_renyi(14, 0.2, 3)
    a = kernelize(PvcInstance(g, 3, 2), ADDITIVE)
    b = kernelize(PvcInstance(g, 3, 2), ADDITIVE)
    assert a.status == b.status and a.trace.steps == b.trace.steps
    assert a.instance.graph == b.instance.graph
