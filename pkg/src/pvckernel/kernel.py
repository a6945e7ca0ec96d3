"""Reduction rules and the two kernelization pipelines for Partial Vertex Cover.

Rule numbering: 1 deletes isolated vertices, 2 answers No when the LP lower
bound exceeds ``k + l``, 3 removes an ``(l+1)``-expansion from ``G[V1, V0]``,
4 removes an ``l``-additive expansion from ``G[V1, V0]``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Optional

from .expansion import find_q_additive_expansion, find_q_expansion
from .graph import Graph, bipartite_view, delete_vertices_with_map
from .vclp import HalfIntegralSolution, solve_vclp

log = logging.getLogger(__name__)

EXPANSION = "expansion"
ADDITIVE = "additive"
VARIANTS = (EXPANSION, ADDITIVE)


@dataclass(frozen=True)
class PvcInstance:
    graph: Graph
    k: int  # may become negative during reduction, which means No
    l: int

    def __post_init__(self):
        if self.l < 0:
            raise ValueError(f"edge allowance must be non-negative, got {self.l}")


@dataclass(frozen=True)
class RuleStep:
    rule: int
    deleted: tuple  # original labels
    x: tuple = ()
    y: tuple = ()
    k_decrement: int = 0
    k_after: int = 0

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "deleted": list(self.deleted),
            "x": list(self.x),
            "y": list(self.y),
            "k_decrement": self.k_decrement,
            "k_after": self.k_after,
        }


@dataclass
class KernelTrace:
    k: int
    steps: list = field(default_factory=list)

    @property
    def k_current(self) -> int:
        return self.k - sum(s.k_decrement for s in self.steps)

    def removed_x(self) -> list:
        return [v for s in self.steps for v in s.x]

    def count(self, rule: int) -> int:
        """Applications of ``rule``; Rule 1 counts one per deleted vertex."""
        if rule == 1:
            return sum(len(s.deleted) for s in self.steps if s.rule == 1)
        return sum(1 for s in self.steps if s.rule == rule)


@dataclass
class KernelOutcome:
    status: str  # "yes", "no" or "reduced"
    reason: str
    instance: PvcInstance  # the state the pipeline stopped in
    trace: KernelTrace
    variant: str
    original: PvcInstance
    lp: Optional[HalfIntegralSolution] = None
    partition: Optional[HalfIntegralSolution] = None  # maintained partition at stop

    @property
    def decided(self) -> bool:
        return self.status != "reduced"

    @property
    def answer(self) -> Optional[bool]:
        return None if self.status == "reduced" else self.status == "yes"

    @property
    def bound(self) -> int:
        return kernel_bound(self.variant, self.original.k, self.original.l)

    @property
    def partition_sizes(self) -> Optional[dict]:
        return None if self.partition is None else self.partition.sizes()


def kernel_bound(variant: str, k: int, l: int) -> int:
    """Guaranteed vertex bound of a reduced instance for ``variant``."""
    if variant == EXPANSION:
        return (l + 2) * (k + l)
    if variant == ADDITIVE:
        return (max(l, 1) + 1) * (k + l)
    raise ValueError(f"unknown variant {variant!r}")


def rr_isolated(inst: PvcInstance) -> tuple[PvcInstance, tuple, list[int]]:
    """Rule 1. Returns the reduced instance, deleted labels and the index map."""
    g = inst.graph
    isolated = [v for v in range(g.n) if not g.adj[v]]
    g2, old_to_new = delete_vertices_with_map(g, isolated)
    return PvcInstance(g2, inst.k, inst.l), tuple(g.labels[v] for v in isolated), old_to_new


def rr_lp_bound(sol: HalfIntegralSolution, k: int, l: int) -> Optional[str]:
    """Rule 2. A No reason when the LP optimum exceeds ``k + l``, else None."""
    lhs = 2 * len(sol.v1) + len(sol.vhalf)
    if lhs > 2 * (k + l):
        return f"rule 2: LP value {lhs}/2 exceeds k + l = {k + l}"
    return None


@dataclass(frozen=True)
class Reduction:
    """One Rule 3 or Rule 4 application, before it is carried out."""

    rule: int
    x: frozenset  # indices in the current graph
    y: frozenset
    certificate: object


def _expansion_guard(sol: HalfIntegralSolution, q: int, strict: bool) -> bool:
    if not sol.v1:
        return False
    if strict:
        return len(sol.v0) > q * len(sol.v1)
    return len(sol.v0) >= q * len(sol.v1)


def _check_closed(g: Graph, x: frozenset, y: frozenset) -> None:
    for v in y:
        for w in g.adj[v]:
            if w not in x:
                raise AssertionError(
                    f"N(Y) not inside X: {g.labels[v]} ~ {g.labels[w]} (partition corrupted)"
                )


def rr_expansion(inst: PvcInstance, sol: HalfIntegralSolution, q: Optional[int] = None) -> Optional[Reduction]:
    """Rule 3 with ``q = l + 1`` (or an explicit ``q``), guarded by ``|V0| >= q|V1|``."""
    q = inst.l + 1 if q is None else q
    if not _expansion_guard(sol, q, strict=False):
        return None
    view = bipartite_view(inst.graph, sol.v1, sol.v0)
    cert = find_q_expansion(view, q)
    _check_closed(inst.graph, cert.x_set, cert.y_set)
    return Reduction(3, cert.x_set, cert.y_set, cert)


def rr_additive(inst: PvcInstance, sol: HalfIntegralSolution) -> Optional[Reduction]:
    """Rule 4 with ``q = l``, guarded by ``|V0| > l|V1|``. Needs ``l >= 1``."""
    if inst.l < 1:
        raise ValueError("additive expansions need l >= 1")
    if not _expansion_guard(sol, inst.l, strict=True):
        return None
    view = bipartite_view(inst.graph, sol.v1, sol.v0)
    cert = find_q_additive_expansion(view, inst.l)
    _check_closed(inst.graph, cert.x_set, cert.y_set)
    return Reduction(4, cert.x_set, cert.y_set, cert)


def apply_reduction(
    inst: PvcInstance, sol: HalfIntegralSolution, red: Reduction
) -> tuple[PvcInstance, HalfIntegralSolution, RuleStep]:
    """Delete ``X ∪ Y`` and decrease ``k`` by ``|X|``."""
    g = inst.graph
    g2, old_to_new = delete_vertices_with_map(g, red.x | red.y)
    k2 = inst.k - len(red.x)
    step = RuleStep(
        rule=red.rule,
        deleted=tuple(g.labels[v] for v in sorted(red.x | red.y)),
        x=tuple(g.labels[v] for v in sorted(red.x)),
        y=tuple(g.labels[v] for v in sorted(red.y)),
        k_decrement=len(red.x),
        k_after=k2,
    )
    return PvcInstance(g2, k2, inst.l), sol.restrict(old_to_new), step


def _partition_ok(g: Graph, sol: HalfIntegralSolution) -> bool:
    return all(w in sol.v1 for v in sol.v0 for w in g.adj[v])


def kernelize(inst: PvcInstance, variant: str = ADDITIVE) -> KernelOutcome:
    """Run one kernelization pipeline.

    The LP is solved once and its partition is carried through deletions.
    A reduced outcome has no isolated vertices and at most
    ``kernel_bound(variant, k, l)`` vertices.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if inst.k < 0:
        raise ValueError(f"budget must be non-negative, got {inst.k}")
    trace = KernelTrace(inst.k)

    def done(status, reason, cur, lp=None, part=None):
        return KernelOutcome(status, reason, cur, trace, variant, inst, lp, part)

    cur, gone, _ = rr_isolated(inst)
    if gone:
        trace.steps.append(RuleStep(1, gone, k_after=cur.k))
    if cur.graph.m <= cur.l:
        return done("yes", f"m = {cur.graph.m} <= l", cur)

    lp = solve_vclp(cur.graph)
    part = lp
    reason = rr_lp_bound(lp, cur.k, cur.l)
    if reason:
        trace.steps.append(RuleStep(2, (), k_after=cur.k))
        return done("no", reason, cur, lp, part)

    while True:
        if variant == EXPANSION or cur.l == 0:
            # for l = 0 the additive pipeline uses crowns (1-expansions)
            red = rr_expansion(cur, part)
        else:
            red = rr_additive(cur, part)
        if red is None:
            break
        if len(red.x) > cur.k:
            # a yes-instance keeps k - |X| >= 0, so this one is No
            return done(
                "no", f"rule {red.rule}: |X| = {len(red.x)} exceeds remaining budget {cur.k}",
                cur, lp, part,
            )
        cur, part, step = apply_reduction(cur, part, red)
        trace.steps.append(step)
        log.debug("rule %d removed |X|=%d |Y|=%d", step.rule, len(step.x), len(step.y))
        cur2, gone, old_to_new = rr_isolated(cur)
        if gone:
            part = part.restrict(old_to_new)
            cur = cur2
            trace.steps.append(RuleStep(1, gone, k_after=cur.k))
        assert _partition_ok(cur.graph, part), "N(V0) ⊆ V1 violated"

    if cur.graph.m <= cur.l:
        return done("yes", f"m = {cur.graph.m} <= l after reduction", cur, lp, part)
    bound = kernel_bound(variant, inst.k, inst.l)
    if cur.graph.n > bound:
        raise AssertionError(f"kernel has {cur.graph.n} vertices, bound is {bound}")
    return done("reduced", "no rule applies", cur, lp, part)


def lift_solution(trace: KernelTrace, s_kernel: Iterable[Hashable]) -> list:
    """Map a kernel solution (labels) back to the original instance."""
    return sorted(set(s_kernel) | set(trace.removed_x()))
