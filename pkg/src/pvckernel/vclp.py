"""Half-integral optimum of the vertex-cover LP relaxation.

Values are stored doubled (``0, 1, 2`` for ``0, 1/2, 1``) so every comparison
downstream stays in integers.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .matching import hopcroft_karp, koenig_cover, matching_size

ZERO, HALF, ONE = 0, 1, 2


@dataclass(frozen=True)
class HalfIntegralSolution:
    values: tuple  # doubled LP value per vertex
    v0: frozenset = field(init=False)
    v1: frozenset = field(init=False)
    vhalf: frozenset = field(init=False)

    def __post_init__(self):
        for v, x in enumerate(self.values):
            if x not in (ZERO, HALF, ONE):
                raise ValueError(f"vertex {v}: doubled value {x!r} not in {{0, 1, 2}}")
        parts = {ZERO: [], HALF: [], ONE: []}
        for v, x in enumerate(self.values):
            parts[x].append(v)
        object.__setattr__(self, "v0", frozenset(parts[ZERO]))
        object.__setattr__(self, "v1", frozenset(parts[ONE]))
        object.__setattr__(self, "vhalf", frozenset(parts[HALF]))

    @property
    def doubled_value(self) -> int:
        return sum(self.values)

    @property
    def value(self) -> float:
        return self.doubled_value / 2

    def sizes(self) -> dict:
        return {"v0": len(self.v0), "v1": len(self.v1), "vhalf": len(self.vhalf)}

    def restrict(self, old_to_new: list[int]) -> "HalfIntegralSolution":
        """Carry the values over to a graph obtained by vertex deletion."""
        n_new = sum(1 for i in old_to_new if i >= 0)
        vals = [0] * n_new
        for old, new in enumerate(old_to_new):
            if new >= 0:
                vals[new] = self.values[old]
        return HalfIntegralSolution(tuple(vals))


def doubled_bipartite(g: Graph) -> list[tuple[int, ...]]:
    """Adjacency of the bipartite double cover: ``u_L - v_R`` for every edge ``uv``."""
    # left copy of u sees the right copies of N(u); both orientations are covered
    return list(g.adj)


def solve_vclp(g: Graph) -> HalfIntegralSolution:
    """Optimal half-integral LP solution via matching in the double cover.

    ``x_v`` is half the number of copies of ``v`` in a minimum vertex cover of
    the double cover, so the doubled LP value equals the matching size.
    """
    adj = doubled_bipartite(g)
    match_l, match_r = hopcroft_karp(adj, g.n)
    cover_l, cover_r = koenig_cover(adj, g.n, match_l, match_r)
    values = tuple(int(cover_l[v]) + int(cover_r[v]) for v in range(g.n))
    sol = HalfIntegralSolution(values)
    assert sol.doubled_value == matching_size(match_l)
    return sol


def double_cover_matching_size(g: Graph) -> int:
    match_l, _ = hopcroft_karp(doubled_bipartite(g), g.n)
    return matching_size(match_l)


def verify_half_integral(g: Graph, sol: HalfIntegralSolution) -> list[str]:
    """Return human-readable violations; empty when ``sol`` is a feasible partition."""
    problems = []
    if len(sol.values) != g.n:
        return [f"solution has {len(sol.values)} values for a graph with n={g.n}"]
    for u, v in g.edges():
        if sol.values[u] + sol.values[v] < 2:
            problems.append(
                f"edge ({g.labels[u]}, {g.labels[v]}): x_u + x_v = "
                f"{(sol.values[u] + sol.values[v]) / 2} < 1"
            )
    if sol.v0 | sol.v1 | sol.vhalf != set(range(g.n)):
        problems.append("partition does not cover every vertex")
    for v in sol.v0:
        for w in g.adj[v]:
            if w not in sol.v1:
                problems.append(f"vertex {g.labels[v]} in V0 has neighbor {g.labels[w]} outside V1")
    if sol.doubled_value != 2 * len(sol.v1) + len(sol.vhalf):
        problems.append("doubled value disagrees with partition sizes")
    return problems
