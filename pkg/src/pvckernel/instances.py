"""Seeded instance generators and a few fixed graphs.

Randomness comes from numpy's PCG64 bit generator seeded with the given
integer; draws happen in the documented order below, so a seed pins the
output exactly.
"""
from __future__ import annotations

import itertools

import numpy as np

from .graph import BipartiteView, Graph, bipartite_view, parse_graph

# vertices 1-4 are the top row h1..h4 (V0), 5-7 the bottom row i1..i3 (V1)
COUNTEREXAMPLE_TEXT = """\
c counter-example graph: no solution for k=1, l=3 touches V1
p edge 7 6
e 5 1
e 5 2
e 6 2
e 6 3
e 7 2
e 7 4
"""
COUNTEREXAMPLE_NAMES = {"h1": 1, "h2": 2, "h3": 3, "h4": 4, "i1": 5, "i2": 6, "i3": 7}


def counterexample() -> Graph:
    return parse_graph(COUNTEREXAMPLE_TEXT)


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star(leaves: int) -> Graph:
    """Center 0 joined to ``1..leaves``."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(p: int, r: int) -> Graph:
    return Graph.from_edges(p + r, ((i, p + j) for i in range(p) for j in range(r)))


def bipartite(na: int, nb: int, edges) -> BipartiteView:
    """View with A = ``0..na-1`` and B = ``na..na+nb-1``; edges are ``(i, j)`` side-local."""
    g = Graph.from_edges(na + nb, ((i, na + j) for i, j in edges))
    return bipartite_view(g, range(na), range(na, na + nb))


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): pair ``(u, v)``, ``u < v`` in lexicographic order, kept if a uniform draw is ``< p``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = rng_for(seed)
    pairs = list(itertools.combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return Graph.from_edges(n, (e for e, d in zip(pairs, draws) if d < p), labels=range(1, n + 1))


def gnm(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with exactly ``m`` edges (rejection sampling of endpoint pairs)."""
    if m > n * (n - 1) // 2:
        raise ValueError("too many edges for a simple graph")
    rng = rng_for(seed)
    seen: set = set()
    while len(seen) < m:
        batch = rng.integers(0, n, size=(2 * (m - len(seen)) + 16, 2))
        for u, v in batch.tolist():
            if u == v:
                continue
            e = (u, v) if u < v else (v, u)
            if e not in seen:
                seen.add(e)
                if len(seen) == m:
                    break
    return Graph.from_edges(n, sorted(seen), labels=range(1, n + 1))


def planted(n: int, k: int, l: int, seed: int, p_s: float = 0.5) -> tuple[Graph, list[int]]:
    """A guaranteed yes-instance for ``(k, l)`` together with its planted solution.

    ``S`` is a uniform ``k``-subset; ``G - S`` gets exactly ``l`` uniform edges;
    every pair touching ``S`` is added independently with probability ``p_s``.
    Returns the graph and ``S`` as labels.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    rest_pairs = (n - k) * (n - k - 1) // 2
    if not 0 <= l <= rest_pairs:
        raise ValueError(f"cannot place {l} edges among {n - k} vertices")
    rng = rng_for(seed)
    s = sorted(rng.choice(n, size=k, replace=False).tolist())
    sset = set(s)
    rest = [v for v in range(n) if v not in sset]
    pairs = list(itertools.combinations(rest, 2))
    chosen = rng.choice(len(pairs), size=l, replace=False).tolist() if l else []
    edges = [pairs[i] for i in sorted(chosen)]
    touching = [(u, v) for u, v in itertools.combinations(range(n), 2) if u in sset or v in sset]
    draws = rng.random(len(touching))
    edges += [e for e, d in zip(touching, draws) if d < p_s]
    return Graph.from_edges(n, edges, labels=range(1, n + 1)), [v + 1 for v in s]
