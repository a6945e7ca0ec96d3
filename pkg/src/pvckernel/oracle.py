"""Brute-force ground truth used to validate the kernelization code.

Nothing here shares code with the solvers it checks: decisions enumerate
vertex subsets, LP optima enumerate all half-integral assignments, and
surplus minima enumerate subsets of one bipartition side.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional

import numpy as np

from .graph import BipartiteView, Graph, edges_after_delete

MAX_SUBSETS = 5_000_000
MAX_LP_VERTICES = 12
MAX_SURPLUS_SIDE = 12


class OracleTooLarge(RuntimeError):
    """The instance exceeds the enumeration budget."""


@dataclass(frozen=True)
class OracleVerdict:
    answer: bool
    witness: Optional[tuple] = None  # sorted vertex indices

    def __post_init__(self):
        if self.answer != (self.witness is not None):
            raise ValueError("witness must be present exactly for yes answers")


def solve_pvc_exact(g: Graph, k: int, l: int, max_subsets: int = MAX_SUBSETS) -> OracleVerdict:
    """Decide whether deleting at most ``k`` vertices leaves at most ``l`` edges.

    Subsets are tried by increasing size, lexicographically within a size,
    so the witness is the lexicographically smallest among the smallest ones.
    """
    if k < 0:
        return OracleVerdict(False)
    cands = [v for v in range(g.n) if g.adj[v]]
    top = min(k, len(cands))
    total = sum(comb(len(cands), r) for r in range(top + 1))
    if total > max_subsets:
        raise OracleTooLarge(f"{total} subsets exceed the budget of {max_subsets}")
    masks = [0] * g.n
    for v in range(g.n):
        for w in g.adj[v]:
            masks[v] |= 1 << w
    deg = [len(nb) for nb in g.adj]
    m = g.m
    for r in range(top + 1):
        for sub in itertools.combinations(cands, r):
            smask = 0
            for v in sub:
                smask |= 1 << v
            removed = 0
            inside = 0
            for v in sub:
                removed += deg[v]
                inside += (masks[v] & smask).bit_count()
            if m - removed + inside // 2 <= l:
                assert edges_after_delete(g, sub) <= l
                return OracleVerdict(True, tuple(sub))
    return OracleVerdict(False)


@lru_cache(maxsize=None)
def _assignments(n: int) -> np.ndarray:
    # every vector in {0, 1, 2}^n, one per row
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    grids = np.indices((3,) * n, dtype=np.int8).reshape(n, -1).T
    grids.setflags(write=False)
    return grids


def brute_lp_opt(g: Graph, max_n: int = MAX_LP_VERTICES) -> int:
    """Minimum of ``2 * sum(x)`` over feasible ``x ∈ {0, 1/2, 1}^V`` (doubled, as an int)."""
    if g.n > max_n:
        raise OracleTooLarge(f"n={g.n} exceeds the enumeration limit {max_n}")
    xs = _assignments(g.n)
    feasible = np.ones(len(xs), dtype=bool)
    for u, v in g.edges():
        feasible &= (xs[:, u] + xs[:, v]) >= 2
    return int(xs[feasible].sum(axis=1, dtype=np.int64).min())


def brute_min_surplus(h: BipartiteView, a: int, max_side: int = MAX_SURPLUS_SIDE) -> int:
    """Minimum of ``|N(X)| - |X|`` over all ``X ⊆ A`` containing ``a``."""
    if a not in h.a:
        raise ValueError(f"vertex {a!r} is not on side A")
    if len(h.a) > max_side:
        raise OracleTooLarge(f"|A|={len(h.a)} exceeds the enumeration limit {max_side}")
    rest = [x for x in h.a if x != a]
    best = None
    for r in range(len(rest) + 1):
        for sub in itertools.combinations(rest, r):
            xs = (a,) + sub
            nb = set()
            for x in xs:
                nb.update(h.nbrs[x])
            val = len(nb) - len(xs)
            if best is None or val < best:
                best = val
    return best


def brute_additive_violation(h: BipartiteView, q: int) -> Optional[frozenset]:
    """Some nonempty ``X ⊆ A`` with ``|N(X)| < |X| + q``, or None."""
    if len(h.a) > MAX_SURPLUS_SIDE:
        raise OracleTooLarge(f"|A|={len(h.a)} exceeds the enumeration limit")
    for r in range(1, len(h.a) + 1):
        for sub in itertools.combinations(h.a, r):
            if len(h.neighborhood(sub)) < r + q:
                return frozenset(sub)
    return None
