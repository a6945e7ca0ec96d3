"""Simple undirected graphs with stable external labels.

Vertices are dense indices ``0..n-1``; every vertex also carries an external
label (the 1-based id from the input file for parsed graphs) that survives
vertex deletion, so results computed on a reduced graph can be mapped back.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence


class GraphParseError(ValueError):
    """Malformed DIMACS-style input; ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True, eq=False)
class Graph:
    labels: tuple
    adj: tuple  # tuple of sorted tuples of neighbor indices

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Hashable] | None = None,
    ) -> "Graph":
        """Build a graph on indices ``0..n-1``. Duplicate edges collapse."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if labels is None:
            labels = range(n)
        labels = tuple(labels)
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise ValueError("labels must be distinct")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(labels, tuple(tuple(sorted(s)) for s in nbrs))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v`` in ascending order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def index_of(self, label: Hashable) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise ValueError(f"unknown vertex label {label!r}") from None

    def indices(self, labels: Iterable[Hashable]) -> list[int]:
        return [self.index_of(x) for x in labels]

    @property
    def _label_index(self) -> dict:
        cache = self.__dict__.get("_label_cache")
        if cache is None:
            cache = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_label_cache", cache)
        return cache

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.labels, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_vertices(g: Graph, s: Iterable[int]) -> set[int]:
    out = set()
    for v in s:
        try:
            v = operator.index(v)
        except TypeError:
            raise ValueError(f"vertex ids must be integers, got {v!r}") from None
        if not 0 <= v < g.n:
            raise ValueError(f"unknown vertex {v} (graph has n={g.n})")
        out.add(v)
    return out


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[keep]`` and an old->new index map (``-1`` for dropped vertices)."""
    kept = sorted(_check_vertices(g, keep))
    old_to_new = [-1] * g.n
    for new, old in enumerate(kept):
        old_to_new[old] = new
    adj = tuple(
        tuple(old_to_new[w] for w in g.adj[v] if old_to_new[w] >= 0) for v in kept
    )
    return Graph(tuple(g.labels[v] for v in kept), adj), old_to_new


def delete_vertices_with_map(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    drop = _check_vertices(g, s)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """``G - S``; labels of the surviving vertices are unchanged."""
    return delete_vertices_with_map(g, s)[0]


def edges_after_delete(g: Graph, s: Iterable[int]) -> int:
    """Number of edges of ``G - S`` without building the subgraph."""
    drop = _check_vertices(g, s)
    touched = 0
    inside = 0
    for v in drop:
        for w in g.adj[v]:
            touched += 1
            if w in drop:
                inside += 1
    # edges inside S were counted twice
    return g.m - (touched - inside // 2)


@dataclass(frozen=True)
class BipartiteView:
    """Edges of a host graph running between two disjoint vertex sets.

    ``nbrs`` maps every vertex of ``a`` and ``b`` to its sorted neighbors on
    the opposite side. Vertex ids are host indices.
    """

    host: Graph
    a: tuple
    b: tuple
    nbrs: dict

    @property
    def num_edges(self) -> int:
        return sum(len(self.nbrs[x]) for x in self.a)

    def neighbors(self, v: int) -> tuple:
        return self.nbrs[v]

    def neighborhood(self, xs: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for x in xs:
            out.update(self.nbrs[x])
        return out

    def edges(self) -> list[tuple[int, int]]:
        """``(a, b)`` pairs in ascending order of ``a`` then ``b``."""
        return [(x, y) for x in self.a for y in self.nbrs[x]]

    def restrict(self, a: Iterable[int], b: Iterable[int]) -> "BipartiteView":
        """Sub-view on ``a`` and ``b`` (which must be subsets of the sides)."""
        a = set(a)
        b = set(b)
        if not a <= set(self.a) or not b <= set(self.b):
            raise ValueError("restriction sides must be subsets of the view sides")
        return _make_view(self.host, sorted(a), sorted(b), self.nbrs)


def _make_view(host: Graph, a: list[int], b: list[int], source) -> BipartiteView:
    aset = set(a)
    bset = set(b)
    nbrs = {}
    for x in a:
        nbrs[x] = tuple(w for w in source[x] if w in bset)
    for y in b:
        nbrs[y] = tuple(w for w in source[y] if w in aset)
    return BipartiteView(host, tuple(a), tuple(b), nbrs)


def bipartite_view(g: Graph, a: Iterable[int], b: Iterable[int]) -> BipartiteView:
    """``G[A, B]``: the host edges with one endpoint in ``a`` and one in ``b``."""
    a = _check_vertices(g, a)
    b = _check_vertices(g, b)
    if a & b:
        raise ValueError(f"sides overlap in {sorted(a & b)}")
    return _make_view(g, sorted(a), sorted(b), g.adj)


def parse_graph(text: str) -> Graph:
    """Parse the DIMACS edge format (``c`` comments, ``p edge n m``, ``e u v``).

    Vertex ``i`` in the file becomes index ``i - 1`` with label ``i``.
    Repeated edges are collapsed; self-loops are rejected.
    """
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0].startswith("c"):
            continue
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise GraphParseError(lineno, "duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError(lineno, f"expected 'p edge <n> <m>', got {raw.strip()!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError(lineno, "non-integer vertex or edge count") from None
            if n < 0 or declared_m < 0:
                raise GraphParseError(lineno, "negative count in header")
        elif kind == "e":
            if n is None:
                raise GraphParseError(lineno, "edge line before header")
            if len(parts) != 3:
                raise GraphParseError(lineno, f"expected 'e <u> <v>', got {raw.strip()!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(lineno, "non-integer vertex id") from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphParseError(lineno, f"vertex id {x} out of range 1..{n}")
            if u == v:
                raise GraphParseError(lineno, f"self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise GraphParseError(lineno, f"unknown line type {kind!r}")
    if n is None:
        raise GraphParseError(0, "missing 'p edge <n> <m>' header")
    return Graph.from_edges(n, edges, labels=range(1, n + 1))


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def serialize_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    """Write ``g`` in the DIMACS edge format using 1-based positions."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
