"""Deterministic Dinic max-flow with residual reachability for min cuts."""
from __future__ import annotations

from collections import deque


class FlowNetwork:
    """Directed network on nodes ``0..n-1`` stored as paired residual arcs.

    Arc ``e`` and its reverse are ``e`` and ``e ^ 1``. Arcs are scanned in
    insertion order, so the flow (and the cut) only depend on the order in
    which ``add_edge`` was called.
    """

    def __init__(self, n: int):
        self.n = n
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(n)]
        self._orig: list[int] = []

    def add_edge(self, u: int, v: int, capacity: int) -> int:
        e = len(self.head)
        self.head += (v, u)
        self.cap += (capacity, 0)
        self._orig += (capacity, 0)
        self.out[u].append(e)
        self.out[v].append(e + 1)
        return e

    def flow_on(self, e: int) -> int:
        return self._orig[e] - self.cap[e]

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        head, cap, out = self.head, self.cap, self.out
        while queue:
            u = queue.popleft()
            for e in out[u]:
                v = head[e]
                if cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        head, cap, out = self.head, self.cap, self.out
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            ptr = [0] * self.n
            while True:
                # iterative DFS for one blocking-flow path
                path: list[int] = []
                u = s
                while u != t:
                    arcs = out[u]
                    while ptr[u] < len(arcs):
                        e = arcs[ptr[u]]
                        v = head[e]
                        if cap[e] > 0 and level[v] == level[u] + 1:
                            break
                        ptr[u] += 1
                    if ptr[u] == len(arcs):
                        if u == s:
                            break
                        level[u] = -1  # dead end
                        e = path.pop()
                        u = head[e ^ 1]
                        ptr[u] += 1
                        continue
                    e = arcs[ptr[u]]
                    path.append(e)
                    u = head[e]
                if u != t:
                    break
                push = min(cap[e] for e in path)
                for e in path:
                    cap[e] -= push
                    cap[e ^ 1] += push
                total += push

    def reachable(self, s: int) -> list[bool]:
        """Nodes reachable from ``s`` in the residual network (the min-cut source side)."""
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.out[u]:
                v = self.head[e]
                if self.cap[e] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen
