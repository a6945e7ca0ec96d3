"""Hopcroft-Karp maximum bipartite matching and the Koenig vertex cover.

Left vertices are ``0..n_left-1``, right vertices ``0..n_right-1``; ``adj[u]``
lists the right neighbors of left vertex ``u``. Everything is scanned in list
order, so callers that pass sorted lists get reproducible matchings.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

UNMATCHED = -1
_INF = float("inf")


def hopcroft_karp(adj: Sequence[Sequence[int]], n_right: int) -> tuple[list[int], list[int]]:
    """Maximum matching as ``(match_left, match_right)`` (``-1`` = unmatched)."""
    n_left = len(adj)
    match_l = [UNMATCHED] * n_left
    match_r = [UNMATCHED] * n_right

    # greedy warm start
    for u in range(n_left):
        for v in adj[u]:
            if match_r[v] == UNMATCHED:
                match_l[u] = v
                match_r[v] = u
                break

    dist = [0] * n_left
    while True:
        # BFS layers from free left vertices
        queue = deque()
        for u in range(n_left):
            if match_l[u] == UNMATCHED:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = False
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for v in adj[u]:
                w = match_r[v]
                if w == UNMATCHED:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = du
                    queue.append(w)
        if not found:
            break

        ptr = [0] * n_left
        for root in range(n_left):
            if match_l[root] != UNMATCHED:
                continue
            # iterative DFS along the layered graph
            stack = [root]
            while stack:
                u = stack[-1]
                nb = adj[u]
                advanced = False
                while ptr[u] < len(nb):
                    v = nb[ptr[u]]
                    w = match_r[v]
                    if w == UNMATCHED:
                        # augment along the stack
                        for x in reversed(stack):
                            y = adj[x][ptr[x]]
                            match_l[x] = y
                            match_r[y] = x
                        stack.clear()
                        advanced = True
                        break
                    if dist[w] == dist[u] + 1:
                        stack.append(w)
                        advanced = True
                        break
                    ptr[u] += 1
                if not advanced:
                    dist[u] = _INF
                    stack.pop()
                    if stack:
                        ptr[stack[-1]] += 1
    return match_l, match_r


def matching_size(match_l: Sequence[int]) -> int:
    return sum(1 for v in match_l if v != UNMATCHED)


def koenig_cover(
    adj: Sequence[Sequence[int]], n_right: int, match_l: Sequence[int], match_r: Sequence[int]
) -> tuple[list[bool], list[bool]]:
    """Minimum vertex cover from a maximum matching.

    Alternating reachability starts from the free left vertices in ascending
    order; the cover is (left not reached) + (right reached).
    """
    n_left = len(adj)
    seen_l = [False] * n_left
    seen_r = [False] * n_right
    queue = deque()
    for u in range(n_left):
        if match_l[u] == UNMATCHED:
            seen_l[u] = True
            queue.append(u)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if seen_r[v] or match_l[u] == v:
                continue
            seen_r[v] = True
            w = match_r[v]
            if w != UNMATCHED and not seen_l[w]:
                seen_l[w] = True
                queue.append(w)
    return [not s for s in seen_l], seen_r
