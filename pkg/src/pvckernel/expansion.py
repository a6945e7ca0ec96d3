"""Constructive expansion and additive-expansion finders on bipartite views.

All finders peel off deficient sets found through s-t min cuts until the
surviving part of the view satisfies the required Hall-type condition.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Optional

from .flow import FlowNetwork
from .graph import BipartiteView
from .matching import hopcroft_karp, matching_size

#: q-subsets of Y tried by the additive verifier when |Y| is too large to enumerate
SAMPLED_SUBSETS = 64
EXHAUSTIVE_LIMIT = 12


@dataclass(frozen=True)
class ExpansionCertificate:
    q: int
    x_set: frozenset
    y_set: frozenset
    m_edges: frozenset  # (x, y) pairs
    rounds: tuple = field(default=(), compare=False)  # peeled (Z, N(Z)) pairs


@dataclass(frozen=True)
class AdditiveExpansionCertificate:
    q: int
    x_set: frozenset
    y_set: frozenset
    rounds: tuple = field(default=(), compare=False)


@dataclass(frozen=True)
class DeficientSet:
    z_set: frozenset
    surplus: int


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _check_q(q: int) -> None:
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"q must be a positive integer, got {q!r}")


def _check_lemma_preconditions(h: BipartiteView, q: int, strict: bool) -> None:
    _check_q(q)
    if not h.a:
        raise ValueError("side A is empty")
    if strict and not len(h.b) > q * len(h.a):
        raise ValueError(f"need |B| > q|A|, got |B|={len(h.b)}, q|A|={q * len(h.a)}")
    if not strict and not len(h.b) >= q * len(h.a):
        raise ValueError(f"need |B| >= q|A|, got |B|={len(h.b)}, q|A|={q * len(h.a)}")
    isolated = [y for y in h.b if not h.nbrs[y]]
    if isolated:
        raise ValueError(f"B contains isolated vertices {isolated[:5]}")


def _big(h: BipartiteView, q: int = 1) -> int:
    # strictly larger than the sum of all finite capacities
    return q * len(h.a) + len(h.b) + 1


def find_q_expansion(h: BipartiteView, q: int) -> ExpansionCertificate:
    """Nonempty ``X ⊆ A``, ``Y ⊆ B`` with a q-expansion of X into Y and ``N(Y) ⊆ X``.

    Requires ``|B| >= q|A|``, ``A`` nonempty and no isolated vertex in ``B``.
    """
    _check_lemma_preconditions(h, q, strict=False)
    rounds = []
    while True:
        a, b = h.a, h.b
        pos = {v: i for i, v in enumerate(itertools.chain(a, b), start=1)}
        src, sink = 0, len(a) + len(b) + 1
        net = FlowNetwork(sink + 1)
        inf = _big(h, q)
        for x in a:
            net.add_edge(src, pos[x], q)
        arcs = []
        for x in a:
            for y in h.nbrs[x]:
                arcs.append((net.add_edge(pos[x], pos[y], inf), x, y))
        for y in b:
            net.add_edge(pos[y], sink, 1)
        flow = net.max_flow(src, sink)
        if flow == q * len(a):
            m_edges = frozenset((x, y) for e, x, y in arcs if net.flow_on(e) > 0)
            return ExpansionCertificate(q, frozenset(a), frozenset(b), m_edges, tuple(rounds))
        side = net.reachable(src)
        z = [x for x in a if side[pos[x]]]
        nz = h.neighborhood(z)
        assert z and len(nz) < q * len(z)
        rounds.append((frozenset(z), frozenset(nz)))
        h = h.restrict(set(a) - set(z), set(b) - nz)


def min_surplus_containing(h: BipartiteView, a: int) -> DeficientSet:
    """Minimize ``|N(X)| - |X|`` over ``X ⊆ A`` with ``a ∈ X`` by one min cut.

    Cutting ``source -> a'`` (cost 1) keeps ``a'`` out of X; every neighbor of a
    chosen vertex is forced to the source side and pays its unit sink arc, so
    the cut value is ``|A \\ X| + |N(X)|``.
    """
    if a not in h.nbrs or a not in set(h.a):
        raise ValueError(f"vertex {a!r} is not on side A")
    pos = {v: i for i, v in enumerate(itertools.chain(h.a, h.b), start=1)}
    src, sink = 0, len(h.a) + len(h.b) + 1
    net = FlowNetwork(sink + 1)
    inf = _big(h)
    for x in h.a:
        net.add_edge(src, pos[x], inf if x == a else 1)
    for x in h.a:
        for y in h.nbrs[x]:
            net.add_edge(pos[x], pos[y], inf)
    for y in h.b:
        net.add_edge(pos[y], sink, 1)
    cut = net.max_flow(src, sink)
    side = net.reachable(src)
    z = frozenset(x for x in h.a if side[pos[x]])
    surplus = cut - len(h.a)
    assert a in z and surplus == len(h.neighborhood(z)) - len(z)
    return DeficientSet(z, surplus)


def find_additive_violator(h: BipartiteView, q: int) -> Optional[DeficientSet]:
    """First ``X`` (scanning ``a ∈ A`` ascending) with ``|N(X)| < |X| + q``, else None."""
    _check_q(q)
    for a in h.a:
        found = min_surplus_containing(h, a)
        if found.surplus < q:
            return found
    return None


def find_q_additive_expansion(h: BipartiteView, q: int) -> AdditiveExpansionCertificate:
    """Nonempty ``X ⊆ A``, ``Y ⊆ B`` forming a q-additive expansion with ``N(Y) ⊆ X``.

    Requires ``|B| > q|A|``, ``A`` nonempty and no isolated vertex in ``B``.
    """
    _check_lemma_preconditions(h, q, strict=True)
    rounds = []
    while True:
        bad = find_additive_violator(h, q)
        if bad is None:
            return AdditiveExpansionCertificate(q, frozenset(h.a), frozenset(h.b), tuple(rounds))
        nz = h.neighborhood(bad.z_set)
        assert bad.z_set != set(h.a)
        rounds.append((bad.z_set, frozenset(nz)))
        h = h.restrict(set(h.a) - bad.z_set, set(h.b) - nz)


def _common_checks(h: BipartiteView, x_set, y_set) -> Verdict:
    if not x_set or not y_set:
        return Verdict(False, "X and Y must be nonempty")
    if not set(x_set) <= set(h.a):
        return Verdict(False, "X is not a subset of A")
    if not set(y_set) <= set(h.b):
        return Verdict(False, "Y is not a subset of B")
    for y in sorted(y_set):
        outside = [x for x in h.nbrs[y] if x not in x_set]
        if outside:
            return Verdict(False, f"Y-vertex {y} has neighbor {outside[0]} outside X")
    return Verdict(True)


def verify_expansion(h: BipartiteView, cert: ExpansionCertificate) -> Verdict:
    """Check a q-expansion certificate against the definition."""
    base = _common_checks(h, cert.x_set, cert.y_set)
    if not base:
        return base
    load = {v: 0 for v in itertools.chain(cert.x_set, cert.y_set)}
    for x, y in cert.m_edges:
        if x not in cert.x_set or y not in cert.y_set:
            return Verdict(False, f"M-edge ({x}, {y}) leaves H[X, Y]")
        if y not in h.nbrs[x]:
            return Verdict(False, f"M-edge ({x}, {y}) is not an edge of H")
        load[x] += 1
        load[y] += 1
    for x in sorted(cert.x_set):
        if load[x] != cert.q:
            return Verdict(False, f"X-vertex {x} carries {load[x]} M-edges, expected {cert.q}")
    for y in sorted(cert.y_set):
        if load[y] > 1:
            return Verdict(False, f"Y-vertex {y} carries {load[y]} M-edges")
    return Verdict(True)


def _saturates(h: BipartiteView, xs: list, ys: set) -> bool:
    col = {y: i for i, y in enumerate(sorted(ys))}
    adj = [[col[y] for y in h.nbrs[x] if y in col] for x in xs]
    match_l, _ = hopcroft_karp(adj, len(col))
    return matching_size(match_l) == len(xs)


def verify_additive_expansion(
    h: BipartiteView, cert: AdditiveExpansionCertificate, seed: int = 0
) -> Verdict:
    """Check a q-additive expansion certificate.

    Every q-subset of Y is removed in turn (a fixed-seed sample when
    ``|Y| > 12``) and a matching saturating X must survive. For ``|X| <= 12``
    the Hall form ``|N(X') ∩ Y| >= |X'| + q`` is also checked exhaustively.
    """
    base = _common_checks(h, cert.x_set, cert.y_set)
    if not base:
        return base
    q = cert.q
    xs = sorted(cert.x_set)
    ys = sorted(cert.y_set)
    if len(ys) < q:
        return Verdict(False, f"|Y| = {len(ys)} < q = {q}")
    if len(ys) <= EXHAUSTIVE_LIMIT:
        removals = itertools.combinations(ys, q)
    else:
        rng = random.Random(seed)
        removals = (rng.sample(ys, q) for _ in range(SAMPLED_SUBSETS))
    for drop in removals:
        if not _saturates(h, xs, set(ys) - set(drop)):
            return Verdict(False, f"no matching saturating X after removing {sorted(drop)}")
    if len(xs) <= EXHAUSTIVE_LIMIT:
        yset = set(ys)
        for r in range(1, len(xs) + 1):
            for sub in itertools.combinations(xs, r):
                got = len(h.neighborhood(sub) & yset)
                if got < r + q:
                    return Verdict(False, f"Hall violation: |N({list(sub)}) ∩ Y| = {got} < {r + q}")
    return Verdict(True)


def as_additive(cert: ExpansionCertificate) -> AdditiveExpansionCertificate:
    """Read a (q+1)-expansion as a q-additive expansion."""
    if cert.q < 2:
        raise ValueError("need a (q+1)-expansion with q >= 1")
    return AdditiveExpansionCertificate(cert.q - 1, cert.x_set, cert.y_set)
