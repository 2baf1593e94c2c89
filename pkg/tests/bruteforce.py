"""Slow reference implementations for the tests.

Everything here is written directly against Graph.n and Graph.edges,
independent of the library's own BFS/oracle code paths, so the two
sides of every comparison are computed by different routes.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

INF = math.inf


def simple_adj(g) -> List[set]:
    adj = [set() for _ in range(g.n)]
    for u, v in g.edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def bfs_dists(adj: List[set], source: int) -> Dict[int, int]:
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def dist_matrix(g) -> List[Dict[int, int]]:
    adj = simple_adj(g)
    return [bfs_dists(adj, v) for v in range(g.n)]


def alpha(g, a: Iterable[int], r: int) -> int:
    """Maximum subset of a with pairwise distance > r, by memoized
    take/skip recursion over the conflict relation."""
    members = sorted(set(a))
    dm = dist_matrix(g)
    conflicts = {
        u: frozenset(
            v for v in members if v != u and dm[u].get(v, INF) <= r
        )
        for u in members
    }
    memo: Dict[frozenset, int] = {}

    def rec(avail: frozenset) -> int:
        if not avail:
            return 0
        key = avail
        hit = memo.get(key)
        if hit is not None:
            return hit
        v = min(avail)
        best = max(
            rec(avail - {v}),
            1 + rec(avail - {v} - conflicts[v]),
        )
        memo[key] = best
        return best

    return rec(frozenset(members))


def gamma(g, a: Iterable[int], r: int) -> int:
    """Minimum number of radius-r balls (any centers) covering a, by
    plain subset enumeration over center combinations."""
    members = sorted(set(a))
    if not members:
        return 0
    dm = dist_matrix(g)
    coverage = {
        c: frozenset(v for v in members if dm[c].get(v, INF) <= r)
        for c in range(g.n)
    }
    centers = [c for c in range(g.n) if coverage[c]]
    want = frozenset(members)
    for size in range(1, len(members) + 1):
        for combo in itertools.combinations(centers, size):
            hit = frozenset()
            for c in combo:
                hit |= coverage[c]
            if hit >= want:
                return size
    raise AssertionError("some member is unreachable at this radius")


def girth(g) -> float:
    """Shortest cycle length, honoring loops (1) and parallel edges (2),
    found by deleting each edge in turn and measuring the detour."""
    edges = list(g.edges)
    best = INF
    counts: Dict[Tuple[int, int], int] = {}
    for u, v in edges:
        if u == v:
            best = min(best, 1)
        key = (min(u, v), max(u, v))
        counts[key] = counts.get(key, 0) + 1
    if any(c > 1 for c in counts.values()):
        best = min(best, 2)
    for u, v in counts:
        adj = [set() for _ in range(g.n)]
        for a, b in counts:
            if (a, b) != (u, v):
                adj[a].add(b)
                adj[b].add(a)
        d = bfs_dists(adj, u).get(v)
        if d is not None:
            best = min(best, d + 1)
    return best


def avoiding_profile(g, u: int, boundary: Sequence[int], r: int) -> Tuple[float, ...]:
    """Shortest path length from u to each boundary vertex whose
    interior avoids the whole boundary, computed one target at a time
    on the graph minus the other boundary vertices."""
    out = []
    for t in boundary:
        others = set(boundary) - {t}
        adj = [set() for _ in range(g.n)]
        for a, b in g.edges:
            if a != b and a not in others and b not in others:
                adj[a].add(b)
                adj[b].add(a)
        if u in others:
            out.append(INF)
            continue
        d = bfs_dists(adj, u).get(t, INF)
        out.append(d if d <= r else INF)
    return tuple(out)


def weak_reach(g, sequence: Sequence[int], r: int) -> List[set]:
    """reach[v] by explicit enumeration of all simple paths of length
    <= r from v (exponential; tiny graphs only): the endpoint counts
    when it is the rank-minimum of the whole path."""
    rank = {v: i for i, v in enumerate(sequence)}
    adj = simple_adj(g)
    reach = [set() for _ in range(g.n)]

    def walk(path: List[int]):
        v, u = path[0], path[-1]
        if rank[u] <= rank[v] and all(rank[w] >= rank[u] for w in path):
            reach[v].add(u)
        if len(path) <= r:
            for w in adj[path[-1]]:
                if w not in path:
                    walk(path + [w])

    for v in range(g.n):
        walk([v])
    return reach


def shattered_exactly(sets: Sequence[frozenset], x: Tuple[int, ...]) -> bool:
    traces = {frozenset(x) & s for s in sets}
    return len(traces) == 2 ** len(x)


def pair_shattered(sets: Sequence[frozenset], x: Tuple[int, ...]) -> bool:
    for pair in itertools.combinations(x, 2):
        want = frozenset(pair)
        if not any(frozenset(x) & s == want for s in sets):
            return False
    return True


def two_vc(universe: Sequence[int], sets: Sequence[frozenset]) -> int:
    best = 0
    items = list(universe)
    for size in range(1, len(items) + 1):
        found = False
        for x in itertools.combinations(items, size):
            if pair_shattered(sets, x):
                found = True
                break
        if found:
            best = size
        else:
            break
    return best


def lp_cover_float(g, a: Iterable[int], r: int) -> float:
    """Fractional cover optimum via scipy, as an independent LP route."""
    import numpy as np
    from scipy.optimize import linprog

    members = sorted(set(a))
    if not members:
        return 0.0
    dm = dist_matrix(g)
    rows = []
    for u in members:
        row = [0.0] * g.n
        for v in range(g.n):
            if dm[v].get(u, INF) <= r:
                row[v] = -1.0
        rows.append(row)
    res = linprog(
        c=np.ones(g.n),
        A_ub=np.array(rows),
        b_ub=-np.ones(len(members)),
        bounds=(0, None),
        method="highs",
    )
    assert res.status == 0
    return float(res.fun)


def harmonic_float(n: int) -> float:
    return sum(1.0 / i for i in range(1, n + 1))
