"""Boundary projections and profiles, profile-class partitions, and the
two closure procedures: one that grows a set until every outside vertex
projects onto few members, and one that grows a set until it preserves
all short internal distances.

A projection of u onto a boundary set counts the boundary vertices
reachable from u by paths whose interior stays off the boundary; the
profile additionally records the shortest such length per vertex, with
infinity past the radius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .graph import Graph, GraphError, distances_from, induced_subgraph, vset

INF = math.inf


def _avoiding_bfs(g: Graph, source: int, boundary: set, cutoff: int) -> Dict[int, int]:
    """Shortest lengths of paths from source whose interior avoids the
    boundary: boundary vertices are recorded when reached, never expanded."""
    dist = {source: 0}
    frontier = [source]
    depth = 0
    adj = g.adjacency
    while frontier and depth < cutoff:
        depth += 1
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in dist:
                    dist[w] = depth
                    if w not in boundary:
                        nxt.append(w)
        frontier = nxt
    return dist


@dataclass(frozen=True)
class ProjectionProfile:
    """Per-boundary-vertex shortest avoiding-path length, infinity when
    none of length <= r exists."""

    boundary: Tuple[int, ...]
    values: Dict[int, float] = field(hash=False)
    r: int

    def key(self) -> Tuple[float, ...]:
        """Canonical equality key, ordered by the boundary tuple."""
        return tuple(self.values[b] for b in self.boundary)

    def finite_support(self) -> Tuple[int, ...]:
        return tuple(b for b in self.boundary if self.values[b] is not INF)


def projection(g: Graph, u: int, a: Iterable[int], r: int) -> Tuple[int, ...]:
    """Boundary vertices reachable from u within r by boundary-avoiding
    paths."""
    members = vset(a, g)
    if u in members:
        raise GraphError("projection source lies on the boundary")
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range")
    mem = set(members)
    dist = _avoiding_bfs(g, u, mem, r)
    return tuple(v for v in members if dist.get(v, INF) <= r)


def profile(g: Graph, u: int, a: Iterable[int], r: int) -> ProjectionProfile:
    """Projection profile of u on the boundary a at radius r."""
    members = vset(a, g)
    if u in members:
        raise GraphError("profile source lies on the boundary")
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range")
    mem = set(members)
    dist = _avoiding_bfs(g, u, mem, r)
    values = {}
    for v in members:
        d = dist.get(v, INF)
        values[v] = d if d <= r else INF
    return ProjectionProfile(members, values, r)


def profile_classes(
    g: Graph, candidates: Iterable[int], boundary: Iterable[int], r: int
) -> Tuple[Tuple[int, ...], ...]:
    """Partition of the candidates into classes of equal profiles on the
    boundary, largest class first (ties by members)."""
    cands = vset(candidates, g)
    bound = vset(boundary, g)
    if set(cands) & set(bound):
        raise GraphError("candidates may not meet the boundary")
    groups: Dict[Tuple[float, ...], List[int]] = {}
    for u in cands:
        groups.setdefault(profile(g, u, bound, r).key(), []).append(u)
    classes = [tuple(sorted(vs)) for vs in groups.values()]
    classes.sort(key=lambda c: (-len(c), c))
    return tuple(classes)


def mu(g: Graph, a: Iterable[int], r: int) -> int:
    """Number of distinct profiles on a realized over the rest of the
    graph."""
    members = vset(a, g)
    mem = set(members)
    outside = [u for u in range(g.n) if u not in mem]
    if not outside:
        return 0
    return len(profile_classes(g, outside, members, r))


@dataclass(frozen=True)
class ClosureResult:
    closed_set: Tuple[int, ...]
    max_projection: int
    iterations: int
    converged: bool
    target: int


def closure(
    g: Graph,
    x: Iterable[int],
    r: int,
    target: int,
    max_additions: Optional[int] = None,
) -> ClosureResult:
    """Grow x until every outside vertex projects onto at most target
    members of the grown set, by repeatedly absorbing the outside vertex
    with the largest projection (smallest id on ties).

    Stops early after max_additions vertices, reporting converged=False;
    the reported max_projection is always recomputed on the final set.
    """
    if target < 1:
        raise GraphError("projection target must be >= 1")
    closed = set(vset(x, g))
    additions = 0
    while True:
        sizes = {}
        for u in range(g.n):
            if u in closed:
                continue
            dist = _avoiding_bfs(g, u, closed, r)
            sizes[u] = sum(1 for v, d in dist.items() if v in closed and d <= r)
        mx = max(sizes.values(), default=0)
        if mx <= target:
            return ClosureResult(
                tuple(sorted(closed)), mx, additions, True, target
            )
        if max_additions is not None and additions >= max_additions:
            return ClosureResult(
                tuple(sorted(closed)), mx, additions, False, target
            )
        best = max(sizes, key=lambda u: (sizes[u], -u))
        closed.add(best)
        additions += 1


def path_closure(g: Graph, x: Iterable[int], r: int) -> Tuple[int, ...]:
    """Superset of x in which every pair of x at distance <= r keeps its
    exact distance inside the induced subgraph.

    One shortest path per qualifying pair is added, walked greedily
    along BFS levels with smallest-id steps.  The distance-preservation
    property is re-verified on the result before returning.
    """
    members = vset(x, g)
    grown = set(members)
    dists = {}
    for v in members:
        dists[v] = distances_from(g, v, r)
    adj = g.adjacency
    pairs = []
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            dv = dists[v]
            if u in dv:
                pairs.append((u, v))
                cur = u
                grown.add(cur)
                while cur != v:
                    cur = min(w for w in adj[cur] if dv.get(w) == dv[cur] - 1)
                    grown.add(cur)
    closed = tuple(sorted(grown))
    sub, idmap = induced_subgraph(g, closed)
    for u, v in pairs:
        inside = distances_from(sub, idmap[u], r).get(idmap[v])
        if inside != dists[v][u]:
            raise RuntimeError(
                "internal: induced distance not preserved by path closure"
            )
    return closed
