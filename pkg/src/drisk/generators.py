"""Graph constructions: standard families, exact subdivisions, the pendant
gadget, the random regular bucket sampler, and the subdivision-based
hardness gadget.

Everything here is deterministic; the only randomness is the seeded
shuffle inside bucket_model.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .graph import INF, Graph, GraphError, distances_from, girth


# ---------------------------------------------------------------------------
# standard families


def path_graph(n: int) -> Graph:
    """Path on n >= 1 vertices, ids in path order."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols grid; vertex (i,j) has id i*cols + j."""
    if rows < 1 or cols < 1:
        raise GraphError("grid needs rows, cols >= 1")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    if leaves < 1:
        raise GraphError("star needs >= 1 leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gnm_random(n: int, m: int, seed: int) -> Graph:
    """Uniform simple graph with n vertices and m edges (seeded)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if m > len(pairs):
        raise GraphError(f"m={m} exceeds the {len(pairs)} available pairs")
    rng = random.Random(seed)
    return Graph(n, rng.sample(pairs, m))


FAMILIES = ("path", "cycle", "grid", "star", "complete", "gnm")


def family(kind: str, **params) -> Graph:
    """Dispatch by family name; used by the command line."""
    if kind == "path":
        return path_graph(params["n"])
    if kind == "cycle":
        return cycle_graph(params["n"])
    if kind == "grid":
        return grid_graph(params["rows"], params["cols"])
    if kind == "star":
        return star_graph(params["leaves"])
    if kind == "complete":
        return complete_graph(params["n"])
    if kind == "gnm":
        return gnm_random(params["n"], params["m"], params.get("seed", 0))
    raise GraphError(f"unknown family {kind!r}")


# ---------------------------------------------------------------------------
# exact subdivision


def exact_subdivision(g: Graph, r: int) -> Tuple[Graph, Dict[int, int]]:
    """Replace every edge by a path of exactly r edges.

    Original vertices keep their ids; the i-th edge contributes the chain
    n + i*(r-1) .. n + i*(r-1) + r-2.  Returns the new graph and the origin
    map (original id -> id in the subdivision, here the identity).
    Distances between original vertices scale by exactly r.
    """
    if r < 1:
        raise GraphError("subdivision radius must be >= 1")
    if g.multigraph:
        raise GraphError("subdivision requires a simple graph")
    origin = {v: v for v in range(g.n)}
    if r == 1:
        return Graph(g.n, g.edges), origin
    edges: List[Tuple[int, int]] = []
    nxt = g.n
    for u, v in g.edges:
        chain = [u] + list(range(nxt, nxt + r - 1)) + [v]
        nxt += r - 1
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, edges), origin


def subdivision_vertex_range(g: Graph, r: int) -> range:
    """Ids of the vertices exact_subdivision(g, r) adds."""
    return range(g.n, g.n + (r - 1) * g.m)


# ---------------------------------------------------------------------------
# pendant construction


@dataclass(frozen=True)
class PendantGraph:
    """Exact r-subdivision of a base graph with an apex x joined to every
    subdivision vertex by a private path of length r, plus a pendant path
    of length r from x to y."""

    graph: Graph
    origin: Dict[int, int]
    x: int
    y: int
    r: int
    subdivision_vertices: Tuple[int, ...]

    def __post_init__(self):
        dist = distances_from(self.graph, self.x)
        if dist.get(self.y) != self.r:
            raise GraphError("pendant gadget: x-y distance is not r")
        for w in self.subdivision_vertices:
            if dist.get(w) != self.r:
                raise GraphError("pendant gadget: subdivision vertex not at distance r from x")


def pendant_construction(g: Graph, r: int) -> PendantGraph:
    """Build the pendant gadget over the exact r-subdivision of g.

    Requires r >= 2: with r = 1 there are no subdivision vertices to hang
    the apex from and the construction degenerates.
    """
    if r < 2:
        raise GraphError("pendant construction requires r >= 2")
    sub, origin = exact_subdivision(g, r)
    subdiv = tuple(subdivision_vertex_range(g, r))
    edges = list(sub.edges)
    x = sub.n
    nxt = x + 1
    for w in subdiv:
        chain = [x] + list(range(nxt, nxt + r - 1)) + [w]
        nxt += r - 1
        edges.extend(zip(chain, chain[1:]))
    y = nxt + r - 1
    chain = [x] + list(range(nxt, nxt + r - 1)) + [y]
    edges.extend(zip(chain, chain[1:]))
    return PendantGraph(Graph(y + 1, edges), origin, x, y, r, subdiv)


# ---------------------------------------------------------------------------
# random regular multigraph with short cycles trimmed


@dataclass(frozen=True)
class BucketModelSample:
    """Seeded draw of the bucket model: g0 is the raw d-regular collapse of
    a uniform perfect matching on d*n points, g the simple trimmed graph."""

    g0: Graph
    g: Graph
    n: int
    d: int
    seed: int
    removed_edges: int

    def __post_init__(self):
        if self.g0.m != self.d * self.n // 2:
            raise GraphError("bucket sample: wrong edge count in g0")
        if any(self.g0.degree(v) != self.d for v in range(self.n)):
            raise GraphError("bucket sample: g0 is not d-regular")
        if self.g.multigraph:
            raise GraphError("bucket sample: trimmed graph must be simple")
        if girth(self.g, cap=self.d) != INF:
            raise GraphError("bucket sample: short cycle survived trimming")
        if any(self.g.degree(v) > self.d for v in range(self.n)):
            raise GraphError("bucket sample: degree bound violated")


def _bfs_short_cycle(adj: List[Dict[int, int]], root: int, d: int):
    """Shortest cycle of length <= d visible from a BFS at root, as a vertex
    sequence, or None.  adj is a mutable neighbor->multiplicity view of a
    simple graph."""
    cap = d // 2
    dist = {root: 0}
    parent = {root: -1}
    frontier = [root]
    depth = 0
    while frontier and depth < cap:
        depth += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist:
                    dist[w] = depth
                    parent[w] = u
                    nxt.append(w)
        frontier = nxt
    best = None
    for u, du in dist.items():
        for w in adj[u]:
            if w <= u:
                continue
            dw = dist.get(w)
            if dw is None or parent[u] == w or parent[w] == u:
                continue
            cand = du + dw + 1
            if cand <= d and (best is None or (cand, u, w) < best):
                best = (cand, u, w)
    if best is None:
        return None
    _, u, w = best
    # walk both endpoints up to their lowest common ancestor
    up, wp = [u], [w]
    a, b = u, w
    while dist[a] > dist[b]:
        a = parent[a]
        up.append(a)
    while dist[b] > dist[a]:
        b = parent[b]
        wp.append(b)
    while a != b:
        a = parent[a]
        up.append(a)
        b = parent[b]
        wp.append(b)
    cycle = up + wp[-2::-1]  # u .. lca .. w, closed by the edge (w, u)
    return cycle


def trim_short_cycles(g0: Graph, d: int) -> Tuple[Graph, int]:
    """Delete one edge from every cycle of length <= d until none remains.

    Loops are 1-cycles and parallel edges 2-cycles.  Among the edges of a
    found cycle, the lexicographically smallest is removed.  Edge removal
    never creates cycles, so a single pass over root vertices with a local
    fixpoint at each reaches the global fixpoint.
    """
    if d < 1:
        raise GraphError("trim threshold must be >= 1")
    adj: List[Dict[int, int]] = [dict() for _ in range(g0.n)]
    removed = 0
    for u, v in g0.edges:
        if u == v:
            removed += 1  # every loop is a 1-cycle
            continue
        adj[u][v] = adj[u].get(v, 0) + 1
        adj[v][u] = adj[v].get(u, 0) + 1
    if d >= 2:
        for u in range(g0.n):
            for v, mult in list(adj[u].items()):
                if v > u and mult > 1:
                    removed += mult - 1
                    adj[u][v] = adj[v][u] = 1
    if d >= 3:
        for root in range(g0.n):
            while True:
                cycle = _bfs_short_cycle(adj, root, d)
                if cycle is None:
                    break
                closed = list(zip(cycle, cycle[1:])) + [(cycle[-1], cycle[0])]
                eu, ev = min((min(a, b), max(a, b)) for a, b in closed)
                del adj[eu][ev]
                del adj[ev][eu]
                removed += 1
    edges = [(u, v) for u in range(g0.n) for v in adj[u] if u < v]
    return Graph(g0.n, edges), removed


def bucket_model(n: int, d: int, seed: int) -> BucketModelSample:
    """Sample the bucket model: d*n points in n buckets of d, a uniform
    perfect matching on the points (Fisher-Yates shuffle, consecutive
    pairing), buckets collapsed to single vertices, then every cycle of
    length <= d trimmed.
    """
    if n < 2 or n % 2:
        raise GraphError("bucket model needs an even n >= 2")
    if d < 1:
        raise GraphError("bucket model needs d >= 1")
    rng = random.Random(seed)
    points = list(range(d * n))
    rng.shuffle(points)
    edges = [
        (points[i] // d, points[i + 1] // d) for i in range(0, d * n, 2)
    ]
    g0 = Graph(n, edges, multigraph=True)
    g, removed = trim_short_cycles(g0, d)
    return BucketModelSample(g0, g, n, d, seed, removed)


# ---------------------------------------------------------------------------
# hardness gadget


@dataclass(frozen=True)
class HardnessInstance:
    """Exact r-subdivision of the 3-subdivision-plus-apex gadget.

    o_set holds the images of the base graph's vertices; distances inside
    o_set scale so that base adjacency becomes the only way to be closer
    than 6r.
    """

    graph: Graph
    origin: Dict[int, int]
    x: int
    y: int
    r: int
    o_set: Tuple[int, ...]

    def __post_init__(self):
        dist = distances_from(self.graph, self.x)
        if dist.get(self.y) != 3 * self.r:
            raise GraphError("hardness gadget: x-y distance is not 3r")


def hardness_reduction(g: Graph, r: int) -> HardnessInstance:
    """Subdivide every edge of g three times, join an apex x to each
    subdivision vertex by a path of length 2 and a pendant y to x by a path
    of length 3, then take the exact r-subdivision of the whole gadget."""
    if r < 1:
        raise GraphError("hardness reduction requires r >= 1")
    if g.multigraph:
        raise GraphError("hardness reduction requires a simple graph")
    sub3, _ = exact_subdivision(g, 3)
    subdiv = tuple(subdivision_vertex_range(g, 3))
    edges = list(sub3.edges)
    x = sub3.n
    nxt = x + 1
    for w in subdiv:
        edges.append((x, nxt))
        edges.append((nxt, w))
        nxt += 1
    y = nxt + 2
    edges.extend([(x, nxt), (nxt, nxt + 1), (nxt + 1, y)])
    j = Graph(y + 1, edges)
    h, origin = exact_subdivision(j, r)
    return HardnessInstance(h, {v: v for v in range(g.n)}, x, y, r, tuple(range(g.n)))
