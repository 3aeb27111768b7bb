"""Uncompressed graphs and brute-force oracles.

Everything here recomputes graph facts the slow, literal way: explicit
vertex lists, breadth-first search, subset enumeration, path enumeration.
The verification layer and the test suite compare these answers against the
compressed engine, so nothing in this module may consult the closed forms
it is checking.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import combinations

from .errors import TooManyElements
from .graphs import GraphView, Vertex, _MinCostFlow, gamma_vertex
from .rings import Ring, annihilating_ideals, ideal_product

DEFAULT_EXPLICIT_CAP = 4096
ENV_EXPLICIT_CAP = "ZDGRAPH_EXPLICIT_CAP"


def explicit_cap() -> int:
    raw = os.environ.get(ENV_EXPLICIT_CAP)
    if raw is None:
        return DEFAULT_EXPLICIT_CAP
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_EXPLICIT_CAP


@dataclass(frozen=True)
class ExplicitGraph:
    kind: str
    labels: tuple[Vertex, ...]
    adj: tuple[frozenset[int], ...]

    def index_of(self, v: Vertex) -> int:
        return self.labels.index(v)

    @property
    def n(self) -> int:
        return len(self.labels)

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2


def materialize(G: GraphView, cap: int | None = None) -> ExplicitGraph:
    """Expand a compressed graph into one node per vertex."""
    limit = cap if cap is not None else explicit_cap()
    n = G.vertex_count()
    if n > limit:
        raise TooManyElements(n, limit)
    labels = tuple(G.vertices())
    adj = tuple(
        frozenset(j for j, b in enumerate(labels) if i != j and a.mask & b.mask == 0)
        for i, a in enumerate(labels)
    )
    return ExplicitGraph(G.kind, labels, adj)


def gamma_from_multiplication(ring: Ring, cap: int | None = None) -> ExplicitGraph:
    """Zero-divisor graph straight from the multiplication, no support theory.

    Edges come from testing a*b == 0 over all element pairs, so this is an
    independent oracle for the compressed construction.
    """
    limit = cap if cap is not None else explicit_cap()
    if ring.size > limit:
        raise TooManyElements(ring.size, limit)
    zero = ring.zero()
    nonzero = [a for a in ring.elements(limit) if a != zero]
    pair_zero = [
        [ring.mul(a, b) == zero for b in nonzero] for a in nonzero
    ]
    divisors = [i for i, a in enumerate(nonzero) if any(pair_zero[i][j] for j in range(len(nonzero)) if j != i)]
    labels = tuple(gamma_vertex(ring, nonzero[i]) for i in divisors)
    pos = {v: p for p, v in enumerate(divisors)}
    adj = tuple(
        frozenset(pos[j] for j in divisors if j != i and pair_zero[i][j])
        for i in divisors
    )
    return ExplicitGraph("gamma", labels, adj)


def ag_from_ideal_products(ring: Ring) -> ExplicitGraph:
    """Ideal graph with edges from computed ideal products."""
    members = annihilating_ideals(ring)
    labels = tuple(Vertex(I.mask, 0) for I in members)
    adj = tuple(
        frozenset(
            j
            for j, J in enumerate(members)
            if i != j and ideal_product(ring, I, J).mask == 0
        )
        for i, I in enumerate(members)
    )
    return ExplicitGraph("ag", labels, adj)


# ---------------------------------------------------------------------------
# breadth-first oracles


def bfs_distances(eg: ExplicitGraph, src: int) -> list[float]:
    dist: list[float] = [math.inf] * eg.n
    dist[src] = 0
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for i in frontier:
            for j in eg.adj[i]:
                if dist[j] is math.inf:
                    dist[j] = d
                    nxt.append(j)
        frontier = nxt
    return dist


def bfs_distance(eg: ExplicitGraph, u: int, v: int) -> float:
    return bfs_distances(eg, u)[v]


def bfs_eccentricity(eg: ExplicitGraph, u: int) -> float:
    return max(bfs_distances(eg, u))


def bfs_radius(eg: ExplicitGraph) -> float:
    return min(bfs_eccentricity(eg, i) for i in range(eg.n))


def bfs_diameter(eg: ExplicitGraph) -> float:
    return max(bfs_eccentricity(eg, i) for i in range(eg.n))


# ---------------------------------------------------------------------------
# local structure oracles


def scan_triangle_vertex(eg: ExplicitGraph, u: int) -> bool:
    for a in eg.adj[u]:
        for b in eg.adj[u]:
            if a < b and b in eg.adj[a]:
                return True
    return False


def scan_orthogonal(eg: ExplicitGraph, u: int, v: int) -> bool:
    if v not in eg.adj[u]:
        return False
    return not (eg.adj[u] & eg.adj[v])


def scan_pendant(eg: ExplicitGraph, u: int) -> bool:
    return len(eg.adj[u]) == 1


# ---------------------------------------------------------------------------
# shortest cycle through a pair


def cycle_through_pair_flow(eg: ExplicitGraph, u: int, v: int) -> float:
    """Exact answer by min-cost two vertex-disjoint paths on the full graph.

    Every vertex is split into entry and exit halves; intermediates carry
    capacity one, the endpoints two, and each directed edge costs one.  Two
    units from u to v then cost exactly the shortest cycle through the pair.
    """
    if u == v:
        raise ValueError("need two distinct vertices")
    n = eg.n
    net = _MinCostFlow(2 * n)

    def node_in(i: int) -> int:
        return 2 * i

    def node_out(i: int) -> int:
        return 2 * i + 1

    for i in range(n):
        net.add_edge(node_in(i), node_out(i), 2 if i in (u, v) else 1, 0)
    for i in range(n):
        for j in eg.adj[i]:
            net.add_edge(node_out(i), node_in(j), 1, 1)
    flow, cost = net.min_cost_flow(node_in(u), node_out(v), 2)
    if flow < 2:
        return math.inf
    return float(cost)


def cycle_through_pair_enumeration(eg: ExplicitGraph, u: int, v: int, cap: int = 8, max_paths: int = 500_000) -> float:
    """Minimum cycle length through u and v by enumerating simple paths.

    Returns inf when no cycle of length <= cap exists.  Only suitable for
    small graphs; raises RuntimeError if the path census explodes.
    """
    if u == v:
        raise ValueError("need two distinct vertices")
    paths: list[tuple[int, frozenset[int]]] = []

    def dfs(node: int, visited: set[int], length: int) -> None:
        if len(paths) > max_paths:
            raise RuntimeError("path enumeration exceeded budget")
        for nxt in eg.adj[node]:
            if nxt == v:
                paths.append((length + 1, frozenset(visited - {u})))
            elif nxt not in visited and length + 1 < cap:
                visited.add(nxt)
                dfs(nxt, visited, length + 1)
                visited.remove(nxt)

    dfs(u, {u}, 0)
    paths.sort()
    best = math.inf
    for i, (l1, s1) in enumerate(paths):
        if 2 * l1 >= best or l1 + 1 > cap:
            break
        for l2, s2 in paths[i + 1 :]:
            if l1 + l2 >= best or l1 + l2 > cap:
                break
            if not (s1 & s2):
                best = l1 + l2
                break
    return best


# ---------------------------------------------------------------------------
# domination by subset enumeration


def exhaustive_domination(eg: ExplicitGraph, total: bool = False, max_vertices: int = 24) -> tuple[int, tuple[int, ...]]:
    n = eg.n
    if n > max_vertices:
        raise TooManyElements(n, max_vertices)
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            chosen = set(combo)
            ok = True
            for w in range(n):
                if total:
                    if not (eg.adj[w] & chosen):
                        ok = False
                        break
                else:
                    if w not in chosen and not (eg.adj[w] & chosen):
                        ok = False
                        break
            if ok:
                return size, combo
    raise AssertionError("no dominating set found")
