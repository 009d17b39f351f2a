"""Multigraphs, the graphic matroid, and brute-force counting oracles.

Loops and parallel edges are kept explicit; nothing is simplified behind
the caller's back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .matroid import Matroid, ResourceLimitError, mask_of

ORIENTATION_LIMIT = 22


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Multigraph:
    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertices: int, edges: Iterable[Iterable[int]] = ()):
        edges = tuple((int(u), int(v)) for u, v in edges)
        if vertices < 0:
            raise GraphError("vertex count must be nonnegative")
        for u, v in edges:
            if not (0 <= u < vertices and 0 <= v < vertices):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{vertices - 1}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def loops(self) -> int:
        return sum(u == v for u, v in self.edges)

    def to_json(self) -> dict:
        return {"vertices": self.vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, d: dict) -> "Multigraph":
        try:
            return cls(int(d["vertices"]), d["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc


def _find(parent: list[int], a: int) -> int:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def forest_rank(vertices: int, edges: Iterable[tuple[int, int]]) -> int:
    """V minus the number of components of (V, edges)."""
    parent = list(range(vertices))
    r = 0
    for u, v in edges:
        a, b = _find(parent, u), _find(parent, v)
        if a != b:
            parent[a] = b
            r += 1
    return r


def components(g: Multigraph) -> int:
    return g.vertices - forest_rank(g.vertices, g.edges)


def is_connected(g: Multigraph) -> bool:
    return g.vertices <= 1 or components(g) == 1


class GraphicMatroid(Matroid):
    def __init__(self, graph: Multigraph):
        super().__init__(graph.num_edges)
        self.graph = graph

    def _rank(self, mask):
        edges = self.graph.edges
        return forest_rank(self.graph.vertices, (edges[i] for i in range(len(edges)) if mask >> i & 1))

    def descriptor(self):
        return {"type": "graphic", "graph": self.graph.to_json()}


def graphic_matroid(g: Multigraph) -> GraphicMatroid:
    return GraphicMatroid(g)


# --- generators ----------------------------------------------------------


def wheel(n: int) -> Multigraph:
    """Hub 0, rim 1..n; spokes are edges 0..n-1, rim edges n..2n-1."""
    if n < 1:
        raise GraphError("wheel needs n >= 1")
    spokes = [(0, i) for i in range(1, n + 1)]
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    return Multigraph(n + 1, spokes + rim)


def wheel_rim(n: int) -> int:
    return mask_of(range(n, 2 * n))


def complete(n: int) -> Multigraph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Multigraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(n: int, m: int) -> Multigraph:
    if n < 1 or m < 1:
        raise GraphError("complete bipartite graph needs n, m >= 1")
    return Multigraph(n + m, [(i, n + j) for i in range(n) for j in range(m)])


def square_lattice(n: int) -> Multigraph:
    """The n x n grid graph."""
    if n < 2:
        raise GraphError("square lattice needs n >= 2")
    edges = []
    for r in range(n):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < n:
                edges.append((v, v + n))
    return Multigraph(n * n, edges)


def cycle(n: int) -> Multigraph:
    if n < 1:
        raise GraphError("cycle needs n >= 1")
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_tree(n: int) -> Multigraph:
    """A path with n edges."""
    if n < 1:
        raise GraphError("tree needs n >= 1 edges")
    return Multigraph(n + 1, [(i, i + 1) for i in range(n)])


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, outer + spokes + inner)


def octahedron() -> Multigraph:
    return Multigraph(6, [(i, j) for i in range(6) for j in range(i + 1, 6) if j != i + 3])


def two_digons() -> Multigraph:
    """Two 2-cycles sharing vertex 0."""
    return Multigraph(3, [(0, 1), (0, 1), (0, 2), (0, 2)])


# --- structure -----------------------------------------------------------


def vertex_delete(g: Multigraph, v: int) -> Multigraph:
    if not 0 <= v < g.vertices:
        raise GraphError(f"vertex {v} out of range")
    relabel = lambda u: u if u < v else u - 1  # noqa: E731
    return Multigraph(g.vertices - 1, [(relabel(a), relabel(b)) for a, b in g.edges if v not in (a, b)])


def is_2connected(g: Multigraph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex (loops ignored)."""
    if g.vertices < 3 or not is_connected(g):
        return False
    return all(is_connected(vertex_delete(g, v)) for v in range(g.vertices))


def is_k_regular(g: Multigraph, k: int) -> bool:
    return all(d == k for d in g.degrees())


def girth(g: Multigraph) -> float:
    """Length of a shortest cycle; ``math.inf`` for a forest."""
    best = math.inf
    for idx, (u, v) in enumerate(g.edges):
        if u == v:
            return 1
        adj = [[] for _ in range(g.vertices)]
        for j, (a, b) in enumerate(g.edges):
            if j != idx:
                adj[a].append(b)
                adj[b].append(a)
        dist = {u: 0}
        frontier = [u]
        while frontier and v not in dist:
            nxt = []
            for a in frontier:
                for b in adj[a]:
                    if b not in dist:
                        dist[b] = dist[a] + 1
                        nxt.append(b)
            frontier = nxt
        if v in dist:
            best = min(best, dist[v] + 1)
    return best


# --- counting oracles ----------------------------------------------------


def _bareiss_det(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def spanning_tree_count(g: Multigraph) -> int:
    """Matrix-Tree theorem with fraction-free elimination."""
    if not is_connected(g):
        raise GraphError("spanning tree count requires a connected graph")
    n = g.vertices
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        if u == v:
            continue
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    return _bareiss_det([row[1:] for row in lap[1:]])


def _orientations(g: Multigraph, limit: int):
    proper = [(u, v) for u, v in g.edges if u != v]
    if len(proper) > limit:
        raise ResourceLimitError(f"orientation enumeration refused for {len(proper)} edges > {limit}")
    n = g.vertices
    for bits in range(1 << len(proper)):
        out = [0] * n
        for k, (u, v) in enumerate(proper):
            if bits >> k & 1:
                u, v = v, u
            out[u] |= 1 << v
        yield out


def _is_acyclic(out: list[int]) -> bool:
    n = len(out)
    incoming = [0] * n
    for u in range(n):
        w = out[u]
        while w:
            low = w & -w
            incoming[low.bit_length() - 1] |= 1 << u
            w ^= low
    remaining = (1 << n) - 1
    while remaining:
        progressed = False
        for v in range(n):
            if remaining >> v & 1 and not incoming[v] & remaining:
                remaining &= ~(1 << v)
                progressed = True
        if not progressed:
            return False
    return True


def _reach(out: list[int], v: int) -> int:
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        w = frontier
        while w:
            low = w & -w
            nxt |= out[low.bit_length() - 1]
            w ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def _is_totally_cyclic(out: list[int]) -> bool:
    reach = [_reach(out, v) for v in range(len(out))]
    for u in range(len(out)):
        w = out[u]
        while w:
            low = w & -w
            if not reach[low.bit_length() - 1] >> u & 1:
                return False
            w ^= low
    return True


def count_acyclic_orientations(g: Multigraph, limit: int = ORIENTATION_LIMIT) -> int:
    if g.loops():
        return 0
    return sum(_is_acyclic(o) for o in _orientations(g, limit))


def count_totally_cyclic_orientations(g: Multigraph, limit: int = ORIENTATION_LIMIT) -> int:
    # both orientations of a loop lie on a directed cycle
    return (1 << g.loops()) * sum(_is_totally_cyclic(o) for o in _orientations(g, limit))


def count_proper_colorings(g: Multigraph, k: int) -> int:
    """Brute-force chromatic oracle for small graphs."""
    if any(u == v for u, v in g.edges):
        return 0
    count = 0
    n = g.vertices
    for code in range(k ** n):
        colors = []
        for _ in range(n):
            colors.append(code % k)
            code //= k
        if all(colors[u] != colors[v] for u, v in g.edges):
            count += 1
    return count


def chromatic_eval(g: Multigraph, k, poly=None) -> Fraction:
    """chi_G(k) = (-1)^{r(E)} k^{c(G)} T_G(1 - k, 0)."""
    from .tutte import tutte_polynomial

    k = Fraction(k)
    if poly is None:
        poly = tutte_polynomial(graphic_matroid(g))
    r = g.vertices - components(g)
    return (-1) ** r * k ** components(g) * poly.evaluate(1 - k, 0)


def require_simple_cubic_girth5(g: Multigraph) -> None:
    if not is_k_regular(g, 3) or girth(g) < 5:
        raise GraphError("graph is not 3-regular with girth at least 5")
