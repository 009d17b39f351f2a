"""Cheap relabelings of multigraphs for memo keys and corpus deduplication.

``memo_key`` relabels vertices by color refinement (ties broken by the
original index) and returns the sorted edge list.  Two graphs with equal
keys are isomorphic, so the key is safe for memoizing isomorphism
invariants; isomorphic graphs may still receive different keys.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

Edge = tuple[int, int]


def _multiplicities(edges: Sequence[Edge]) -> Counter:
    return Counter((u, v) if u <= v else (v, u) for u, v in edges)


def refine(vertices: int, edges: Sequence[Edge]) -> list[int]:
    """Stable color refinement; colors are ranks of canonical signatures."""
    mult = _multiplicities(edges)
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(vertices)]
    loops = [0] * vertices
    for (u, v), k in mult.items():
        if u == v:
            loops[u] += k
        else:
            nbrs[u].append((v, k))
            nbrs[v].append((u, k))
    sig0 = [(sum(k for _, k in nbrs[v]), loops[v]) for v in range(vertices)]
    ranks = {s: i for i, s in enumerate(sorted(set(sig0)))}
    colors = [ranks[s] for s in sig0]
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], k) for w, k in nbrs[v])))
            for v in range(vertices)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def memo_key(vertices: int, edges: Sequence[Edge]) -> tuple:
    colors = refine(vertices, edges)
    order = sorted(range(vertices), key=lambda v: (colors[v], v))
    label = {v: i for i, v in enumerate(order)}
    relabeled = sorted(
        (min(label[u], label[v]), max(label[u], label[v])) for u, v in edges
    )
    return (vertices, tuple(relabeled))


def invariant(vertices: int, edges: Sequence[Edge]) -> tuple:
    """Isomorphism invariant used to bucket graphs before exact comparison."""
    colors = refine(vertices, edges)
    edge_colors = sorted(
        (min(colors[u], colors[v]), max(colors[u], colors[v]), k)
        for (u, v), k in _multiplicities(edges).items()
    )
    return (vertices, len(edges), tuple(sorted(colors)), tuple(edge_colors))
