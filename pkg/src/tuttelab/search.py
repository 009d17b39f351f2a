"""Corpus enumeration and the two-bases Merino-Welsh search.

Corpus specs, separated by ``;``:

    families              every built-in family at its default range
    catalog               the built-in catalog
    multigraphs:K         connected multigraphs with 1..K edges, loops allowed
    wheel:2..8            one family over a parameter range
    Knm:2..5              complete bipartite K_{n,m} with lo <= n <= m <= hi
    uniform:1..5          every U_{r,n} with lo <= n <= hi
    @path                 JSON list (or JSON lines) of descriptors or shorthands
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator

import networkx as nx

from . import canonical
from .catalog import DescriptorError, build, catalog, resolve, shorthand
from .matroid import Matroid
from .packing import packing
from .reports import FAIL, PASS, SKIP, CheckReport, sort_reports
from .tutte import tutte_polynomial

log = logging.getLogger(__name__)

Instance = tuple[str, dict]

FAMILY_RANGES = {
    "wheel": (2, 8),
    "whirl": (2, 8),
    "Kn": (3, 7),
    "Knm": (2, 5),
    "lattice": (2, 3),
    "cycle": (2, 8),
    "catalan": (2, 8),
    "uniform": (1, 8),
}


class CorpusError(ValueError):
    pass


# --- multigraph enumeration --------------------------------------------------

Shape = tuple[int, tuple[tuple[int, int], ...]]


def _nx(shape: Shape) -> nx.Graph:
    vertices, edges = shape
    g = nx.Graph()
    g.add_nodes_from(range(vertices))
    for u, v in edges:
        if g.has_edge(u, v):
            g[u][v]["k"] += 1
        else:
            g.add_edge(u, v, k=1)
    return g


_same_mult = nx.algorithms.isomorphism.numerical_edge_match("k", 1)


class _ShapeSet:
    """Isomorphism classes of loopless multigraphs.

    A refinement key catches most repeats cheaply (equal keys mean
    isomorphic); anything else is compared exactly inside its invariant bucket.
    """

    def __init__(self):
        self.keys: set = set()
        self.buckets: dict[tuple, list[nx.Graph]] = {}
        self.shapes: list[Shape] = []

    def add(self, shape: Shape) -> bool:
        key = canonical.memo_key(*shape)
        if key in self.keys:
            return False
        self.keys.add(key)
        bucket = self.buckets.setdefault(canonical.invariant(*shape), [])
        g = _nx(shape)
        if any(nx.is_isomorphic(g, h, edge_match=_same_mult) for h in bucket):
            return False
        bucket.append(g)
        self.shapes.append(key)
        return True


def connected_multigraph_levels(max_edges: int) -> list[list[Shape]]:
    """levels[k] lists one representative per class of connected loopless multigraphs with k edges.

    Level k grows from level k-1 by adding an edge between existing
    vertices or a pendant edge to a new vertex; every connected graph
    arises this way (drop a cycle edge, or a leaf).
    """
    levels: list[list[Shape]] = [[(1, ())]]
    for _ in range(max_edges):
        seen = _ShapeSet()
        for vertices, edges in levels[-1]:
            for u in range(vertices):
                for v in range(u + 1, vertices):
                    seen.add((vertices, tuple(sorted(edges + ((u, v),)))))
                seen.add((vertices + 1, tuple(sorted(edges + ((u, vertices),)))))
        levels.append(seen.shapes)
    return levels


def multigraph_corpus(max_edges: int) -> Iterator[Instance]:
    """Connected multigraphs with 1..max_edges edges; loops sit on vertex 0.

    Where the loops sit does not change the cycle matroid, so one
    placement per loop count is enough.
    """
    levels = connected_multigraph_levels(max_edges)
    for total in range(1, max_edges + 1):
        for loops in range(total + 1):
            for idx, (vertices, edges) in enumerate(levels[total - loops]):
                all_edges = [list(e) for e in edges] + [[0, 0]] * loops
                label = f"mg{total}:{total - loops}+{loops}L#{idx}"
                yield label, {"type": "graphic", "graph": {"vertices": vertices, "edges": all_edges}}


# --- corpus specs ------------------------------------------------------------------


def _family_range(name: str, lo: int, hi: int) -> Iterator[Instance]:
    if lo > hi:
        raise CorpusError(f"empty range {lo}..{hi} for {name}")
    if name == "Knm":
        pairs = [(n, m) for n in range(lo, hi + 1) for m in range(n, hi + 1)]
        for n, m in pairs:
            yield f"Knm:{n},{m}", shorthand(f"Knm:{n},{m}")
    elif name == "uniform":
        for n in range(lo, hi + 1):
            for r in range(n + 1):
                yield f"uniform:{r},{n}", shorthand(f"uniform:{r},{n}")
    else:
        for n in range(lo, hi + 1):
            yield f"{name}:{n}", shorthand(f"{name}:{n}")


def _from_file(path: str) -> Iterator[Instance]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus file {path!r}: {exc}") from exc
    try:
        items = json.loads(text)
        if not isinstance(items, list):
            items = [items]
    except json.JSONDecodeError:
        try:
            items = [json.loads(line) for line in text.splitlines() if line.strip()]
        except json.JSONDecodeError as exc:
            raise CorpusError(f"corpus file {path!r} is neither JSON nor JSON lines: {exc}") from exc
    for i, item in enumerate(items):
        if isinstance(item, str):
            yield item, resolve(item)
        elif isinstance(item, dict):
            yield f"{path}#{i}", item
        else:
            raise CorpusError(f"corpus item {i} in {path!r} is not a descriptor")


def parse_corpus(spec: str) -> list[Instance]:
    out: list[Instance] = []
    for part in (p.strip() for p in spec.split(";")):
        if not part:
            continue
        try:
            if part == "families":
                for name, (lo, hi) in FAMILY_RANGES.items():
                    out.extend(_family_range(name, lo, hi))
            elif part == "catalog":
                out.extend((e.id, e.descriptor) for e in catalog())
            elif part.startswith("@"):
                out.extend(_from_file(part[1:]))
            elif part.startswith("multigraphs:"):
                k = int(part.split(":", 1)[1])
                if k < 1:
                    raise CorpusError("multigraph edge bound must be positive")
                out.extend(multigraph_corpus(k))
            elif ".." in part:
                name, _, rng = part.partition(":")
                lo, _, hi = rng.partition("..")
                if name not in FAMILY_RANGES:
                    raise CorpusError(f"unknown family {name!r}")
                out.extend(_family_range(name, int(lo), int(hi)))
            else:
                out.append((part, resolve(part)))
        except ValueError as exc:
            if isinstance(exc, CorpusError):
                raise
            raise CorpusError(f"malformed corpus spec {part!r}: {exc}") from exc
    if not out:
        raise CorpusError("corpus spec selects no instances")
    return out


# --- the check itself ------------------------------------------------------------


def conjecture_check(m: Matroid, label: str, descriptor: dict) -> CheckReport:
    """Packing certificate first; the inequality counts only under the hypothesis."""
    s = packing(m)
    t = tutte_polynomial(m)
    a, b, c = t.evaluate(2, 0), t.evaluate(0, 2), t.evaluate(1, 1)
    values = {"label": label, "packing": s.verdict, "T(2,0)": a, "T(0,2)": b, "T(1,1)": c}
    if not s.in_class:
        return CheckReport("conjecture-new", descriptor, SKIP, values=values)
    if max(a, b) >= c:
        return CheckReport("conjecture-new", descriptor, PASS, values=values)
    log.error("counterexample to the two-bases conjecture: %s", label)
    return CheckReport(
        "conjecture-new", descriptor, FAIL, values=values,
        witness={"counterexample": True, "descriptor": descriptor, "polynomial": t.to_json(),
                 "disjoint": s.disjoint.witness(), "union": s.union.witness()},
    )


def _run_one(item: Instance) -> CheckReport:
    label, desc = item
    return conjecture_check(build(desc), label, desc)


def conjecture_search(instances: Iterable[Instance], workers: int = 1) -> list[CheckReport]:
    """Reports sorted by instance id, identical for any worker count."""
    items = list(instances)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_one, items, chunksize=64))
    else:
        reports = [_run_one(item) for item in items]
    return sort_reports(reports)


def counterexamples(reports: Iterable[CheckReport]) -> list[CheckReport]:
    return [r for r in reports if r.verdict == FAIL]


__all__ = [
    "CorpusError", "DescriptorError", "FAMILY_RANGES", "conjecture_check", "conjecture_search",
    "connected_multigraph_levels", "counterexamples", "multigraph_corpus", "parse_corpus",
]
