"""Tutte polynomials: exact storage and three independent engines.

* ``tutte_by_subsets``  - rank-generating expansion over all 2^m subsets;
* ``tutte_by_deletion_contraction`` - recursion on non-loop, non-coloop elements,
  memoized on graph shapes for graphic matroids;
* ``tutte_by_activities`` - internal/external activity tallies over the bases.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from . import canonical
from .graph import GraphicMatroid, Multigraph, components
from .matroid import (
    Matroid,
    ResourceLimitError,
    elements_of,
    enumerate_bases,
    fundamental_circuit,
    fundamental_cocircuit,
    popcount,
)
from .upoly import RationalPoly

DEFAULT_MAX_BITS = 26
DEFAULT_NODE_BUDGET = 5_000_000


def max_subset_bits() -> int:
    return int(os.environ.get("TUTTE_MAX_BITS", DEFAULT_MAX_BITS))


def node_budget() -> int:
    return int(os.environ.get("TUTTE_NODE_BUDGET", DEFAULT_NODE_BUDGET))


class TuttePolynomial:
    """Dense coefficient matrix ``t[i][j]`` of x^i y^j, shape (r+1) x (m-r+1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Sequence[int]]):
        rows = [tuple(int(c) for c in row) for row in coeffs]
        if not rows or len({len(r) for r in rows}) != 1 or not rows[0]:
            raise ValueError("coefficient matrix must be a non-empty rectangle")
        self.coeffs: tuple[tuple[int, ...], ...] = tuple(rows)

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], int], rank: int, nullity: int) -> "TuttePolynomial":
        mat = [[0] * (nullity + 1) for _ in range(rank + 1)]
        for (i, j), c in terms.items():
            if c:
                if i > rank or j > nullity:
                    raise ValueError(f"term x^{i} y^{j} outside shape ({rank}, {nullity})")
                mat[i][j] = c
        return cls(mat)

    @property
    def rows(self) -> int:
        return len(self.coeffs)

    @property
    def cols(self) -> int:
        return len(self.coeffs[0])

    def coefficient(self, i: int, j: int) -> int:
        if 0 <= i < self.rows and 0 <= j < self.cols:
            return self.coeffs[i][j]
        return 0

    def terms(self) -> dict[tuple[int, int], int]:
        return {(i, j): c for i, row in enumerate(self.coeffs) for j, c in enumerate(row) if c}

    def __eq__(self, other) -> bool:
        return isinstance(other, TuttePolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TuttePolynomial({self.to_text()})"

    def transpose(self) -> "TuttePolynomial":
        return TuttePolynomial(list(zip(*self.coeffs)))

    def __mul__(self, other: "TuttePolynomial") -> "TuttePolynomial":
        out: dict[tuple[int, int], int] = {}
        for (i, j), a in self.terms().items():
            for (k, l), b in other.terms().items():
                out[i + k, j + l] = out.get((i + k, j + l), 0) + a * b
        return TuttePolynomial.from_terms(out, self.rows + other.rows - 2, self.cols + other.cols - 2)

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        acc = Fraction(0)
        for row in reversed(self.coeffs):
            inner = Fraction(0)
            for c in reversed(row):
                inner = inner * y + c
            acc = acc * x + inner
        return acc

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "coeffs": [[str(c) for c in row] for row in self.coeffs],
        }

    @classmethod
    def from_json(cls, d: dict) -> "TuttePolynomial":
        poly = cls([[int(c) for c in row] for row in d["coeffs"]])
        if poly.rows != d["rows"] or poly.cols != d["cols"]:
            raise ValueError("declared shape does not match coefficient matrix")
        return poly

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def _monomials(self, var_x: str, var_y: str, pow_fmt: str) -> list[str]:
        out = []
        for i in range(self.rows - 1, -1, -1):
            for j in range(self.cols):
                c = self.coeffs[i][j]
                if not c:
                    continue
                mono = ""
                if i:
                    mono += var_x + (pow_fmt.format(i) if i > 1 else "")
                if j:
                    mono += var_y + (pow_fmt.format(j) if j > 1 else "")
                if not mono:
                    out.append(str(c))
                else:
                    out.append(mono if c == 1 else f"{c}{mono}")
        return out or ["0"]

    def to_text(self) -> str:
        return " + ".join(self._monomials("x", "y", "^{}"))

    def to_latex(self) -> str:
        return " + ".join(self._monomials("x", "y", "^{{{}}}"))


# --- engine 1: subset expansion -------------------------------------------


def _from_shifted_counts(counts: dict[tuple[int, int], int], rank: int, nullity: int) -> TuttePolynomial:
    """Expand sum c[z, n] (x-1)^z (y-1)^n into the x, y monomial basis."""
    terms: dict[tuple[int, int], int] = {}
    for (z, n), c in counts.items():
        for i in range(z + 1):
            a = c * comb(z, i) * (-1) ** (z - i)
            for j in range(n + 1):
                terms[i, j] = terms.get((i, j), 0) + a * comb(n, j) * (-1) ** (n - j)
    return TuttePolynomial.from_terms(terms, rank, nullity)


def tutte_by_subsets(m: Matroid, max_bits: int | None = None) -> TuttePolynomial:
    limit = max_subset_bits() if max_bits is None else max_bits
    if m.size > limit:
        raise ResourceLimitError(f"subset expansion refused for m={m.size} > {limit} bits")
    r = m.full_rank
    counts: dict[tuple[int, int], int] = {}
    rank = m.rank
    for mask in range(1 << m.size):
        ra = rank(mask)
        key = (r - ra, mask.bit_count() - ra)
        counts[key] = counts.get(key, 0) + 1
    return _from_shifted_counts(counts, r, m.size - r)


# --- engine 2: deletion-contraction ---------------------------------------

Terms = dict[tuple[int, int], int]


def _add(a: Terms, b: Terms) -> Terms:
    out = dict(a)
    for k, c in b.items():
        out[k] = out.get(k, 0) + c
    return out


def _shift(a: Terms, di: int, dj: int) -> Terms:
    return {(i + di, j + dj): c for (i, j), c in a.items()}


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise ResourceLimitError(f"deletion-contraction exceeded {self.limit} recursion nodes")


def _delcon_oracle(m: Matroid, remaining: int, contracted: int, budget: _Budget) -> Terms:
    budget.tick()
    rank = m.rank
    base = rank(contracted)
    top = rank(remaining | contracted)
    n_loops = n_coloops = 0
    for e in elements_of(remaining):
        bit = 1 << e
        if rank(contracted | bit) == base:
            n_loops += 1
        elif rank((remaining & ~bit) | contracted) < top:
            n_coloops += 1
        else:
            rest = remaining & ~bit
            deleted = _delcon_oracle(m, rest, contracted, budget)
            contracted_part = _delcon_oracle(m, rest, contracted | bit, budget)
            return _add(deleted, contracted_part)
    return {(n_coloops, n_loops): 1}


def _strip(vertices: int, edges: list[tuple[int, int]]) -> tuple[int, list[tuple[int, int]], int]:
    """Drop loops (counted) and isolated vertices, compacting labels."""
    loops = 0
    kept = []
    used: set[int] = set()
    for u, v in edges:
        if u == v:
            loops += 1
        else:
            kept.append((u, v))
            used.add(u)
            used.add(v)
    label = {v: i for i, v in enumerate(sorted(used))}
    return len(label), [(label[u], label[v]) for u, v in kept], loops


def _is_bridge(vertices: int, edges: list[tuple[int, int]], idx: int) -> bool:
    u, v = edges[idx]
    adj: list[list[int]] = [[] for _ in range(vertices)]
    for k, (a, b) in enumerate(edges):
        if k != idx:
            adj[a].append(b)
            adj[b].append(a)
    seen = {u}
    stack = [u]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b == v:
                return False
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return True


def _contract_edge(edges: list[tuple[int, int]], idx: int) -> list[tuple[int, int]]:
    u, v = edges[idx]
    merge = lambda a: u if a == v else a  # noqa: E731
    return [(merge(a), merge(b)) for k, (a, b) in enumerate(edges) if k != idx]


class GraphTutteMemo:
    """Memo table for graph Tutte polynomials keyed by ``canonical.memo_key``.

    The full relabeled edge list is the key, so a dict hit is an exact
    match, never a hash collision.
    """

    def __init__(self):
        self.table: dict[tuple, Terms] = {}
        self.hits = 0

    def __len__(self):
        return len(self.table)


_shared_memo = GraphTutteMemo()


def _delcon_graph(vertices: int, edges: list[tuple[int, int]], memo: GraphTutteMemo, budget: _Budget) -> Terms:
    vertices, edges, loops = _strip(vertices, edges)
    if not edges:
        return {(0, loops): 1}
    key = canonical.memo_key(vertices, edges)
    found = memo.table.get(key)
    if found is None:
        budget.tick()
        # work on the relabeled graph so the pivot does not depend on input labels
        kv, kedges = key[0], list(key[1])
        if _is_bridge(kv, kedges, 0):
            found = _shift(_delcon_graph(kv, _contract_edge(kedges, 0), memo, budget), 1, 0)
        else:
            found = _add(
                _delcon_graph(kv, kedges[1:], memo, budget),
                _delcon_graph(kv, _contract_edge(kedges, 0), memo, budget),
            )
        memo.table[key] = found
    else:
        memo.hits += 1
    return _shift(found, 0, loops) if loops else found


def graph_tutte(g: Multigraph, memo: GraphTutteMemo | None = None,
                budget: int | None = None) -> TuttePolynomial:
    memo = _shared_memo if memo is None else memo
    limit = node_budget() if budget is None else budget
    terms = _delcon_graph(g.vertices, list(g.edges), memo, _Budget(limit))
    r = g.vertices - components(g)
    return TuttePolynomial.from_terms(terms, r, g.num_edges - r)


def tutte_by_deletion_contraction(m: Matroid, budget: int | None = None,
                                  memo: GraphTutteMemo | None = None) -> TuttePolynomial:
    if isinstance(m, GraphicMatroid):
        return graph_tutte(m.graph, memo, budget)
    terms = _delcon_oracle(m, m.full, 0, _Budget(node_budget() if budget is None else budget))
    r = m.full_rank
    return TuttePolynomial.from_terms(terms, r, m.size - r)


# --- engine 3: basis activities -------------------------------------------


@dataclass(frozen=True)
class ActivityTally:
    basis: int
    internal: int
    external: int
    order: tuple[int, ...]


def activity_tallies(m: Matroid, order: Sequence[int] | None = None,
                     limit: int = 24) -> list[ActivityTally]:
    """Activities of every basis.  ``order`` lists elements smallest first."""
    order = tuple(range(m.size)) if order is None else tuple(order)
    if sorted(order) != list(range(m.size)):
        raise ValueError("order must be a permutation of the ground set")
    pos = {e: k for k, e in enumerate(order)}

    def smallest(mask: int) -> int:
        return min(elements_of(mask), key=pos.__getitem__)

    out = []
    for basis in enumerate_bases(m, limit=limit):
        internal = sum(
            smallest(fundamental_cocircuit(m, basis, e)) == e for e in elements_of(basis)
        )
        external = sum(
            smallest(fundamental_circuit(m, basis, f)) == f for f in elements_of(m.full & ~basis)
        )
        out.append(ActivityTally(basis, internal, external, order))
    return out


def tutte_by_activities(m: Matroid, order: Sequence[int] | None = None,
                        limit: int = 24) -> TuttePolynomial:
    terms: Terms = {}
    for t in activity_tallies(m, order, limit):
        terms[t.internal, t.external] = terms.get((t.internal, t.external), 0) + 1
    r = m.full_rank
    return TuttePolynomial.from_terms(terms, r, m.size - r)


# --- front door -----------------------------------------------------------

ENGINES = {
    "subsets": tutte_by_subsets,
    "delcon": tutte_by_deletion_contraction,
    "activities": tutte_by_activities,
}


class EngineMismatch(RuntimeError):
    pass


def tutte_polynomial(m: Matroid, engine: str = "auto") -> TuttePolynomial:
    """Compute T_M.  ``auto`` uses deletion-contraction; ``all`` cross-checks every engine."""
    if engine == "auto":
        return tutte_by_deletion_contraction(m)
    if engine == "all":
        results = {name: fn(m) for name, fn in ENGINES.items()}
        first = results["subsets"]
        bad = [name for name, p in results.items() if p != first]
        if bad:
            raise EngineMismatch(f"engines disagree: {', '.join(bad)} differ from subsets")
        return first
    try:
        return ENGINES[engine](m)
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}") from None


def evaluate(p: TuttePolynomial, x, y) -> Fraction:
    return p.evaluate(x, y)


def restrict_to_segment(p: TuttePolynomial, total) -> RationalPoly:
    """f(t) = T(t, total - t)."""
    total = Fraction(total)
    if total <= 0:
        raise ValueError("segment parameter must be positive")
    t = RationalPoly.x()
    s = RationalPoly([total, -1])
    x_pows = [RationalPoly([1])]
    for _ in range(p.rows - 1):
        x_pows.append(x_pows[-1] * t)
    y_pows = [RationalPoly([1])]
    for _ in range(p.cols - 1):
        y_pows.append(y_pows[-1] * s)
    f = RationalPoly()
    for (i, j), c in p.terms().items():
        f = f + c * x_pows[i] * y_pows[j]
    return f


# --- coefficient identities ------------------------------------------------


def check_coefficient_relations(p: TuttePolynomial, m: Matroid, instance=None):
    """Linear relations among the t_ij, each clause reported with offending (i, j).

    Clauses 2-3 need M loopless and coloopless; the degree clauses apply
    when the corresponding packing certificate holds.
    """
    from .matroid import coloops, loops
    from .packing import packing
    from .reports import FAIL, PASS, CheckReport

    r, size = m.full_rank, m.size
    k = size - r
    terms = p.terms()
    clauses: dict[str, list] = {}
    clauses["nonnegative"] = [ij for ij, c in terms.items() if c < 0]
    clauses["degree_bounds"] = [ij for ij in terms if ij[0] > r or ij[1] > k]
    if size >= 2:
        clauses["t10_eq_t01"] = [] if p.coefficient(1, 0) == p.coefficient(0, 1) else [(1, 0), (0, 1)]
    skipped = []
    if loops(m) or coloops(m):
        skipped = ["corner_ones", "corner_rows"]
    else:
        corner = []
        if p.coefficient(r, 0) != 1:
            corner.append((r, 0))
        if p.coefficient(0, k) != 1:
            corner.append((0, k))
        clauses["corner_ones"] = corner
        clauses["corner_rows"] = [ij for ij in terms if (ij[0] == r and ij[1] > 0) or (ij[1] == k and ij[0] > 0)]
    s = packing(m)
    if s.disjoint.holds:
        clauses["disjoint_max_degree"] = [ij for ij in terms if ij[0] + ij[1] > k]
    if s.union.holds:
        clauses["union_max_degree"] = [ij for ij in terms if ij[0] + ij[1] > r]
    bad = {name: [list(ij) for ij in sorted(v)] for name, v in clauses.items() if v}
    values = {name: not v for name, v in clauses.items()}
    for name in skipped:
        values[name] = "precondition unmet"
    return CheckReport(
        "relations", instance if instance is not None else m.descriptor(),
        FAIL if bad else PASS, values=values, witness=bad or None,
    )
