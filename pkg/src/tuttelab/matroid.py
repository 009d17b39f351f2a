"""Matroids over the ground set {0, ..., m-1} with bitmask subsets.

Every matroid is a rank oracle.  Constructions (dual, minors, direct sums,
series/parallel doubling, relaxation, Catalan lattice-path matroids) wrap
their children and translate masks, so they compose freely.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

MAX_ORACLE_BITS = 64
EXCHANGE_CHECK_LIMIT = 20


class MatroidError(ValueError):
    """Invalid matroid construction or query."""


class ResourceLimitError(RuntimeError):
    """A computation was refused because it exceeds a configured bound."""


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        if e < 0:
            raise MatroidError(f"negative element index {e}")
        mask |= 1 << e
    return mask


def elements_of(mask: int) -> list[int]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def subsets_of_size(m: int, k: int) -> Iterator[int]:
    """Masks of all k-subsets of {0..m-1} in lexicographic order of elements."""
    for combo in itertools.combinations(range(m), k):
        yield mask_of(combo)


class Matroid:
    """Base class.  Subclasses implement ``_rank`` and ``descriptor``."""

    def __init__(self, size: int):
        if size < 0 or size > MAX_ORACLE_BITS:
            raise MatroidError(f"ground set size {size} outside 0..{MAX_ORACLE_BITS}")
        self.size = size
        self.full = (1 << size) - 1
        self._cache: dict[int, int] = {}

    # concurrent callers may both compute a value; they always agree
    def rank(self, mask: int) -> int:
        r = self._cache.get(mask)
        if r is None:
            if mask < 0 or mask & ~self.full:
                raise MatroidError(f"subset {mask:#x} has elements outside 0..{self.size - 1}")
            r = self._rank(mask)
            self._cache[mask] = r
        return r

    def _rank(self, mask: int) -> int:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    @property
    def full_rank(self) -> int:
        return self.rank(self.full)

    def is_independent(self, mask: int) -> bool:
        return self.rank(mask) == popcount(mask)

    def corank(self, mask: int) -> int:
        """z(A) = r(E) - r(A)."""
        return self.full_rank - self.rank(mask)

    def nullity(self, mask: int) -> int:
        """n(A) = |A| - r(A)."""
        return popcount(mask) - self.rank(mask)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(m={self.size}, r={self.full_rank})"


class UniformMatroid(Matroid):
    def __init__(self, r: int, n: int):
        if not 0 <= r <= n:
            raise MatroidError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
        super().__init__(n)
        self.r = r

    def _rank(self, mask):
        return min(popcount(mask), self.r)

    def descriptor(self):
        return {"type": "uniform", "r": self.r, "n": self.size}


class BasesMatroid(Matroid):
    """Matroid given by an explicit list of bases.

    The exchange axiom is checked when ``m <= EXCHANGE_CHECK_LIMIT``;
    larger inputs are accepted with ``verified = False``.
    """

    def __init__(self, m: int, bases: Iterable[Iterable[int]]):
        super().__init__(m)
        masks = sorted({mask_of(b) for b in bases})
        if not masks:
            raise MatroidError("a matroid needs at least one basis")
        sizes = {popcount(b) for b in masks}
        if len(sizes) != 1:
            raise MatroidError(f"bases are not equicardinal: sizes {sorted(sizes)}")
        for b in masks:
            if b & ~self.full:
                raise MatroidError("basis element out of range")
        self.bases = masks
        self.verified = False
        if m <= EXCHANGE_CHECK_LIMIT:
            _check_exchange(masks)
            self.verified = True

    def _rank(self, mask):
        return max(popcount(mask & b) for b in self.bases)

    def descriptor(self):
        return {
            "type": "bases",
            "m": self.size,
            "bases": [elements_of(b) for b in self.bases],
        }


def _check_exchange(bases: Sequence[int]) -> None:
    family = set(bases)
    for b1 in bases:
        for b2 in bases:
            for x in elements_of(b1 & ~b2):
                without = b1 & ~(1 << x)
                if not any((without | (1 << y)) in family for y in elements_of(b2 & ~b1)):
                    raise MatroidError(
                        f"basis exchange fails for {elements_of(b1)}, {elements_of(b2)} at {x}"
                    )


class DualMatroid(Matroid):
    def __init__(self, child: Matroid):
        super().__init__(child.size)
        self.child = child

    def _rank(self, mask):
        c = self.child
        return popcount(mask) - c.full_rank + c.rank(c.full & ~mask)

    def descriptor(self):
        return {"type": "dual", "child": self.child.descriptor()}


class MinorMatroid(Matroid):
    """M \\ D / C, re-indexed onto the surviving elements in increasing order.

    ``index_map[i]`` is the child element carried by element ``i``.
    """

    def __init__(self, child: Matroid, deleted: int = 0, contracted: int = 0):
        if deleted & contracted:
            raise MatroidError("deleted and contracted sets overlap")
        if (deleted | contracted) & ~child.full:
            raise MatroidError("minor set has elements outside the ground set")
        keep = child.full & ~(deleted | contracted)
        self.index_map = elements_of(keep)
        super().__init__(len(self.index_map))
        self.child = child
        self.deleted = deleted
        self.contracted = contracted
        self._base = child.rank(contracted)

    def lift(self, mask: int) -> int:
        out = 0
        for i, e in enumerate(self.index_map):
            if mask >> i & 1:
                out |= 1 << e
        return out

    def _rank(self, mask):
        return self.child.rank(self.lift(mask) | self.contracted) - self._base

    def descriptor(self):
        d = {"type": "minor", "child": self.child.descriptor()}
        if self.deleted and not self.contracted:
            d = {"type": "delete", "child": self.child.descriptor(),
                 "elements": elements_of(self.deleted)}
        elif self.contracted and not self.deleted:
            d = {"type": "contract", "child": self.child.descriptor(),
                 "elements": elements_of(self.contracted)}
        else:
            d["delete"] = elements_of(self.deleted)
            d["contract"] = elements_of(self.contracted)
        return d


class DirectSum(Matroid):
    def __init__(self, children: Sequence[Matroid]):
        self.children = list(children)
        self.offsets = []
        total = 0
        for c in self.children:
            self.offsets.append(total)
            total += c.size
        super().__init__(total)

    def _rank(self, mask):
        return sum(c.rank((mask >> off) & c.full) for c, off in zip(self.children, self.offsets))

    def descriptor(self):
        return {"type": "direct_sum", "children": [c.descriptor() for c in self.children]}


def _pair_split(mask: int, m: int) -> tuple[int, int]:
    """Child masks of elements whose pair {2e, 2e+1} is fully / half present."""
    both = half = 0
    for e in range(m):
        bits = (mask >> (2 * e)) & 3
        if bits == 3:
            both |= 1 << e
        elif bits:
            half |= 1 << e
    return both, half


class Stretch2(Matroid):
    """Each element e becomes the series pair {2e, 2e+1}.

    Circuits are the doubled circuits of the child, which gives
    r(A) = r_child(P) + |P| + |Q| with P the fully present pairs and Q the
    half present ones.
    """

    def __init__(self, child: Matroid):
        super().__init__(2 * child.size)
        self.child = child

    def _rank(self, mask):
        both, half = _pair_split(mask, self.child.size)
        return self.child.rank(both) + popcount(both) + popcount(half)

    def descriptor(self):
        return {"type": "stretch2", "child": self.child.descriptor()}


class Thicken2(Matroid):
    """Each element e becomes the parallel pair {2e, 2e+1}."""

    def __init__(self, child: Matroid):
        super().__init__(2 * child.size)
        self.child = child

    def _rank(self, mask):
        both, half = _pair_split(mask, self.child.size)
        return self.child.rank(both | half)

    def descriptor(self):
        return {"type": "thicken2", "child": self.child.descriptor()}


class Relaxation(Matroid):
    """Relax a circuit-hyperplane H: H becomes a basis, no other rank changes."""

    def __init__(self, child: Matroid, hyperplane: int):
        super().__init__(child.size)
        r = child.full_rank
        if hyperplane & ~child.full:
            raise MatroidError("hyperplane has elements outside the ground set")
        if popcount(hyperplane) != r or child.rank(hyperplane) != r - 1:
            raise MatroidError("set is not a circuit-hyperplane (size or rank mismatch)")
        for e in elements_of(hyperplane):
            if not child.is_independent(hyperplane & ~(1 << e)):
                raise MatroidError("set is not a circuit: a proper subset is dependent")
        self.child = child
        self.hyperplane = hyperplane

    def _rank(self, mask):
        r = self.child.rank(mask)
        return r + 1 if mask == self.hyperplane else r

    def descriptor(self):
        return {"type": "relax", "child": self.child.descriptor(),
                "hyperplane": elements_of(self.hyperplane)}


class CatalanMatroid(Matroid):
    """Lattice-path matroid whose bases are up-step sets of Dyck paths.

    Element ``i`` stands for step position ``i + 1`` (untrimmed) or
    ``i + 2`` (trimmed, where the always-up first step and always-down
    last step are removed).
    """

    def __init__(self, n: int, trimmed: bool = False):
        if n < 1 or (trimmed and n < 2):
            raise MatroidError(f"catalan matroid needs n >= {2 if trimmed else 1}, got {n}")
        self.n = n
        self.trimmed = trimmed
        super().__init__(2 * n - 2 if trimmed else 2 * n)

    def _rank(self, mask):
        # greedy: the k-th up-step of a Dyck path sits at a position in [k, 2k-1]
        shift = 2 if self.trimmed else 1
        slot = count = 0
        for e in elements_of(mask):
            pos = e + shift
            j = max(slot + 1, (pos + 2) // 2)
            if j <= pos and j <= self.n:
                slot = j
                count += 1
        return count

    def descriptor(self):
        return {"type": "catalan", "n": self.n, "trimmed": self.trimmed}


# --- constructions -------------------------------------------------------


def uniform(r: int, n: int) -> UniformMatroid:
    return UniformMatroid(r, n)


def dualize(m: Matroid) -> Matroid:
    return DualMatroid(m)


def delete(m: Matroid, elements: Iterable[int] | int) -> MinorMatroid:
    s = elements if isinstance(elements, int) else mask_of(elements)
    return MinorMatroid(m, deleted=s)


def contract(m: Matroid, elements: Iterable[int] | int) -> MinorMatroid:
    s = elements if isinstance(elements, int) else mask_of(elements)
    return MinorMatroid(m, contracted=s)


def direct_sum(*children: Matroid) -> DirectSum:
    return DirectSum(children)


def stretch2(m: Matroid) -> Stretch2:
    return Stretch2(m)


def thicken2(m: Matroid) -> Thicken2:
    return Thicken2(m)


def relax(m: Matroid, hyperplane: Iterable[int] | int) -> Relaxation:
    h = hyperplane if isinstance(hyperplane, int) else mask_of(hyperplane)
    return Relaxation(m, h)


def catalan_matroid(n: int, trimmed: bool = False) -> CatalanMatroid:
    return CatalanMatroid(n, trimmed)


def rank(m: Matroid, elements: Iterable[int] | int) -> int:
    return m.rank(elements if isinstance(elements, int) else mask_of(elements))


# --- recognizers and enumeration ------------------------------------------


def loops(m: Matroid) -> int:
    return mask_of(e for e in range(m.size) if m.rank(1 << e) == 0)


def coloops(m: Matroid) -> int:
    r = m.full_rank
    return mask_of(e for e in range(m.size) if m.rank(m.full & ~(1 << e)) == r - 1)


def is_paving(m: Matroid) -> bool:
    """Every (r-1)-subset independent, i.e. all circuits have size >= r."""
    k = m.full_rank - 1
    if k <= 0:
        return True
    return all(m.rank(s) == k for s in subsets_of_size(m.size, k))


def enumerate_bases(m: Matroid, limit: int = 24) -> list[int]:
    if m.size > limit:
        raise ResourceLimitError(f"basis enumeration refused for m={m.size} > {limit}")
    r = m.full_rank
    return sorted(s for s in subsets_of_size(m.size, r) if m.rank(s) == r)


def fundamental_circuit(m: Matroid, basis: int, f: int) -> int:
    """The unique circuit in B + f (f outside B)."""
    r = popcount(basis)
    grown = basis | (1 << f)
    return (1 << f) | mask_of(
        e for e in elements_of(basis) if m.rank(grown & ~(1 << e)) == r
    )


def fundamental_cocircuit(m: Matroid, basis: int, e: int) -> int:
    """The unique cocircuit disjoint from B - e (e in B)."""
    r = popcount(basis)
    shrunk = basis & ~(1 << e)
    return (1 << e) | mask_of(
        f for f in elements_of(m.full & ~basis) if m.rank(shrunk | (1 << f)) == r
    )
