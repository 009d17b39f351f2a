"""Instance descriptors (JSON), family shorthands, and the built-in catalog."""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from functools import lru_cache

from . import graph as g
from .matroid import (
    BasesMatroid,
    CatalanMatroid,
    DirectSum,
    DualMatroid,
    Matroid,
    MatroidError,
    MinorMatroid,
    Relaxation,
    Stretch2,
    Thicken2,
    UniformMatroid,
    mask_of,
)


class DescriptorError(ValueError):
    pass


FANO_LINES = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
FANO_BASES = [list(b) for b in itertools.combinations(range(7), 3) if b not in FANO_LINES]


def canonical_json(desc) -> str:
    return json.dumps(desc, sort_keys=True, separators=(",", ":"))


def _child(d: dict) -> Matroid:
    if "child" not in d:
        raise DescriptorError(f"descriptor of type {d.get('type')!r} needs a 'child'")
    return build(d["child"])


def build(desc: dict) -> Matroid:
    """Construct a matroid from a JSON descriptor."""
    if not isinstance(desc, dict):
        raise DescriptorError("descriptor must be a JSON object")
    if "type" not in desc:
        if "vertices" in desc and "edges" in desc:
            return g.graphic_matroid(g.Multigraph.from_json(desc))
        raise DescriptorError("descriptor has no 'type'")
    kind = desc["type"]
    try:
        if kind == "uniform":
            return UniformMatroid(int(desc["r"]), int(desc["n"]))
        if kind == "graphic":
            return g.graphic_matroid(g.Multigraph.from_json(desc["graph"]))
        if kind == "bases":
            return BasesMatroid(int(desc["m"]), desc["bases"])
        if kind == "dual":
            return DualMatroid(_child(desc))
        if kind == "delete":
            return MinorMatroid(_child(desc), deleted=mask_of(desc["elements"]))
        if kind == "contract":
            return MinorMatroid(_child(desc), contracted=mask_of(desc["elements"]))
        if kind == "minor":
            return MinorMatroid(_child(desc), deleted=mask_of(desc.get("delete", [])),
                                contracted=mask_of(desc.get("contract", [])))
        if kind == "direct_sum":
            return DirectSum([build(c) for c in desc["children"]])
        if kind == "stretch2":
            return Stretch2(_child(desc))
        if kind == "thicken2":
            return Thicken2(_child(desc))
        if kind == "relax":
            return Relaxation(_child(desc), mask_of(desc["hyperplane"]))
        if kind == "catalan":
            return CatalanMatroid(int(desc["n"]), bool(desc.get("trimmed", False)))
        if kind == "whirl":
            return whirl(int(desc["n"]))
    except KeyError as exc:
        raise DescriptorError(f"descriptor of type {kind!r} is missing field {exc}") from exc
    except (TypeError, g.GraphError, MatroidError) as exc:
        raise DescriptorError(f"invalid {kind!r} descriptor: {exc}") from exc
    raise DescriptorError(f"unknown descriptor type {kind!r}")


class WhirlMatroid(Relaxation):
    def __init__(self, n: int):
        if n < 2:
            raise MatroidError("whirl needs n >= 2")
        super().__init__(g.graphic_matroid(g.wheel(n)), g.wheel_rim(n))
        self.n = n

    def descriptor(self):
        return {"type": "whirl", "n": self.n}


def whirl(n: int) -> WhirlMatroid:
    return WhirlMatroid(n)


def _graphic(graph: g.Multigraph) -> dict:
    return {"type": "graphic", "graph": graph.to_json()}


def _ints(arg: str, count: int) -> list[int]:
    parts = arg.split(",") if arg else []
    if len(parts) != count:
        raise DescriptorError(f"expected {count} integer parameter(s), got {arg!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise DescriptorError(f"non-integer parameter in {arg!r}") from None


def _u(r, n):
    return {"type": "uniform", "r": r, "n": n}


SHORTHANDS = {
    "uniform": (2, lambda r, n: _u(r, n)),
    "wheel": (1, lambda n: _graphic(g.wheel(n))),
    "whirl": (1, lambda n: {"type": "whirl", "n": n}),
    "catalan": (1, lambda n: {"type": "catalan", "n": n, "trimmed": True}),
    "catalan-full": (1, lambda n: {"type": "catalan", "n": n, "trimmed": False}),
    "Kn": (1, lambda n: _graphic(g.complete(n))),
    "Knm": (2, lambda n, m: _graphic(g.complete_bipartite(n, m))),
    "lattice": (1, lambda n: _graphic(g.square_lattice(n))),
    "cycle": (1, lambda n: _graphic(g.cycle(n))),
    "tree": (1, lambda n: _graphic(g.path_tree(n))),
}

NAMED = {
    "petersen": lambda: _graphic(g.petersen()),
    "octahedron": lambda: _graphic(g.octahedron()),
    "digons": lambda: _graphic(g.two_digons()),
    "fano": lambda: {"type": "bases", "m": 7, "bases": FANO_BASES},
    "loop-isthmus": lambda: {"type": "direct_sum", "children": [_u(1, 1), _u(0, 1)]},
}


def shorthand(text: str) -> dict:
    """Descriptor for a family shorthand such as ``wheel:4`` or ``Knm:3,4``."""
    name, _, arg = text.partition(":")
    if name in NAMED and not arg:
        return NAMED[name]()
    if name not in SHORTHANDS:
        raise DescriptorError(f"unknown instance shorthand {text!r}")
    count, make = SHORTHANDS[name]
    try:
        return make(*_ints(arg, count))
    except (g.GraphError, MatroidError) as exc:
        raise DescriptorError(f"{text}: {exc}") from exc


def resolve(text: str) -> dict:
    """Descriptor from a shorthand, an inline JSON document, or a JSON file path."""
    text = text.strip()
    if text.startswith("{"):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise DescriptorError(f"malformed JSON instance: {exc}") from exc
    if text.startswith("@") or os.path.exists(text):
        path = text[1:] if text.startswith("@") else text
        try:
            with open(path, encoding="utf-8") as fh:
                return json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise DescriptorError(f"cannot read instance file {path!r}: {exc}") from exc
    return shorthand(text)


def load(text: str) -> tuple[Matroid, dict]:
    desc = resolve(text)
    return build(desc), desc


# --- catalog ---------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    descriptor: dict

    def matroid(self) -> Matroid:
        return build(self.descriptor)

    @property
    def size(self) -> int:
        return self.matroid().size


def _entries():
    for n in range(0, 7):
        for r in range(0, n + 1):
            if n:
                yield f"uniform:{r},{n}", _u(r, n)
    for n in range(1, 7):
        yield f"wheel:{n}", shorthand(f"wheel:{n}")
    for n in range(2, 6):
        yield f"whirl:{n}", shorthand(f"whirl:{n}")
    for n in range(3, 6):
        yield f"Kn:{n}", shorthand(f"Kn:{n}")
    for n, m in [(2, 2), (2, 3), (2, 4), (3, 3)]:
        yield f"Knm:{n},{m}", shorthand(f"Knm:{n},{m}")
    for n in (2, 3):
        yield f"lattice:{n}", shorthand(f"lattice:{n}")
    for n in range(1, 7):
        yield f"cycle:{n}", shorthand(f"cycle:{n}")
    for n in range(1, 5):
        yield f"tree:{n}", shorthand(f"tree:{n}")
    for n in range(2, 7):
        yield f"catalan:{n}", shorthand(f"catalan:{n}")
    for n in range(1, 5):
        yield f"catalan-full:{n}", shorthand(f"catalan-full:{n}")
    for name in ("petersen", "octahedron", "digons", "fano", "loop-isthmus"):
        yield name, NAMED[name]()
    for r, n in [(1, 2), (2, 3), (2, 4), (3, 4)]:
        yield f"stretch2(U{r},{n})", {"type": "stretch2", "child": _u(r, n)}
    for r, n in [(1, 1), (2, 2), (3, 3), (2, 3), (2, 4)]:
        yield f"thicken2(U{r},{n})", {"type": "thicken2", "child": _u(r, n)}
    yield "U1,2+U1,2", {"type": "direct_sum", "children": [_u(1, 2), _u(1, 2)]}
    yield "U1,2+U0,1", {"type": "direct_sum", "children": [_u(1, 2), _u(0, 1)]}
    yield "U1,3+U0,2", {"type": "direct_sum", "children": [_u(1, 3), _u(0, 2)]}
    yield "U2,2+U0,1", {"type": "direct_sum", "children": [_u(2, 2), _u(0, 1)]}
    yield "U2,4+U1,2", {"type": "direct_sum", "children": [_u(2, 4), _u(1, 2)]}
    yield "dual(Knm:3,3)", {"type": "dual", "child": shorthand("Knm:3,3")}
    yield "dual(wheel:4)", {"type": "dual", "child": shorthand("wheel:4")}
    yield "Kn:4/e", {"type": "contract", "child": shorthand("Kn:4"), "elements": [0]}
    yield "Kn:5\\e", {"type": "delete", "child": shorthand("Kn:5"), "elements": [0]}
    yield "fano-dual", {"type": "dual", "child": NAMED["fano"]()}
    # identically self-dual: B is a basis exactly when E - B is
    isd = [sorted(set(a) | {4 + b}) for a in itertools.combinations(range(4), 2) for b in range(2)]
    yield "isd:U2,4+U1,2", {"type": "bases", "m": 6, "bases": isd}


@lru_cache(maxsize=None)
def catalog() -> tuple[CatalogEntry, ...]:
    return tuple(CatalogEntry(i, d) for i, d in _entries())


def catalog_by_id() -> dict[str, CatalogEntry]:
    return {e.id: e for e in catalog()}
