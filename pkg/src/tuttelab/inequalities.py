"""Executable forms of the Tutte-polynomial inequalities and convexity statements."""

from __future__ import annotations

import random
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal, localcontext
from fractions import Fraction
from typing import Union

from . import upoly
from .graph import (
    Multigraph,
    graphic_matroid,
    is_2connected,
    require_simple_cubic_girth5,
    spanning_tree_count,
    vertex_delete,
)
from .matroid import Matroid, coloops, loops
from .packing import PackingSummary, packing
from .reports import FAIL, PASS, SKIP, CheckReport
from .tutte import TuttePolynomial, restrict_to_segment, tutte_polynomial
from .upoly import RationalPoly

Source = Union[Matroid, TuttePolynomial]


def _poly(src: Source) -> TuttePolynomial:
    return src if isinstance(src, TuttePolynomial) else tutte_polynomial(src)


def _instance(src, instance):
    if instance is not None:
        return instance
    return src.descriptor() if isinstance(src, Matroid) else {"polynomial": src.to_json()}


# --- point inequalities ----------------------------------------------------


def check_merino_welsh(src: Source, instance=None) -> CheckReport:
    """max{T(2,0), T(0,2)} >= T(1,1), with the product and Jackson variants alongside."""
    t = _poly(src)
    a, b, c = t.evaluate(2, 0), t.evaluate(0, 2), t.evaluate(1, 1)
    side = "T(2,0)" if a > b else "T(0,2)" if b > a else "tie"
    a3, b3 = t.evaluate(3, 0), t.evaluate(0, 3)
    return CheckReport(
        "mw", _instance(src, instance), PASS if max(a, b) >= c else FAIL,
        values={
            "T(2,0)": a, "T(0,2)": b, "T(1,1)": c, "max_side": side,
            "product_variant": a * b >= c * c,
            "T(3,0)": a3, "T(0,3)": b3, "jackson_variant": a3 * b3 >= c * c,
        },
    )


def check_basic_2_2(m: Matroid, poly: TuttePolynomial | None = None, instance=None) -> CheckReport:
    """max{T(4,0), T(0,4)} >= T(2,2) for loopless, coloopless M."""
    inst = _instance(m, instance)
    if loops(m) or coloops(m):
        return CheckReport("basic-2-2", inst, SKIP, values={"reason": "precondition unmet"})
    t = poly or tutte_polynomial(m)
    a, b, c = t.evaluate(4, 0), t.evaluate(0, 4), t.evaluate(2, 2)
    return CheckReport("basic-2-2", inst, PASS if max(a, b) >= c else FAIL,
                       values={"T(4,0)": a, "T(0,4)": b, "T(2,2)": c})


def check_family_inequality(m: Matroid, a, poly: TuttePolynomial | None = None,
                            summary: PackingSummary | None = None, instance=None) -> CheckReport:
    """T(0,2a) >= T(a,a) under two disjoint bases, T(2a,0) >= T(a,a) under a union of two bases.

    The verdict is the combined max form.  For a >= 2 a failing side that
    matches a positive certificate also fails the check.  Without either
    certificate the check is skipped; values are still reported.
    """
    a = Fraction(a)
    if a < 0:
        raise ValueError("a must be nonnegative")
    t = poly or tutte_polynomial(m)
    s = summary or packing(m)
    mid, x_end, y_end = t.evaluate(a, a), t.evaluate(2 * a, 0), t.evaluate(0, 2 * a)
    values = {"a": a, "T(a,a)": mid, "T(2a,0)": x_end, "T(0,2a)": y_end,
              "packing": s.verdict, "combined": max(x_end, y_end) >= mid}
    ok = max(x_end, y_end) >= mid
    if s.disjoint.holds:
        values["disjoint_side"] = y_end >= mid
        ok = ok and (a < 2 or y_end >= mid)
    if s.union.holds:
        values["union_side"] = x_end >= mid
        ok = ok and (a < 2 or x_end >= mid)
    verdict = SKIP if not s.in_class else PASS if ok else FAIL
    return CheckReport("family", _instance(m, instance), verdict, values=values)


# --- segment convexity -------------------------------------------------------

STURM, GRID = "exact-sturm", "grid"
METHOD_ALIASES = {"sturm": STURM, STURM: STURM, GRID: GRID}


@dataclass
class SegmentConvexityReport:
    p: Fraction
    method: str
    convex: bool
    second_derivative: RationalPoly
    witness: dict | None = None
    note: str = ""

    def to_check_report(self, instance) -> CheckReport:
        values = {"p": self.p, "method": self.method,
                  "f2": " ".join(str(c) for c in self.second_derivative.coeffs) or "0"}
        if self.note:
            values["note"] = self.note
        return CheckReport("convexity", instance, PASS if self.convex else FAIL,
                           values=values, witness=self.witness)


def _odd_multiplicity_part(g: RationalPoly) -> tuple[Fraction, RationalPoly]:
    c, parts = upoly.square_free_decomposition(g)
    odd = RationalPoly([1])
    for k, part in enumerate(parts, start=1):
        if k % 2:
            odd = odd * part
    return c, odd


def _negative_point(g: RationalPoly, p: Fraction) -> Fraction:
    k = 1
    while True:
        for i in range(1, 2 ** k):
            t = p * i / 2 ** k
            if g(t) < 0:
                return t
        k += 1


def _midpoint_witness(f: RationalPoly, t0: Fraction, p: Fraction) -> dict:
    """Shrink a window around t0 until f(t0) exceeds the chord midpoint."""
    h = min(t0, p - t0)
    while True:
        t1, t2 = t0 - h, t0 + h
        if f(t0) * 2 > f(t1) + f(t2):
            return {"t_interval": [str(t1), str(t2)], "midpoint": str(t0),
                    "f(mid)": str(f(t0)), "chord_mid": str((f(t1) + f(t2)) / 2)}
        h /= 2


def sturm_convexity(f: RationalPoly, p) -> SegmentConvexityReport:
    """Certify f'' >= 0 on [0, p] by Sturm root counting.

    f'' = c * prod(q_k ** k) with square-free, pairwise coprime q_k; its
    sign is that of c * prod over odd k of q_k.  That odd part has no root
    in (0, p) exactly when f'' keeps one sign there, read off at p/2.
    """
    p = Fraction(p)
    g = f.derivative().derivative()
    if g.is_zero():
        return SegmentConvexityReport(p, STURM, True, g, note="f is affine on the segment")
    c, odd = _odd_multiplicity_part(g)
    roots = upoly.count_roots_open(odd, Fraction(0), p) if odd.degree > 0 else 0
    if roots == 0 and c * odd(p / 2) > 0:
        return SegmentConvexityReport(p, STURM, True, g, note="f'' >= 0 certified")
    t0 = _negative_point(g, p)
    witness = _midpoint_witness(f, t0, p)
    witness["sign_changes_in_open_segment"] = roots
    return SegmentConvexityReport(p, STURM, False, g, witness=witness)


def grid_convexity(f: RationalPoly, p, density: int = 16) -> SegmentConvexityReport:
    """Midpoint convexity on a uniform rational grid (necessary condition only)."""
    p = Fraction(p)
    if density < 2:
        raise ValueError("grid density must be at least 2")
    pts = [p * i / density for i in range(density + 1)]
    vals = [f(t) for t in pts]
    g = f.derivative().derivative()
    for i in range(len(pts)):
        for j in range(i + 2, len(pts)):
            mid = (pts[i] + pts[j]) / 2
            if f(mid) * 2 > vals[i] + vals[j]:
                return SegmentConvexityReport(
                    p, GRID, False, g, note="necessary-condition only",
                    witness={"t_interval": [str(pts[i]), str(pts[j])], "midpoint": str(mid)},
                )
    return SegmentConvexityReport(p, GRID, True, g, note="necessary-condition only")


def check_segment_convexity(src: Source, p, method: str = STURM, density: int = 16) -> SegmentConvexityReport:
    """Convexity of t -> T(t, p - t) on [0, p]."""
    f = restrict_to_segment(_poly(src), p)
    method = METHOD_ALIASES.get(method, method)
    if method == STURM:
        return sturm_convexity(f, p)
    if method == GRID:
        return grid_convexity(f, p, density)
    raise ValueError(f"unknown convexity method {method!r}")


def sampled_quadrant_convexity_probe(src: Source, samples: int = 400, bound: int = 4,
                                     density: int = 8, seed: int = 0, instance=None) -> CheckReport:
    """Random midpoint-convexity probes in [0, bound]^2.  Exploratory, never a certificate."""
    t = _poly(src)
    rng = random.Random(seed)
    top = bound * density

    def point():
        return Fraction(rng.randint(0, top), density), Fraction(rng.randint(0, top), density)

    for k in range(samples):
        (x1, y1), (x2, y2) = point(), point()
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        lhs = t.evaluate(mx, my)
        rhs = (t.evaluate(x1, y1) + t.evaluate(x2, y2)) / 2
        if lhs > rhs:
            return CheckReport(
                "quadrant-probe", _instance(src, instance), FAIL,
                values={"exploratory": True, "probes": k + 1, "T(mid)": lhs, "chord_mid": rhs},
                witness={"p1": [str(x1), str(y1)], "p2": [str(x2), str(y2)]},
            )
    return CheckReport("quadrant-probe", _instance(src, instance), PASS,
                       values={"exploratory": True, "probes": samples, "violations": 0})


# --- graph-specific ------------------------------------------------------------


def check_simplicial(g: Multigraph, instance=None) -> CheckReport:
    """(2^d - 2) T_{G-v}(0,2) <= T_G(0,2) at every vertex of a 2-connected graph."""
    inst = instance if instance is not None else {"vertices": g.vertices, "edges": [list(e) for e in g.edges]}
    if not is_2connected(g):
        return CheckReport("simplicial", inst, SKIP, values={"reason": "not 2-connected"})
    whole = tutte_polynomial(graphic_matroid(g)).evaluate(0, 2)
    bad = []
    for v in range(g.vertices):
        d = g.degree(v)
        part = tutte_polynomial(graphic_matroid(vertex_delete(g, v))).evaluate(0, 2)
        if (2 ** d - 2) * part > whole:
            bad.append(v)
    return CheckReport("simplicial", inst, FAIL if bad else PASS,
                       values={"T(0,2)": whole, "vertices_checked": g.vertices},
                       witness={"violating_vertices": bad} if bad else None)


def _to_fraction(mpf_tuple) -> Fraction:
    from mpmath.libmp import to_rational

    num, den = to_rational(mpf_tuple)
    return Fraction(int(num), int(den))


def _decimal(x: Fraction, digits: int, rounding) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = rounding
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def _interval(x) -> tuple[Fraction, Fraction]:
    lo, hi = x._mpi_
    return _to_fraction(lo), _to_fraction(hi)


def cubic_girth5_bounds(g: Multigraph, prec: int = 128, instance=None,
                        alpha: int | None = None) -> CheckReport:
    """Acyclic-orientation lower bound and spanning-tree upper bound for cubic girth-5 graphs.

    Both bounds are enclosed in outward-rounded intervals; a pass means
    alpha >= (upper end of the lower bound) and tau <= (lower end of the
    upper bound).
    """
    from mpmath import iv

    require_simple_cubic_girth5(g)
    n = g.vertices
    if alpha is None:
        alpha = int(tutte_polynomial(graphic_matroid(g)).evaluate(2, 0))
    tau = spanning_tree_count(g)
    saved = iv.prec
    iv.prec = prec
    try:
        base = iv.mpf(2) ** (iv.mpf(3) / 8) * iv.mpf(3) ** (iv.mpf(3) / 8) * iv.mpf(4) ** (iv.mpf(1) / 8)
        lower = base ** n
        q = iv.log(iv.mpf(n)) / iv.log(iv.mpf(9) / 8)
        q_lo, q_hi = _interval(q)
        beta_lo, beta_hi = -((-q_lo.numerator) // q_lo.denominator), -((-q_hi.numerator) // q_hi.denominator)
        if beta_lo != beta_hi:
            raise ArithmeticError("precision too low to determine the ceiling in the upper bound")
        beta = beta_lo
        upper = (iv.mpf(2 * beta) / (3 * n)) * iv.exp(
            (iv.mpf(12) / iv.sqrt(iv.pi)) * (iv.mpf(1) / beta) ** (iv.mpf(5) / 2)
        ) * (iv.mpf(4) / iv.sqrt(iv.mpf(3))) ** n
        lower_iv, upper_iv = _interval(lower), _interval(upper)
    finally:
        iv.prec = saved
    lower_ok = alpha >= lower_iv[1]
    upper_ok = tau <= upper_iv[0]
    # exact cross-check: alpha^8 >= 2^(5n) 3^(3n)
    exact_lower_ok = alpha ** 8 >= 2 ** (5 * n) * 3 ** (3 * n)
    ok = lower_ok and upper_ok and tau < alpha
    return CheckReport(
        "cubic-bounds", instance if instance is not None else {"vertices": n, "edges": [list(e) for e in g.edges]},
        PASS if ok else FAIL,
        values={
            "n": n, "alpha": alpha, "tau": tau, "beta": beta,
            "lower_bound_lo": _decimal(lower_iv[0], 30, ROUND_FLOOR),
            "lower_bound_hi": _decimal(lower_iv[1], 30, ROUND_CEILING),
            "upper_bound_lo": _decimal(upper_iv[0], 30, ROUND_FLOOR),
            "upper_bound_hi": _decimal(upper_iv[1], 30, ROUND_CEILING),
            "alpha_ge_lower": lower_ok, "tau_le_upper": upper_ok,
            "alpha_ge_lower_exact": exact_lower_ok, "precision_bits": prec,
        },
    )


def lower_bound_interval(n: int, prec: int = 128) -> tuple[Fraction, Fraction]:
    from mpmath import iv

    saved = iv.prec
    iv.prec = prec
    try:
        base = iv.mpf(2) ** (iv.mpf(3) / 8) * iv.mpf(3) ** (iv.mpf(3) / 8) * iv.mpf(4) ** (iv.mpf(1) / 8)
        return _interval(base ** n)
    finally:
        iv.prec = saved

