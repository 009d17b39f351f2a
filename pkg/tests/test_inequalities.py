from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from tuttelab import graph as g
from tuttelab.catalog import build, catalog, shorthand
from tuttelab.inequalities import (
    GRID,
    STURM,
    check_basic_2_2,
    check_family_inequality,
    check_merino_welsh,
    check_segment_convexity,
    check_simplicial,
    cubic_girth5_bounds,
    grid_convexity,
    lower_bound_interval,
    sampled_quadrant_convexity_probe,
    sturm_convexity,
)
from tuttelab.matroid import coloops, direct_sum, dualize, is_paving, loops, thicken2, uniform
from tuttelab.packing import packing
from tuttelab.tutte import tutte_polynomial
from tuttelab.upoly import RationalPoly

P_VALUES = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3), Fraction(7, 2)]


def named(text):
    return build(shorthand(text))


def coloopless_paving():
    return [e for e in catalog() if not coloops(e.matroid()) and is_paving(e.matroid())]


# --- Merino-Welsh and variants ----------------------------------------------------------


def test_mw_k3_and_k4():
    k3 = check_merino_welsh(g.graphic_matroid(g.complete(3)))
    assert k3.passed and k3.values["T(2,0)"] == "6" and k3.values["T(1,1)"] == "3"
    k4 = check_merino_welsh(g.graphic_matroid(g.complete(4)))
    assert k4.values["T(0,2)"] == "24" and k4.values["T(1,1)"] == "16"


def test_mw_loop_isthmus_fails():
    rep = check_merino_welsh(named("loop-isthmus"))
    assert rep.verdict == "fail"
    assert (rep.values["T(2,0)"], rep.values["T(0,2)"], rep.values["T(1,1)"]) == ("0", "0", "1")
    assert rep.values["product_variant"] == "false"


def test_basic_2_2_preconditions():
    assert check_basic_2_2(named("loop-isthmus")).verdict == "skip"
    assert check_basic_2_2(uniform(2, 4)).passed


# --- family inequality --------------------------------------------------------------------


def test_family_u24_a2():
    rep = check_family_inequality(uniform(2, 4), 2)
    assert rep.passed
    assert rep.values["T(0,2a)"] == "24" and rep.values["T(a,a)"] == "16"


def test_family_thickened_u33_equality():
    rep = check_family_inequality(thicken2(uniform(3, 3)), 3)
    assert rep.passed
    assert rep.values["T(2a,0)"] == rep.values["T(0,2a)"] == rep.values["T(a,a)"] == "216"


def test_family_skips_without_certificate():
    # a coloop blocks disjoint bases, a loop blocks covering by bases
    m = direct_sum(uniform(1, 1), uniform(0, 1))
    rep = check_family_inequality(m, 2)
    assert rep.verdict == "skip"
    assert rep.values["packing"] == "neither"


def test_family_rejects_negative_a():
    with pytest.raises(ValueError):
        check_family_inequality(uniform(2, 4), -1)


@pytest.mark.parametrize("entry", coloopless_paving(), ids=lambda e: e.id)
def test_family_small_a_on_coloopless_paving(entry):
    m = entry.matroid()
    t, s = tutte_polynomial(m), packing(m)
    for a in (0, Fraction(1, 2), 1, Fraction(3, 2)):
        rep = check_family_inequality(m, a, t, s)
        assert rep.values["combined"] == "true", (entry.id, a)


# --- segment convexity ---------------------------------------------------------------------


@pytest.mark.parametrize("k,l", [(1, 0), (2, 1), (3, 2), (4, 0)])
def test_parallel_class_with_loops_is_segment_convex(k, l):
    m = direct_sum(uniform(1, k + 1), uniform(0, l))
    for p in P_VALUES:
        assert check_segment_convexity(m, p).convex


def test_two_parallel_pairs_constant():
    rep = check_segment_convexity(direct_sum(uniform(1, 2), uniform(1, 2)), 3)
    assert rep.convex and rep.second_derivative.is_zero()


def test_rank2_loopless_coloopless_convex():
    seen = 0
    for e in catalog():
        m = e.matroid()
        if m.full_rank != 2 or loops(m) or coloops(m):
            continue
        seen += 1
        for p in (1, 2, 3):
            assert check_segment_convexity(m, p).convex, e.id
    assert seen >= 5


@pytest.mark.parametrize("entry", coloopless_paving(), ids=lambda e: e.id)
def test_coloopless_paving_sturm_convex_and_dual(entry):
    m = entry.matroid()
    t = tutte_polynomial(m)
    td = tutte_polynomial(dualize(m))
    for p in P_VALUES:
        assert check_segment_convexity(t, p).convex, (entry.id, p)
        assert check_segment_convexity(td, p).convex, (entry.id, p)


@pytest.mark.parametrize("entry", [e for e in catalog() if e.size <= 10], ids=lambda e: e.id)
def test_convexity_verdict_invariant_under_duality(entry):
    m = entry.matroid()
    for p in (1, 2):
        assert check_segment_convexity(m, p).convex == check_segment_convexity(dualize(m), p).convex


def test_loop_isthmus_segment_not_convex_with_witness():
    rep = check_segment_convexity(named("loop-isthmus"), 2)
    assert not rep.convex
    lo, hi = (Fraction(x) for x in rep.witness["t_interval"])
    f = lambda t: t * (2 - t)  # noqa: E731
    assert 2 * f((lo + hi) / 2) > f(lo) + f(hi)


def test_grid_labelled_necessary_only():
    rep = check_segment_convexity(uniform(2, 4), 2, method=GRID)
    assert rep.convex and rep.note == "necessary-condition only"
    assert check_segment_convexity(uniform(2, 4), 2, method="sturm").method == STURM


def sympy_nonneg_on(g: RationalPoly, p: Fraction) -> bool:
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i for i, c in enumerate(g.coeffs))
    if expr == 0:
        return True
    pts = {sympy.Integer(0), sympy.Rational(p.numerator, p.denominator)}
    for r in sympy.real_roots(sympy.Poly(expr, t)):
        if 0 < r < p:
            pts.add(r)
    pts = sorted(pts)
    mids = [(a + b) / 2 for a, b in zip(pts, pts[1:])]
    return all(expr.subs(t, x) >= 0 for x in mids)


@settings(max_examples=120, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=0, max_size=7),
       st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=4))
def test_sturm_verdict_matches_sympy(coeffs, p):
    f = RationalPoly(coeffs)
    rep = sturm_convexity(f, p)
    assert rep.convex == sympy_nonneg_on(rep.second_derivative, p)
    if rep.convex:
        assert grid_convexity(f, p, 8).convex
    else:
        lo, hi = (Fraction(x) for x in rep.witness["t_interval"])
        assert 0 <= lo < hi <= p
        assert 2 * f((lo + hi) / 2) > f(lo) + f(hi)


def test_double_root_does_not_break_convexity():
    x = RationalPoly.x()
    # f'' = 12 (t - 1)^2 >= 0 with a root of even multiplicity inside (0, 2)
    f = (x - 1) ** 4
    assert sturm_convexity(f, 2).convex
    # f'' = 6 (t - 1) changes sign at 1
    assert not sturm_convexity((x - 1) ** 3, 2).convex


# --- quadrant probe ----------------------------------------------------------------------------


def test_quadrant_probe_examples():
    assert sampled_quadrant_convexity_probe(thicken2(uniform(3, 3))).passed
    assert sampled_quadrant_convexity_probe(g.graphic_matroid(g.complete(4))).passed
    rep = sampled_quadrant_convexity_probe(direct_sum(uniform(1, 2), uniform(0, 1)))
    assert rep.verdict == "fail" and rep.values["exploratory"] == "true"
    # the same instance is still segment-convex
    for p in P_VALUES:
        assert check_segment_convexity(direct_sum(uniform(1, 2), uniform(0, 1)), p).convex


def test_quadrant_probe_deterministic():
    m = direct_sum(uniform(1, 3), uniform(0, 2))
    assert sampled_quadrant_convexity_probe(m, seed=3).to_json() == sampled_quadrant_convexity_probe(m, seed=3).to_json()


# --- graph-specific -----------------------------------------------------------------------------


def test_simplicial_on_2connected_catalog_graphs():
    count = 0
    for e in catalog():
        m = e.matroid()
        if isinstance(m, g.GraphicMatroid) and g.is_2connected(m.graph) and m.size <= 15:
            assert check_simplicial(m.graph).passed, e.id
            count += 1
    assert count >= 8
    assert check_simplicial(g.two_digons()).verdict == "skip"


def test_cubic_bounds_petersen():
    rep = cubic_girth5_bounds(g.petersen())
    assert rep.passed
    assert rep.values["tau"] == "2000" and rep.values["alpha"] == "16680"
    assert rep.values["beta"] == "20"
    assert Fraction(rep.values["lower_bound_hi"]) <= 16680
    assert 2000 <= Fraction(rep.values["upper_bound_lo"])


def test_cubic_bounds_values_against_mpmath_highprec():
    import mpmath

    with mpmath.workdps(60):
        lower = (mpmath.mpf(2) ** (mpmath.mpf(3) / 8) * mpmath.mpf(3) ** (mpmath.mpf(3) / 8)
                 * mpmath.mpf(4) ** (mpmath.mpf(1) / 8)) ** 10
        beta = 20
        upper = (mpmath.mpf(2 * beta) / 30) * mpmath.exp(12 / mpmath.sqrt(mpmath.pi) * mpmath.mpf(beta) ** -2.5) \
            * (4 / mpmath.sqrt(3)) ** 10
        lo, hi = lower_bound_interval(10)
        assert lo <= Fraction(str(mpmath.nstr(lower, 50))) + Fraction(1, 10 ** 40)
        assert hi >= Fraction(str(mpmath.nstr(lower, 50))) - Fraction(1, 10 ** 40)
        rep = cubic_girth5_bounds(g.petersen())
        assert abs(Fraction(rep.values["upper_bound_lo"]) - Fraction(mpmath.nstr(upper, 40))) < Fraction(1, 10 ** 20)


def test_lower_bound_monotone_in_n():
    assert lower_bound_interval(10)[0] > lower_bound_interval(5)[1]


def test_cubic_bounds_precondition():
    with pytest.raises(g.GraphError):
        cubic_girth5_bounds(g.complete(4))
