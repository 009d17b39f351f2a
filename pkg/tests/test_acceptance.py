"""Acceptance criteria 1-10.  A PASS/FAIL line per criterion is printed in the run summary."""

import time
from fractions import Fraction
from math import comb

from tuttelab import graph as g
from tuttelab.catalog import build, catalog, shorthand, whirl
from tuttelab.closed_forms import (
    catalan_binomial_identity,
    catalan_number,
    catalan_tutte_formula,
    closed_form,
    wheel_chromatic,
)
from tuttelab.inequalities import (
    check_basic_2_2,
    check_family_inequality,
    check_merino_welsh,
    check_segment_convexity,
    cubic_girth5_bounds,
    sampled_quadrant_convexity_probe,
)
from tuttelab.matroid import catalan_matroid, coloops, direct_sum, dualize, is_paving, loops, uniform
from tuttelab.packing import check_inequality_equivalence, check_paving_dichotomy, has_two_disjoint_bases_brute, packing
from tuttelab.search import conjecture_search, counterexamples, parse_corpus
from tuttelab.tutte import (
    check_coefficient_relations,
    tutte_by_activities,
    tutte_by_deletion_contraction,
    tutte_by_subsets,
    tutte_polynomial,
)

DETAILS: dict[int, str] = {}


def note(n: int, text: str) -> None:
    DETAILS[n] = text


def graphic(text):
    return build(shorthand(text))


def test_criterion_01_engine_agreement():
    """Three engines agree on >= 30 catalog matroids with m <= 16."""
    start = time.perf_counter()
    required = {"Kn:4", "Kn:5", "Knm:2,3", "Knm:3,3", "lattice:2", "lattice:3", "fano"}
    required |= {f"wheel:{n}" for n in range(1, 7)} | {f"whirl:{n}" for n in range(2, 6)}
    required |= {f"catalan:{n}" for n in range(2, 7)}
    suite = [e for e in catalog() if e.size <= 16]
    ids = {e.id for e in suite}
    assert required <= ids
    assert any(i.startswith("uniform:") for i in ids) and any(i.startswith("cycle:") for i in ids)
    assert any(i.startswith("tree:") for i in ids) and any(i.startswith("stretch2") for i in ids)
    assert any(i.startswith("thicken2") for i in ids)
    bad = []
    for e in suite:
        m = e.matroid()
        a = tutte_by_subsets(m)
        if tutte_by_deletion_contraction(m) != a or tutte_by_activities(m) != a:
            bad.append(e.id)
    elapsed = time.perf_counter() - start
    note(1, f"{len(suite)} matroids, {len(bad)} disagreements, {elapsed:.1f}s")
    assert len(suite) >= 30 and not bad and elapsed <= 300


def test_criterion_02_paper_values():
    """K3/K4 values, wheel and whirl formulas, Cayley, wheel chromatic polynomial."""
    k3, k4 = tutte_polynomial(graphic("Kn:3")), tutte_polynomial(graphic("Kn:4"))
    assert (k4.evaluate(1, 1), k4.evaluate(0, 2), k3.evaluate(2, 0), k3.evaluate(1, 1)) == (16, 24, 6, 3)
    assert g.spanning_tree_count(g.complete(4)) == 16 and g.count_totally_cyclic_orientations(g.complete(4)) == 24
    for n in range(1, 9):
        t = tutte_polynomial(g.graphic_matroid(g.wheel(n)))
        cf = closed_form("wheel", n)
        assert t.evaluate(1, 1) == cf["T(1,1)"].value and t.evaluate(2, 0) == cf["T(2,0)"].value
    for n in range(2, 7):
        wheel = tutte_polynomial(g.graphic_matroid(g.wheel(n))).terms()
        wheel[1, 1] -= 1
        wheel[1, 0] = wheel.get((1, 0), 0) + 1
        wheel[0, 1] = wheel.get((0, 1), 0) + 1
        assert tutte_by_subsets(whirl(n)).terms() == {k: v for k, v in wheel.items() if v}
    for n in range(2, 8):
        assert tutte_polynomial(g.graphic_matroid(g.complete(n))).evaluate(1, 1) == n ** (n - 2)
        assert g.spanning_tree_count(g.complete(n)) == closed_form("complete", n)["T(1,1)"].value
    points = [Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(3), Fraction(-5, 2), Fraction(7, 3)]
    for n in range(1, 7):
        t = tutte_polynomial(g.graphic_matroid(g.wheel(n)))
        for x in points:
            assert g.chromatic_eval(g.wheel(n), x, t) == wheel_chromatic(n, x)
        assert abs(g.chromatic_eval(g.wheel(n), -1, t)) == t.evaluate(2, 0)
        if n <= 5:
            assert abs(wheel_chromatic(n, -1)) == g.count_acyclic_orientations(g.wheel(n))
    note(2, "K3/K4, wheels n<=8, whirls n<=6, Cayley n<=7, chromatic n<=6")


def test_criterion_03_catalan():
    """Closed form vs engine n <= 6; evaluations n <= 8; binomial identity m <= 50."""
    start = time.perf_counter()
    for n in range(2, 7):
        assert catalan_tutte_formula(n) == tutte_by_subsets(catalan_matroid(n, trimmed=True))
    for n in range(2, 9):
        m = n - 1
        for t in (tutte_by_subsets(catalan_matroid(n, trimmed=True)), catalan_tutte_formula(n)):
            assert t.evaluate(2, 0) == t.evaluate(0, 2) == comb(2 * m, m)
            assert t.evaluate(1, 1) == catalan_number(n)
    assert all(catalan_binomial_identity(m).passed for m in range(1, 51))
    elapsed = time.perf_counter() - start
    note(3, f"{elapsed:.1f}s")
    assert elapsed <= 60


def test_criterion_04_packing_oracle():
    """Augmenting-path verdicts equal brute force; (7)/(8)/(9) agree subset-exhaustively (m <= 14)."""
    suite = [e for e in catalog() if e.size <= 14]
    for e in suite:
        m = e.matroid()
        s = packing(m)
        assert s.disjoint.holds == has_two_disjoint_bases_brute(m), e.id
        assert s.union.holds == has_two_disjoint_bases_brute(dualize(m)), e.id
        assert check_inequality_equivalence(m).passed, e.id
    note(4, f"{len(suite)} matroids")


def test_criterion_05_paving_dichotomy():
    """Coloopless paving: 2r > n gives a union of two bases, otherwise two disjoint bases."""
    count = 0
    for e in catalog():
        m = e.matroid()
        if coloops(m) or not is_paving(m):
            continue
        rep = check_paving_dichotomy(m, e.id)
        assert rep.passed and rep.witness is not None, e.id
        count += 1
    note(5, f"{count} coloopless paving matroids")
    assert count > 0


def test_criterion_06_main_and_basic():
    """Family inequality for a in {2, 5/2, 3, 4} under a packing certificate; basic_2_2."""
    certified = basic = 0
    for e in catalog():
        m = e.matroid()
        t, s = tutte_polynomial(m), packing(m)
        if s.in_class:
            certified += 1
            for a in (2, Fraction(5, 2), 3, 4):
                assert check_family_inequality(m, a, t, s).passed, (e.id, a)
        if not loops(m) and not coloops(m):
            basic += 1
            assert check_basic_2_2(m, t).passed, e.id
    note(6, f"{certified} certified matroids x 4 values of a, {basic} for basic_2_2")
    assert certified > 0 and basic > 0


def test_criterion_07_convexity():
    """Sturm-certified segment convexity on coloopless paving matroids and duals; probe flags U12+U01."""
    ps = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3), Fraction(7, 2)]
    count = 0
    for e in catalog():
        m = e.matroid()
        if coloops(m) or not is_paving(m):
            continue
        count += 1
        for t in (tutte_polynomial(m), tutte_polynomial(dualize(m))):
            for p in ps:
                assert check_segment_convexity(t, p, method="sturm").convex, (e.id, p)
    witness = direct_sum(uniform(1, 2), uniform(0, 1))
    assert sampled_quadrant_convexity_probe(witness).verdict == "fail"
    assert all(check_segment_convexity(witness, p).convex for p in ps)
    note(7, f"{count} matroids and their duals at 5 values of p")


def test_criterion_08_conjecture_harness():
    """No counterexample over the built-in families and all connected multigraphs with <= 9 edges."""
    start = time.perf_counter()
    items = parse_corpus("families;catalog;multigraphs:9")
    reports = conjecture_search(items)
    bad = counterexamples(reports)
    elapsed = time.perf_counter() - start
    checked = sum(r.verdict == "pass" for r in reports)
    note(8, f"{len(reports)} instances, {checked} under the hypothesis, {len(bad)} counterexamples, {elapsed:.0f}s")
    assert not bad, [r.values["label"] for r in bad]
    assert elapsed <= 1800


def test_criterion_09_cubic_bounds():
    """Petersen: tau = 2000 and both interval-certified bounds."""
    rep = cubic_girth5_bounds(g.petersen())
    assert g.spanning_tree_count(g.petersen()) == 2000
    assert rep.values["tau"] == "2000"
    assert rep.values["alpha_ge_lower"] == "true" and rep.values["tau_le_upper"] == "true"
    assert Fraction(rep.values["lower_bound_hi"]) <= Fraction(rep.values["alpha"])
    assert Fraction(rep.values["tau"]) <= Fraction(rep.values["upper_bound_lo"])
    note(9, f"alpha={rep.values['alpha']} >= {rep.values['lower_bound_hi']}, "
            f"tau=2000 <= {rep.values['upper_bound_lo']}")
    assert rep.passed


def test_criterion_10_relations_and_failure_case():
    """Coefficient identities on the whole catalog; Merino-Welsh fails exactly on loop + isthmus."""
    for e in catalog():
        m = e.matroid()
        assert check_coefficient_relations(tutte_polynomial(m), m).passed, e.id
    rep = check_merino_welsh(graphic("loop-isthmus"))
    assert rep.verdict == "fail"
    assert (rep.values["T(2,0)"], rep.values["T(0,2)"], rep.values["T(1,1)"]) == ("0", "0", "1")
    assert rep.values["product_variant"] == "false"
    note(10, f"{len(catalog())} catalog matroids; loop+isthmus max{{0,0}} < 1")
