from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from tuttelab import upoly
from tuttelab.upoly import RationalPoly

T = sympy.Symbol("t")

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.lists(small_rationals, min_size=0, max_size=6).map(RationalPoly)


def to_sympy(p: RationalPoly):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0], T, domain="QQ")


def test_arithmetic_basics():
    x = RationalPoly.x()
    p = (x + 1) ** 3
    assert list(p.coeffs) == [1, 3, 3, 1]
    assert p.derivative() == 3 * (x + 1) ** 2
    q, r = p.divmod(x + 1)
    assert q == (x + 1) ** 2 and r.is_zero()
    assert p(Fraction(1, 2)) == Fraction(27, 8)


def test_zero_polynomial():
    z = RationalPoly()
    assert z.is_zero() and z.degree == -1
    assert z.derivative().is_zero()


@settings(max_examples=150, deadline=None)
@given(polys, polys)
def test_product_and_division_match_sympy(a, b):
    assert to_sympy(a * b) == to_sympy(a) * to_sympy(b)
    if not b.is_zero():
        q, r = a.divmod(b)
        sq, sr = sympy.div(to_sympy(a), to_sympy(b))
        assert to_sympy(q) == sq and to_sympy(r) == sr


@settings(max_examples=150, deadline=None)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 3)), min_size=1, max_size=4),
       st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(lambda c: c != 0))
def test_square_free_decomposition_recovers_factors(roots, c):
    x = RationalPoly.x()
    f = RationalPoly([c])
    for root, k in roots:
        f = f * (x - root) ** k
    lead, parts = upoly.square_free_decomposition(f)
    rebuilt = RationalPoly([lead])
    for k, part in enumerate(parts, start=1):
        rebuilt = rebuilt * part ** k
        assert part.is_zero() or part.lead == 1
    assert rebuilt == f
    mult = {}
    for root, k in roots:
        mult[root] = mult.get(root, 0) + k
    for k, part in enumerate(parts, start=1):
        expected = sorted(r for r, m in mult.items() if m == k)
        got = sorted(int(r) for r in sympy.roots(to_sympy(part)).keys()) if part.degree > 0 else []
        assert got == expected


@settings(max_examples=200, deadline=None)
@given(polys.filter(lambda p: p.degree >= 1), small_rationals, small_rationals)
def test_sturm_root_count_matches_sympy(f, a, b):
    if a >= b:
        a, b = b, a
    if a == b:
        return
    expected = sympy.Poly(to_sympy(f)).count_roots(sympy.Rational(a.numerator, a.denominator),
                                                   sympy.Rational(b.numerator, b.denominator))
    # sympy counts the closed interval [a, b], with multiplicity folded to distinct roots
    distinct = len({r for r in sympy.real_roots(to_sympy(f))
                    if sympy.Rational(a.numerator, a.denominator) < r <= sympy.Rational(b.numerator, b.denominator)})
    assert upoly.count_roots(f, a, b) == distinct
    assert distinct <= expected


def test_count_roots_open_excludes_endpoints():
    x = RationalPoly.x()
    f = x * (x - 1) * (x - Fraction(1, 2))
    assert upoly.count_roots_open(f, 0, 1) == 1
    assert upoly.count_roots(f, 0, 1) == 2


def test_sign_variations_skip_zeros():
    seq = [RationalPoly([1]), RationalPoly([0]), RationalPoly([-1])]
    assert upoly.sign_variations(seq, 0) == 1


def test_gcd_is_monic():
    x = RationalPoly.x()
    g = upoly.gcd(2 * (x - 1) * (x + 2), 6 * (x - 1) ** 2)
    assert g == x - 1


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        RationalPoly([1, 1]).divmod(RationalPoly())
