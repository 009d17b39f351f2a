"""Univariate polynomials with exact rational coefficients, plus Sturm root counting."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class RationalPoly:
    """Coefficients stored low degree first; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, a) -> "RationalPoly":
        return cls([a])

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * t + a
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPoly):
            other = RationalPoly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPoly({[str(a) for a in self.coeffs]})"

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RationalPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = RationalPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self) -> "RationalPoly":
        return RationalPoly(i * a for i, a in enumerate(self.coeffs) if i)

    def divmod(self, other: "RationalPoly") -> tuple["RationalPoly", "RationalPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        lead = other.lead
        for k in range(len(rem) - 1, d - 1, -1):
            q = rem[k] / lead
            if q:
                quot[k - d] = q
                for j, b in enumerate(other.coeffs):
                    rem[k - d + j] -= q * b
        return RationalPoly(quot), RationalPoly(rem[:d])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> "RationalPoly":
        return RationalPoly(a / self.lead for a in self.coeffs) if self.coeffs else self


def _lift(a) -> RationalPoly:
    return a if isinstance(a, RationalPoly) else RationalPoly([a])


def gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def square_free_decomposition(f: RationalPoly) -> tuple[Fraction, list[RationalPoly]]:
    """Yun's algorithm: f = c * prod(parts[k-1] ** k), parts monic and pairwise coprime."""
    if f.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    c = f.lead
    f = f.monic()
    if f.degree == 0:
        return c, []
    parts = []
    a = gcd(f, f.derivative())
    b = f // a
    d = f.derivative() // a - b.derivative()
    while b.degree > 0:
        g = gcd(b, d)
        parts.append(g)
        b = b // g
        d = d // g - b.derivative()
    while parts and parts[-1].degree == 0:
        parts.pop()
    return c, parts


def sturm_sequence(f: RationalPoly) -> list[RationalPoly]:
    seq = [f, f.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def sign_variations(seq: Sequence[RationalPoly], t) -> int:
    signs = [s for s in (p(t) for p in seq) if s != 0]
    return sum((a > 0) != (b > 0) for a, b in zip(signs, signs[1:]))


def count_roots(f: RationalPoly, a, b, seq: Sequence[RationalPoly] | None = None) -> int:
    """Distinct real roots of f in the half-open interval (a, b]."""
    if f.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    seq = seq if seq is not None else sturm_sequence(f)
    return sign_variations(seq, a) - sign_variations(seq, b)


def count_roots_open(f: RationalPoly, a, b) -> int:
    """Distinct real roots of f strictly inside (a, b)."""
    return count_roots(f, a, b) - (f(b) == 0)
