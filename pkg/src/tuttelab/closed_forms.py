"""Closed-form values for the wheel, whirl, complete-graph and Catalan families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .reports import FAIL, PASS, CheckReport
from .tutte import TuttePolynomial


class UnknownFamily(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """A formula that must produce integers did not."""


@dataclass(frozen=True)
class ClosedFormValue:
    family: str
    n: int
    quantity: str
    value: int
    m: int | None = None


def lucas(k: int) -> int:
    """L_1 = 1, L_2 = 3, L_k = L_{k-1} + L_{k-2}."""
    if k < 1:
        raise ValueError("Lucas numbers are indexed from 1")
    a, b = 1, 3
    for _ in range(k - 1):
        a, b = b, a + b
    return a


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def wheel_chromatic(n: int, x) -> Fraction:
    x = Fraction(x)
    return x * (x - 2) ** n + (-1) ** n * x * (x - 2)


def closed_form(family: str, n: int) -> dict[str, ClosedFormValue]:
    """Known evaluations keyed by quantity name (``T(1,1)``, ``T(2,0)``, ...)."""
    vals: dict[str, int] = {}
    if family == "wheel":
        if n < 1:
            raise ValueError("wheel needs n >= 1")
        vals["T(1,1)"] = lucas(2 * n) - 2
        vals["T(2,0)"] = 3 ** n - 3
    elif family == "whirl":
        if n < 2:
            raise ValueError("whirl needs n >= 2")
        # T_whirl = T_wheel - xy + x + y
        vals["T(1,1)"] = lucas(2 * n) - 2 + 1
        vals["T(2,0)"] = 3 ** n - 3 + 2
    elif family == "complete":
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        vals["T(1,1)"] = n ** (n - 2) if n >= 2 else 1
    elif family == "catalan":
        if n < 2:
            raise ValueError("trimmed Catalan matroid needs n >= 2")
        m = n - 1
        vals["T(2,0)"] = comb(2 * m, m)
        vals["T(0,2)"] = comb(2 * m, m)
        vals["T(1,1)"] = catalan_number(n)
    else:
        raise UnknownFamily(f"no closed forms for family {family!r}")
    return {q: ClosedFormValue(family, n, q, v) for q, v in vals.items()}


def catalan_tutte_formula(n: int) -> TuttePolynomial:
    """Coefficients of T_{N_n} from the lattice-path closed form."""
    if n < 2:
        raise ValueError("trimmed Catalan matroid needs n >= 2")
    terms = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            lower = n - i - j + 1
            if lower < 0:
                continue
            c = Fraction(i + j - 2, n - 1) * comb(2 * n - i - j - 1, lower)
            if c.denominator != 1:
                raise ConsistencyError(f"non-integer coefficient {c} at x^{i - 1} y^{j - 1}")
            if c:
                terms[i - 1, j - 1] = int(c)
    return TuttePolynomial.from_terms(terms, n - 1, n - 1)


def catalan_binomial_identity(m: int) -> CheckReport:
    """Each stage of the chain sum (k/m) C(2m-k-1, m-k) 2^k = ... = C(2m, m)."""
    if m < 1:
        raise ValueError("identity needs m >= 1")
    first = sum(Fraction(k, m) * comb(2 * m - k - 1, m - k) * 2 ** k for k in range(m + 1))
    diff = lambda k: comb(2 * m - k - 1, m - 1) - comb(2 * m - k - 1, m)  # noqa: E731
    second = sum(diff(k) * 2 ** k for k in range(m + 1))
    third = sum(diff(k) * comb(k, j) for k in range(m + 1) for j in range(k + 1))
    fourth = sum(comb(2 * m, m + j) - comb(2 * m, m + j + 1) for j in range(m + 1))
    target = comb(2 * m, m)
    ok = first == second == third == fourth == target
    return CheckReport(
        "catalan-identity", {"m": m}, PASS if ok else FAIL,
        values={"weighted_sum": first, "difference_form": second, "double_sum": third,
                "telescoped": fourth, "central_binomial": target},
    )
