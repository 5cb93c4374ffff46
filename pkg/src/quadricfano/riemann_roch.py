"""Euler characteristics on quadrics.

``chi_hrr`` pairs the Chern character with the Todd class of the quadric.  The
Todd class comes from the Euler sequence of the ambient projective space and
the normal bundle ``O(2)``::

    td(T_Q) = Q(H)^(n+2) / Q(2H),    Q(x) = x / (1 - e^(-x))

``chi_line_oracle`` is an independent count from the sequence
``0 -> O_P(a-2) -> O_P(a) -> O_Q(a) -> 0`` and is used to check the series
route on split bundles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Literal

from . import series
from .bundles import ChernData, chern_character
from .chow import ChowClass, QuadricContext, degree
from .errors import ContractError, NotApplicable

DEFAULT_MAX_DIMENSION = 12

Formula = Literal["printed", "hrr"]


@dataclass(frozen=True)
class ToddClass:
    context: QuadricContext
    value: ChowClass


@lru_cache(maxsize=None)
def _todd_coeffs(n: int) -> tuple[Fraction, ...]:
    gen = series.todd_generator(n)
    numerator = series.power(gen, n + 2, n)
    normal = series.rescale(gen, 2, n)
    return series.mul(numerator, series.inverse(normal, n), n)


def todd_tangent(context: QuadricContext, max_dimension: int = DEFAULT_MAX_DIMENSION) -> ToddClass:
    if context.n < 3:
        raise ContractError(f"Todd class is provided for n >= 3, got n = {context.n}")
    if context.n > max_dimension:
        raise ContractError(f"n = {context.n} exceeds the configured cap {max_dimension}")
    return ToddClass(context, ChowClass(context, _todd_coeffs(context.n)))


def chi_hrr(context: QuadricContext, d: ChernData, max_dimension: int = DEFAULT_MAX_DIMENSION) -> Fraction:
    """``deg(ch(E) * td(Q^n))``; formal (possibly non-integral) for rational data."""
    td = todd_tangent(context, max_dimension)
    return degree(chern_character(d, context.n) * td.value)


def chi_q5(d: ChernData, formula: Formula = "hrr") -> Fraction:
    """Closed-form Euler characteristic of a rank-2 bundle on ``Q^5``.

    ``printed`` uses the quadratic term ``55/24 (c1^2 - c2)``; ``hrr`` uses
    ``55/24 (c1^2 - 2 c2)``, which is what the Todd class actually produces.
    All other terms coincide.
    """
    c1, c2 = d.c1, d.c2
    if formula == "printed":
        quadratic = c1**2 - c2
    elif formula == "hrr":
        quadratic = c1**2 - 2 * c2
    else:
        raise ContractError(f"unknown formula mode {formula!r}")
    return (
        2
        + Fraction(894, 360) * c1
        + Fraction(55, 24) * quadratic
        + c1**3
        - 3 * c1 * c2
        + Fraction(5, 24) * (c1**4 - 4 * c1**2 * c2 + 2 * c2**2)
        + Fraction(1, 60) * (c1**5 - 5 * c1**3 * c2 + 5 * c1 * c2**2)
    )


def _binom(p: int, q: int) -> Fraction:
    # polynomial binomial p(p-1)...(p-q+1)/q!, valid for negative p
    num = 1
    for i in range(q):
        num *= p - i
    return Fraction(num, factorial(q))


def chi_line_oracle(context: QuadricContext, a: int) -> int:
    """``chi(O_Q(a)) = C(n+1+a, n+1) - C(n-1+a, n+1)`` as binomial polynomials."""
    n = context.n
    value = _binom(n + 1 + a, n + 1) - _binom(n - 1 + a, n + 1)
    assert value.denominator == 1
    return int(value)


def h0_line_oracle(context: QuadricContext, a: int) -> int:
    """Sections of ``O_Q(a)``; equals the Euler characteristic for ``a >= 0``."""
    if a < 0:
        raise NotApplicable("h0 oracle covers a >= 0 only")
    return chi_line_oracle(context, a)
