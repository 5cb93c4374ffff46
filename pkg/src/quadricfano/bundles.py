"""Chern-data arithmetic for rank-2 bundles whose Chern classes are multiples of
``H`` and ``H^2``.

Chern data are exact rationals.  Integral values describe honest bundles;
half-integral twists such as ``E(7/2)`` are formal and are allowed so that
the normalized nef twist ``E((n - c1)/2)`` can be formed for odd ``c1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import series
from .chow import ChowClass, QuadricContext
from .errors import ContractError


@dataclass(frozen=True)
class ChernData:
    c1: Fraction
    c2: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1", Fraction(self.c1))
        object.__setattr__(self, "c2", Fraction(self.c2))

    rank = 2

    @property
    def discriminant(self) -> Fraction:
        """``c1^2 - 4 c2``; invariant under twisting."""
        return self.c1**2 - 4 * self.c2

    @property
    def is_integral(self) -> bool:
        return self.c1.denominator == 1 and self.c2.denominator == 1

    @property
    def is_normalized(self) -> bool:
        return self.c1 in (0, -1)

    def require_integral(self) -> None:
        if not self.is_integral:
            raise ContractError(f"expected integral Chern data, got {self}")

    def __str__(self) -> str:
        return f"(c1={self.c1}, c2={self.c2})"


def split(a, b) -> ChernData:
    """Chern data of ``O(a) + O(b)``."""
    return ChernData(Fraction(a) + Fraction(b), Fraction(a) * Fraction(b))


def twist(d: ChernData, t) -> ChernData:
    """Chern data of ``E(t)``: ``(c1 + 2t, c2 + t c1 + t^2)``."""
    t = Fraction(t)
    return ChernData(d.c1 + 2 * t, d.c2 + t * d.c1 + t * t)


def segre_recurrence(d: ChernData, i_max: int) -> list[Fraction]:
    """Segre numbers ``s_0..s_{i_max}`` from ``s_i = c1 s_{i-1} - c2 s_{i-2}``."""
    if i_max < 0:
        raise ContractError("i_max must be non-negative")
    s = [Fraction(1), d.c1]
    for _ in range(2, i_max + 1):
        s.append(d.c1 * s[-1] - d.c2 * s[-2])
    return s[: i_max + 1]


def segre_inversion(d: ChernData, i_max: int) -> list[Fraction]:
    """Segre numbers as the coefficients of ``1 / (1 - c1 t + c2 t^2)``."""
    if i_max < 0:
        raise ContractError("i_max must be non-negative")
    return list(series.inverse((1, -d.c1, d.c2), i_max))


def s6_closed_form_q6(d: ChernData) -> Fraction:
    """Top Segre number on ``Q^6`` with the degree factor 2 already applied:
    ``2c1^6 - 10c1^4c2 + 12c1^2c2^2 - 2c2^3``."""
    c1, c2 = d.c1, d.c2
    return 2 * c1**6 - 10 * c1**4 * c2 + 12 * c1**2 * c2**2 - 2 * c2**3


def power_sums(d: ChernData, i_max: int) -> list[Fraction]:
    """Newton power sums ``p_i = a^i + b^i`` of the Chern roots; ``p_0 = 2``."""
    p = [Fraction(2), d.c1]
    for _ in range(2, i_max + 1):
        p.append(d.c1 * p[-1] - d.c2 * p[-2])
    return p[: i_max + 1]


def chern_character(d: ChernData, n: int) -> ChowClass:
    """``ch(E) = 2 + sum_i p_i / i! H^i`` truncated at codimension ``n``."""
    context = QuadricContext(n)
    p = power_sums(d, n)
    return ChowClass(context, tuple(pi / factorial(i) for i, pi in enumerate(p)))


def total_chern_class(d: ChernData, n: int) -> ChowClass:
    return ChowClass.from_map(QuadricContext(n), {0: 1, 1: d.c1, 2: d.c2})
