"""Truncated univariate power series with exact rational coefficients.

A series is a tuple ``(a_0, a_1, ..., a_N)`` of :class:`fractions.Fraction`;
every operation keeps terms up to the requested order ``N`` and drops the rest.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

Series = tuple[Fraction, ...]


def as_series(coeffs: Iterable, order: int) -> Series:
    """Coerce ``coeffs`` to a series of length ``order + 1`` (pad or truncate)."""
    out = [Fraction(c) for c in coeffs][: order + 1]
    out.extend([Fraction(0)] * (order + 1 - len(out)))
    return tuple(out)


def mul(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> Series:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += ai * bj
    return tuple(out)


def inverse(a: Sequence[Fraction], order: int) -> Series:
    """Multiplicative inverse, solved coefficient by coefficient.

    Raises ZeroDivisionError if the constant term vanishes.
    """
    a = as_series(a, order)
    if a[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    inv = [Fraction(0)] * (order + 1)
    inv[0] = 1 / a[0]
    for k in range(1, order + 1):
        acc = sum((a[j] * inv[k - j] for j in range(1, k + 1)), Fraction(0))
        inv[k] = -acc / a[0]
    return tuple(inv)


def power(a: Sequence[Fraction], e: int, order: int) -> Series:
    if e < 0:
        return power(inverse(a, order), -e, order)
    result = as_series([1], order)
    base = as_series(a, order)
    while e:
        if e & 1:
            result = mul(result, base, order)
        e >>= 1
        if e:
            base = mul(base, base, order)
    return result


def rescale(a: Sequence[Fraction], factor, order: int) -> Series:
    """Substitute ``x -> factor * x``."""
    factor = Fraction(factor)
    return tuple(c * factor**i for i, c in enumerate(as_series(a, order)))


def exp_minus_one_over_x(order: int) -> Series:
    """Coefficients of ``(1 - exp(-x)) / x``, i.e. ``(-1)^k / (k+1)!``."""
    return tuple(Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1))


def todd_generator(order: int) -> Series:
    """The series ``x / (1 - exp(-x))``."""
    return inverse(exp_minus_one_over_x(order), order)
