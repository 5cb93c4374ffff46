"""The subring of the rational Chow ring of a smooth quadric ``Q^n`` generated
by the hyperplane class ``H``.

Classes are stored as polynomials in ``H`` truncated above codimension ``n``.
The degree map sends ``H^n`` to 2, the degree of the quadric.  For odd
``n = 2k + 1`` the middle generator ``P`` is not stored separately; it is the
class ``H^{k+1} / 2``.

>>> Q5 = QuadricContext(5)
>>> degree(hyperplane(Q5) ** 5)
Fraction(2, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from . import series
from .errors import ContractError, NotApplicable

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class QuadricContext:
    """The ambient quadric ``Q^n``.

    The Picard group is generated by ``H`` only for ``n >= 3``; smaller ``n``
    is accepted so that series truncated at low order can still be wrapped as
    classes (e.g. a Chern character cut at codimension 2).
    """

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ContractError(f"quadric dimension must be a positive integer, got {self.n!r}")

    @property
    def k(self) -> int | None:
        """Middle index for odd ``n = 2k + 1``; ``None`` for even ``n``."""
        return (self.n - 1) // 2 if self.n % 2 else None

    @property
    def top_degree(self) -> Fraction:
        return Fraction(2)


@dataclass(frozen=True)
class ChowClass:
    context: QuadricContext
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", series.as_series(self.coeffs, self.context.n))

    @classmethod
    def from_map(cls, context: QuadricContext, terms: Mapping[int, Scalar]) -> "ChowClass":
        """Build a class from ``{codimension: coefficient}``; codim > n is dropped."""
        coeffs = [Fraction(0)] * (context.n + 1)
        for codim, c in terms.items():
            if codim < 0:
                raise ContractError(f"negative codimension {codim}")
            if codim <= context.n:
                coeffs[codim] += Fraction(c)
        return cls(context, tuple(coeffs))

    def __getitem__(self, codim: int) -> Fraction:
        if 0 <= codim <= self.context.n:
            return self.coeffs[codim]
        return Fraction(0)

    def as_map(self) -> dict[int, Fraction]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def _check(self, other: "ChowClass") -> None:
        if not isinstance(other, ChowClass):
            raise ContractError(f"expected a ChowClass, got {type(other).__name__}")
        if other.context != self.context:
            raise ContractError(f"context mismatch: Q^{self.context.n} vs Q^{other.context.n}")

    def _lift(self, other) -> "ChowClass":
        if isinstance(other, (int, Fraction)):
            return ChowClass.from_map(self.context, {0: other})
        self._check(other)
        return other

    def __add__(self, other) -> "ChowClass":
        other = self._lift(other)
        return ChowClass(self.context, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.context, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "ChowClass":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "ChowClass":
        return self._lift(other) - self

    def __mul__(self, other) -> "ChowClass":
        return mul(self, self._lift(other))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "ChowClass":
        if e < 0:
            raise ContractError("negative powers are only defined for units; use series.inverse")
        return ChowClass(self.context, series.power(self.coeffs, e, self.context.n))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*H^{i}")
        return f"ChowClass(Q^{self.context.n}: {' + '.join(terms) or '0'})"


def hyperplane(context: QuadricContext) -> ChowClass:
    return ChowClass.from_map(context, {1: 1})


def unit(context: QuadricContext) -> ChowClass:
    return ChowClass.from_map(context, {0: 1})


def from_coeffs(context: QuadricContext, coeffs: Iterable[Scalar]) -> ChowClass:
    return ChowClass(context, tuple(Fraction(c) for c in coeffs))


def mul(a: ChowClass, b: ChowClass) -> ChowClass:
    """Product of two classes, truncated above codimension ``n``."""
    a._check(b)
    return ChowClass(a.context, series.mul(a.coeffs, b.coeffs, a.context.n))


def degree(a: ChowClass) -> Fraction:
    """Degree of the top-codimension part: ``deg(H^n) = 2``."""
    return a.context.top_degree * a.coeffs[a.context.n]


def middle_class(context: QuadricContext) -> ChowClass:
    """The generator ``P`` of the middle Chow group of an odd quadric, as ``H^{k+1}/2``."""
    if context.k is None:
        raise NotApplicable(f"Q^{context.n} has even dimension; no single middle generator")
    return ChowClass.from_map(context, {context.k + 1: Fraction(1, 2)})


def middle_relations_check(context: QuadricContext) -> bool:
    """Check ``H^{k+1} = 2P`` and ``deg(H^k * P) = 1`` for ``n = 2k + 1``.

    Raises NotApplicable for even ``n``.
    """
    P = middle_class(context)
    k = context.k
    H = hyperplane(context)
    return H ** (k + 1) == 2 * P and degree(H**k * P) == 1
