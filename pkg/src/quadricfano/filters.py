"""Exclusion filters over ``(n, c1, c2)`` for rank-2 bundles on ``Q^n``.

Each filter is a pure function that returns a :class:`FilterVerdict` carrying
exact witnesses.  Facts that cannot be decided from Chern data alone (global
generation of ``E(n-1)``, nefness of the normalized twist, existence of a
smooth zero locus) are taken as premises and named in the verdict's reason;
they are never checked here.

The only transcendental comparison, the sine bound used for ``n >= 12``, is
evaluated with interval arithmetic so every verdict is certified.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, isqrt
from typing import Union

import mpmath
from mpmath.libmp import to_rational

from .bundles import ChernData, s6_closed_form_q6, segre_recurrence, twist
from .chow import QuadricContext
from .errors import ContractError, NotApplicable
from .riemann_roch import chi_q5

Witness = Union[Fraction, str]

DEFAULT_PRECISION = 40


class Status(str, Enum):
    PASS = "Pass"
    EXCLUDED = "Excluded"
    NOT_APPLICABLE = "NotApplicable"
    SPLIT_FORCED = "SplitForced"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FilterVerdict:
    filter_id: str
    status: Status
    reason: str
    witnesses: dict[str, Witness] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status in (Status.EXCLUDED, Status.SPLIT_FORCED) and not self.witnesses:
            raise ContractError(f"{self.status} verdict from {self.filter_id} needs a numeric witness")


# -- exact quadratic irrationals ----------------------------------------------


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_surd(p, q, d: int) -> int:
    """Exact sign of ``p + q*sqrt(d)`` for rationals ``p, q`` and integer ``d >= 0``."""
    p, q = Fraction(p), Fraction(q)
    if d < 0:
        raise ContractError("negative radicand")
    r = isqrt(d)
    if r * r == d:
        return _sign(p + q * r)
    sp, sq = _sign(p), _sign(q)
    if sq == 0:
        return sp
    if sp == 0:
        return sq
    if sp == sq:
        return sp
    # opposite signs: compare magnitudes squared
    return sp * _sign(p * p - q * q * d)


@dataclass(frozen=True)
class QuadraticIrrational:
    """The number ``(a + b*sqrt(d)) / c`` with ``c > 0``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if self.c <= 0:
            raise ContractError("denominator must be positive")

    def __float__(self) -> float:
        return (self.a + self.b * self.d**0.5) / self.c

    def compare(self, x) -> int:
        """Sign of ``self - x`` for rational ``x``."""
        x = Fraction(x)
        return sign_surd(self.a - self.c * x, self.b, self.d)

    def times_at_most(self, x, bound) -> bool:
        """Exactly decide ``self * x <= bound`` for rationals ``x`` and ``bound``."""
        x, bound = Fraction(x), Fraction(bound)
        # c*bound - a*x - b*x*sqrt(d) >= 0
        return sign_surd(self.c * bound - self.a * x, -self.b * x, self.d) >= 0

    def __str__(self) -> str:
        if self.b == 0:
            return str(Fraction(self.a, self.c))
        root = f"{'' if self.b == 1 else self.b}sqrt({self.d})"
        head = f"{self.a} + {root}" if self.a else root
        return head if self.c == 1 else f"({head})/{self.c}"


@dataclass(frozen=True)
class AlphaEntry:
    n_values: frozenset[int]
    alpha: QuadraticIrrational


# Nef rank-2 bundles on Q^n satisfy c1^2 >= alpha * c2.
ALPHA_TABLE: tuple[AlphaEntry, ...] = (
    AlphaEntry(frozenset({5, 6}), QuadraticIrrational(3, 0, 1, 1)),
    AlphaEntry(frozenset({7, 8}), QuadraticIrrational(2, 1, 1, 2)),
    AlphaEntry(frozenset({9, 10}), QuadraticIrrational(5, 1, 2, 5)),
)
ALPHA_LARGE = QuadraticIrrational(2, 1, 1, 3)  # n >= 11


def alpha(n: int) -> QuadraticIrrational:
    if n < 5:
        raise NotApplicable(f"no alpha value recorded for n = {n}")
    for entry in ALPHA_TABLE:
        if n in entry.n_values:
            return entry.alpha
    return ALPHA_LARGE


# -- the projectivization ------------------------------------------------------


@dataclass(frozen=True)
class ProjectivizationData:
    """``X = P(E)`` over ``Q^n`` presented through the nef twist ``E0 = E((n - c1)/2)``.

    In this presentation ``-K_X = 2 xi_{E0}`` with no ``H`` part.
    """

    context: QuadricContext
    twisted: ChernData
    antican_xi: Fraction
    antican_h: Fraction
    segre: tuple[Fraction, ...]

    @property
    def twisted_antican_h(self) -> Fraction:
        """``H`` coefficient of ``-K`` written against ``xi_{E0}``; always 0."""
        return self.context.n - self.twisted.c1


def anticanonical_divisor(n: int, d: ChernData, t=0) -> tuple[Fraction, Fraction]:
    """``-K_{P(E)} = a xi_{E(t)} + b H``; returns ``(a, b)``.

    For ``t = 0`` this is ``(2, n - c1)``; twisting by ``t`` moves ``2t`` of the
    ``H`` part into the tautological class.
    """
    t = Fraction(t)
    return Fraction(2), Fraction(n) - d.c1 - 2 * t


def nef_twist_amount(n: int, d: ChernData) -> Fraction:
    return (Fraction(n) - d.c1) / 2


def projectivization(n: int, d: ChernData) -> ProjectivizationData:
    t = nef_twist_amount(n, d)
    e0 = twist(d, t)
    return ProjectivizationData(
        context=QuadricContext(n),
        twisted=e0,
        antican_xi=Fraction(2),
        antican_h=Fraction(n) - d.c1,
        segre=tuple(segre_recurrence(e0, n)),
    )


def anticanonical_degree(n: int, d: ChernData) -> Fraction:
    """``(-K)^{n+1}`` on ``P(E)`` as ``2^{n+1} deg s_n(E0)``."""
    data = projectivization(n, d)
    return data.antican_xi ** (n + 1) * 2 * data.segre[n]


def anticanonical_degree_expanded(n: int, d: ChernData) -> Fraction:
    """Same number computed without twisting: expand ``(2 xi_E + (n - c1) H)^{n+1}``
    binomially and push each ``xi^j`` forward to ``s_{j-1}(E)``."""
    a, b = anticanonical_divisor(n, d)
    s = segre_recurrence(d, n)
    total = Fraction(0)
    for j in range(1, n + 2):
        total += comb(n + 1, j) * a**j * b ** (n + 1 - j) * 2 * s[j - 1]
    return total


# -- filters ------------------------------------------------------------------


class BogomolovStatus(str, Enum):
    STABLE_IMPOSSIBLE = "StableImpossible"
    STABLE_POSSIBLE = "StablePossible"


def bogomolov_status(d: ChernData) -> BogomolovStatus:
    """Stable rank-2 bundles have ``c1^2 < 4 c2``; otherwise the bundle is unstable."""
    d.require_integral()
    if d.c1**2 >= 4 * d.c2:
        return BogomolovStatus.STABLE_IMPOSSIBLE
    return BogomolovStatus.STABLE_POSSIBLE


def bogomolov_verdict(d: ChernData) -> FilterVerdict:
    status = bogomolov_status(d)
    if status is BogomolovStatus.STABLE_IMPOSSIBLE:
        reason = "c1^2 >= 4c2: not stable, candidate enters the unstable branch"
    else:
        reason = "c1^2 < 4c2: stability not excluded"
    return FilterVerdict("bogomolov", Status.PASS, reason, {"discriminant": d.discriminant})


def splitting_criterion_bound(n: int, f: ChernData) -> Fraction:
    return (n - 2) * (f.c1 - n + 2) + n - 3


def splitting_criterion(n: int, f: ChernData) -> FilterVerdict:
    """Globally generated unstable rank-2 ``F`` on ``Q^n`` with
    ``c2(F) <= (n-2)(c1(F) - n + 2) + n - 3`` splits."""
    if n < 5:
        return FilterVerdict("splitting_criterion", Status.NOT_APPLICABLE, f"criterion needs n >= 5, got {n}")
    bound = splitting_criterion_bound(n, f)
    witnesses = {"c1_F": f.c1, "c2_F": f.c2, "bound": bound}
    premise = "premise: F globally generated and unstable"
    if f.c2 <= bound:
        return FilterVerdict("splitting_criterion", Status.SPLIT_FORCED, f"c2(F) <= bound; {premise}", witnesses)
    return FilterVerdict("splitting_criterion", Status.PASS, f"c2(F) > bound, criterion silent; {premise}", witnesses)


def nef_c2_bound(n: int, c1: int) -> int:
    """Largest integer ``c2`` with ``n^2 >= alpha(n) (c2 - c1^2/4 + n^2/4)``."""
    if not 5 <= n <= 11:
        raise NotApplicable(f"nef c2 bound is used for 5 <= n <= 11, got {n}")
    if c1 not in (0, -1):
        raise ContractError(f"c1 must be normalized (0 or -1), got {c1}")
    a = alpha(n)
    c1 = Fraction(c1)

    def holds(c2: int) -> bool:
        return a.times_at_most(c2 - c1**2 / 4 + Fraction(n * n, 4), n * n)

    # alpha < 4 makes c2 = 0 admissible and the admissible set is a down-set
    c2 = 0
    assert holds(c2)
    while holds(c2 + 1):
        c2 += 1
    return c2


def nef_bound_verdict(n: int, d: ChernData) -> FilterVerdict:
    bound = nef_c2_bound(n, int(d.c1))
    witnesses: dict[str, Witness] = {"c2": d.c2, "c2_max": Fraction(bound), "alpha": str(alpha(n))}
    premise = "premise: E((n-c1)/2) nef"
    if d.c2 > bound:
        return FilterVerdict("nef_alpha_bound", Status.EXCLUDED, f"c2 exceeds the nef alpha bound; {premise}", witnesses)
    return FilterVerdict("nef_alpha_bound", Status.PASS, f"c2 within the nef alpha bound; {premise}", witnesses)


def segre_nef_obstruction(n: int, d: ChernData) -> FilterVerdict:
    """A nef bundle has non-negative top Segre number; test it on ``E((n - c1)/2)``."""
    data = projectivization(n, d)
    top = 2 * data.segre[n]
    witnesses: dict[str, Witness] = {
        "twist": nef_twist_amount(n, d),
        "c1_E0": data.twisted.c1,
        "c2_E0": data.twisted.c2,
        f"s{n}": top,
    }
    if n == 6:
        witnesses["s6_closed_form"] = s6_closed_form_q6(data.twisted)
    premise = "premise: E((n-c1)/2) nef"
    if top < 0:
        return FilterVerdict("segre_nef", Status.EXCLUDED, f"top Segre number of the nef twist is negative; {premise}", witnesses)
    return FilterVerdict("segre_nef", Status.PASS, f"top Segre number of the nef twist is non-negative; {premise}", witnesses)


def rr_integrality(d: ChernData, decide_by: str = "hrr") -> FilterVerdict:
    """Euler characteristic of the restriction to ``Q^5`` must be an integer.

    Both closed forms are evaluated; ``decide_by`` picks the one that rules.
    """
    d.require_integral()
    if decide_by not in ("hrr", "printed"):
        raise ContractError(f"unknown formula mode {decide_by!r}")
    values = {mode: chi_q5(d, mode) for mode in ("hrr", "printed")}
    integral = {mode: v.denominator == 1 for mode, v in values.items()}
    witnesses: dict[str, Witness] = {
        "chi_hrr": values["hrr"],
        "chi_printed": values["printed"],
        "modes_agree": "yes" if integral["hrr"] == integral["printed"] else "no",
    }
    if not integral[decide_by]:
        return FilterVerdict("rr_integrality", Status.EXCLUDED, f"chi(E|Q^5) is not an integer ({decide_by})", witnesses)
    return FilterVerdict("rr_integrality", Status.PASS, f"chi(E|Q^5) is an integer ({decide_by})", witnesses)


def gg_c2_upper(n: int, d: ChernData) -> FilterVerdict:
    """Globally generated ``F = E(n-1)`` satisfies ``c1(F)^2 >= 3 c2(F)``."""
    if not d.is_normalized:
        raise ContractError(f"expected normalized Chern data, got {d}")
    f = twist(d, n - 1)
    witnesses: dict[str, Witness] = {
        "c2_F": f.c2,
        "c1_F_sq_over_3": f.c1**2 / 3,
        "coarse_bound": Fraction(4, 3) * (n - 1) ** 2,
    }
    premise = "premise: E(n-1) globally generated"
    if f.c2 > f.c1**2 / 3:
        return FilterVerdict("gg_c2_upper", Status.EXCLUDED, f"c2(F) > c1(F)^2/3; {premise}", witnesses)
    return FilterVerdict("gg_c2_upper", Status.PASS, f"c2(F) <= c1(F)^2/3; {premise}", witnesses)


# -- certified sine bound ------------------------------------------------------

# mpmath keeps its working precision in a global context
_MP_LOCK = threading.Lock()


@dataclass(frozen=True)
class CertifiedValue:
    """A real number enclosed in ``[lower, upper]`` with exact rational endpoints."""

    lower: Fraction
    upper: Fraction
    precision: int

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    @property
    def radius(self) -> Fraction:
        return (self.upper - self.lower) / 2

    def render(self, digits: int | None = None) -> str:
        """Decimal with ``digits`` places and an error suffix covering radius and rounding."""
        digits = digits or self.precision
        scaled = round(self.midpoint * 10**digits)
        sign = "-" if scaled < 0 else ""
        whole, frac = divmod(abs(scaled), 10**digits)
        text = f"{sign}{whole}.{frac:0{digits}d}"
        err = self.radius + abs(self.midpoint - Fraction(scaled, 10**digits))
        exp = -digits
        while Fraction(10) ** exp < err:
            exp += 1
        return f"{text} ±1e{exp}"


def _enclose(build, precision: int) -> CertifiedValue:
    with _MP_LOCK:
        old = mpmath.iv.dps
        mpmath.iv.dps = precision
        try:
            lo, hi = build(mpmath.iv)._mpi_
        finally:
            mpmath.iv.dps = old
    return CertifiedValue(Fraction(*to_rational(lo)), Fraction(*to_rational(hi)), precision)


def sine_gap(m: int, precision: int = DEFAULT_PRECISION) -> CertifiedValue:
    """Enclosure of ``sqrt(213)/4 - m sin(pi/m)``.

    The value is positive exactly when ``(4/3) m^2 < 71 / (4 sin^2(pi/m))``.
    """
    if m < 1:
        raise ContractError("m must be positive")
    return _enclose(lambda iv: iv.sqrt(213) / 4 - m * iv.sin(iv.pi / m), precision)


def sine_gap_limit(precision: int = DEFAULT_PRECISION) -> CertifiedValue:
    """Enclosure of ``sqrt(213)/4 - pi``, a lower bound for every ``sine_gap(m)``
    since ``m sin(pi/m) < pi``."""
    return _enclose(lambda iv: iv.sqrt(213) / 4 - iv.pi, precision)


def sin_incompatibility(n: int, precision: int = DEFAULT_PRECISION) -> FilterVerdict:
    """For ``n >= 12`` the upper bound ``c2(F) <= (4/3)(n-1)^2`` from global
    generation and the lower bound ``c2(F) > 71 / (4 sin^2(pi/(n-1)))`` for
    stable ``F`` with a smooth codimension-2 zero locus are incompatible."""
    if n < 12:
        return FilterVerdict("sin_bound", Status.NOT_APPLICABLE, f"sine bound needs n >= 12, got {n}")
    m = n - 1
    gap = sine_gap(m, precision)
    witnesses: dict[str, Witness] = {
        "m": Fraction(m),
        "c2_F_upper": Fraction(4, 3) * m * m,
        f"f(1/{m})": gap.render(),
    }
    premise = "premises: E(n-1) globally generated; section with smooth codimension-2 zero locus"
    if gap.lower > 0 and gap.midpoint > gap.radius:
        return FilterVerdict("sin_bound", Status.EXCLUDED, f"bounds on c2(F) incompatible; {premise}", witnesses)
    return FilterVerdict("sin_bound", Status.PASS, f"incompatibility not certified at this precision; {premise}", witnesses)


def sine_gap_monotonicity(samples: int = 200, precision: int = 30) -> str:
    """Classify ``x -> sqrt(213)/4 - sin(pi x)/x`` on the grid ``j / (11 samples)``,
    ``j = 1..samples``, as ``"increasing"``, ``"decreasing"`` or ``"neither"``.

    Consecutive enclosures must be disjoint for a strict verdict.
    """
    values = [
        _enclose(lambda iv, j=j: iv.sqrt(213) / 4 - iv.sin(iv.pi * iv.mpf(j) / (11 * samples)) * (11 * samples) / j, precision)
        for j in range(1, samples + 1)
    ]
    pairs = list(zip(values, values[1:]))
    if all(a.upper < b.lower for a, b in pairs):
        return "increasing"
    if all(a.lower > b.upper for a, b in pairs):
        return "decreasing"
    return "neither"
