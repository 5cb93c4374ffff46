"""Case analysis over normalized Chern data ``(n, c1, c2)``.

Every candidate ends in one of four outcomes:

* ``Split``: ``c1^2 >= 4c2``; the bundle is unstable and the splitting
  criterion applies to the globally generated twist ``E(n-1)``.
* ``NonexistentDimension``: ``c1^2 < 4c2`` and ``n >= 12``; the certified
  sine bound contradicts the global-generation bound on ``c2(E(n-1))``.
* ``Excluded``: ``c1^2 < 4c2`` with ``5 <= n <= 11``; some numeric filter
  (nef alpha bound, Segre negativity on ``Q^6``, Riemann-Roch integrality on
  ``Q^5``) or the non-extension of Cayley bundles rules the datum out.
* ``Cayley``: the single survivor ``(5, -1, 1)``.

Candidates are independent, so ``classify`` can fan them out to a thread pool;
results are always returned in lexicographic ``(n, c1, c2)`` order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .bundles import ChernData, twist
from .errors import ContractError
from .filters import (
    DEFAULT_PRECISION,
    FilterVerdict,
    Status,
    bogomolov_verdict,
    gg_c2_upper,
    nef_bound_verdict,
    rr_integrality,
    segre_nef_obstruction,
    sin_incompatibility,
    splitting_criterion,
)

log = logging.getLogger("quadricfano.trace")

FORMATS = ("json", "csv", "markdown")
FORMULA_MODES = ("printed", "hrr", "both")

# Citation identifiers for the facts each record relies on.
BOGOMOLOV = "bogomolov-inequality"
GLOBAL_GENERATION = "global-generation"
SPLITTING_CRITERION = "splitting-criterion"
UNSTABLE_SPLITS = "unstable-splits"
SINE_BOUND = "sine-bound"
NONEXISTENCE_LARGE_N = "nonexistence-large-n"
NEF_TWIST = "nef-twist"
NEF_ALPHA_BOUND = "nef-alpha-bound"
SEGRE_Q6 = "segre-q6"
CHI_Q5 = "chi-q5"
RESTRICTION_Q5 = "restriction-to-q5"
LOW_DIMENSION = "low-dimension-case"
CAYLEY_CLASSIFICATION = "cayley-classification"
CAYLEY_NON_EXTENSION = "cayley-non-extension"

EXCLUSION_CITATIONS = frozenset(
    {BOGOMOLOV, SPLITTING_CRITERION, SINE_BOUND, SEGRE_Q6, CHI_Q5, NONEXISTENCE_LARGE_N, LOW_DIMENSION}
)


class Branch(str, Enum):
    DISCRIMINANT_NONNEG = "discriminant_nonneg"
    DISCRIMINANT_NEG = "discriminant_neg"

    def __str__(self) -> str:
        return self.value


class Outcome(str, Enum):
    SPLIT = "Split"
    CAYLEY = "Cayley"
    EXCLUDED = "Excluded"
    NONEXISTENT_DIMENSION = "NonexistentDimension"

    def __str__(self) -> str:
        return self.value


class ClassificationGap(RuntimeError):
    """A candidate survived every filter without reaching a recognized outcome."""


@dataclass(frozen=True)
class RunConfig:
    n_min: int = 5
    n_max: int = 11
    c2_max: int = 10
    format: str = "json"
    precision: int = DEFAULT_PRECISION
    formula_mode: str = "both"
    workers: int = 1

    def __post_init__(self) -> None:
        if self.n_min < 5:
            raise ContractError(f"n_min must be >= 5, got {self.n_min}")
        if self.n_max < self.n_min:
            raise ContractError(f"n_max ({self.n_max}) < n_min ({self.n_min})")
        if self.c2_max < 3:
            raise ContractError(f"c2_max must be >= 3, got {self.c2_max}")
        if self.format not in FORMATS:
            raise ContractError(f"unknown format {self.format!r}; choose from {FORMATS}")
        if self.formula_mode not in FORMULA_MODES:
            raise ContractError(f"unknown formula mode {self.formula_mode!r}; choose from {FORMULA_MODES}")
        if self.precision < 5:
            raise ContractError(f"precision must be >= 5 digits, got {self.precision}")
        if self.workers < 1:
            raise ContractError("workers must be >= 1")

    def candidates(self) -> list[tuple[int, int, int]]:
        """Lexicographic ``(n, c1, c2)`` with ``c1 in {-1, 0}`` and ``|c2| <= c2_max``."""
        return [
            (n, c1, c2)
            for n in range(self.n_min, self.n_max + 1)
            for c1 in (-1, 0)
            for c2 in range(-self.c2_max, self.c2_max + 1)
        ]


@dataclass(frozen=True)
class ClassificationRecord:
    n: int
    c1: int
    c2: int
    branch: Branch
    verdicts: tuple[FilterVerdict, ...]
    outcome: Outcome
    citations: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.outcome is Outcome.CAYLEY and (self.n, self.c1, self.c2) != (5, -1, 1):
            raise ContractError("only (5, -1, 1) can be labelled Cayley")
        statuses = {v.status for v in self.verdicts}
        if self.outcome in (Outcome.EXCLUDED, Outcome.NONEXISTENT_DIMENSION) and Status.EXCLUDED not in statuses:
            raise ContractError(f"{self.outcome} record {self.key} lacks an Excluded verdict")
        if (
            self.outcome is Outcome.SPLIT
            and Status.SPLIT_FORCED not in statuses
            and self.branch is not Branch.DISCRIMINANT_NONNEG
        ):
            raise ContractError(f"Split record {self.key} lacks a SplitForced verdict")

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.n, self.c1, self.c2)


def _trace(n: int, d: ChernData, v: FilterVerdict) -> FilterVerdict:
    if log.isEnabledFor(logging.DEBUG):
        wit = " ".join(f"{k}={w}" for k, w in v.witnesses.items())
        log.debug("Q^%d (%s, %s) %s %s %s", n, d.c1, d.c2, v.filter_id, v.status, wit)
    return v


def _unstable_branch(n: int, d: ChernData, verdicts: list[FilterVerdict]) -> ClassificationRecord:
    v = _trace(n, d, splitting_criterion(n, twist(d, n - 1)))
    verdicts.append(v)
    if v.status is not Status.SPLIT_FORCED:
        raise ClassificationGap(f"splitting criterion silent on unstable candidate Q^{n} {d}")
    return ClassificationRecord(
        n, int(d.c1), int(d.c2), Branch.DISCRIMINANT_NONNEG, tuple(verdicts), Outcome.SPLIT,
        (BOGOMOLOV, GLOBAL_GENERATION, SPLITTING_CRITERION, UNSTABLE_SPLITS),
    )


def _large_dimension(n: int, d: ChernData, verdicts: list[FilterVerdict], precision: int) -> ClassificationRecord:
    verdicts.append(_trace(n, d, gg_c2_upper(n, d)))
    v = _trace(n, d, sin_incompatibility(n, precision))
    verdicts.append(v)
    if v.status is not Status.EXCLUDED:
        raise ClassificationGap(f"sine bound not certified for n = {n} at {precision} digits")
    return ClassificationRecord(
        n, int(d.c1), int(d.c2), Branch.DISCRIMINANT_NEG, tuple(verdicts), Outcome.NONEXISTENT_DIMENSION,
        (GLOBAL_GENERATION, SINE_BOUND, NONEXISTENCE_LARGE_N),
    )


def _cayley_endgame(n: int, d: ChernData, verdicts: list[FilterVerdict]) -> ClassificationRecord:
    # unstable alternative: E(n-1) is globally generated and meets the splitting
    # criterion, but split data always have c1^2 >= 4c2, so this alternative
    # cannot occur on this branch.  The gap in the argument is flagged, not filled.
    sc = _trace(n, d, splitting_criterion(n, twist(d, n - 1)))
    verdicts.append(sc)
    verdicts.append(_trace(n, d, FilterVerdict(
        "unstable_alternative",
        Status.EXCLUDED,
        "if unstable, E splits; split data satisfy c1^2 >= 4c2, contradicting this branch "
        "(inference gap flagged: the contradiction is never stated in the original argument)",
        {"discriminant": d.discriminant, "bound": sc.witnesses.get("bound", Fraction(0))},
    )))
    citations = (LOW_DIMENSION, GLOBAL_GENERATION, SPLITTING_CRITERION, RESTRICTION_Q5, CAYLEY_CLASSIFICATION)
    if n == 5:
        verdicts.append(_trace(n, d, FilterVerdict(
            "cayley",
            Status.PASS,
            "if stable: stable rank-2 bundle on Q^5 with (c1, c2) = (-1, 1) is a Cayley bundle",
            {"c1": d.c1, "c2": d.c2},
        )))
        return ClassificationRecord(n, -1, 1, Branch.DISCRIMINANT_NEG, tuple(verdicts), Outcome.CAYLEY, citations)
    verdicts.append(_trace(n, d, FilterVerdict(
        "cayley_extension",
        Status.EXCLUDED,
        "if stable: the restriction to Q^5 is a Cayley bundle, and no Cayley bundle extends to Q^6",
        {"n": Fraction(n)},
    )))
    return ClassificationRecord(
        n, -1, 1, Branch.DISCRIMINANT_NEG, tuple(verdicts), Outcome.EXCLUDED, citations + (CAYLEY_NON_EXTENSION,)
    )


def classify_candidate(n: int, c1: int, c2: int, config: RunConfig | None = None) -> ClassificationRecord:
    config = config or RunConfig()
    if n < 5:
        raise ContractError(f"classification covers n >= 5, got {n}")
    d = ChernData(c1, c2)
    if not d.is_normalized or not d.is_integral:
        raise ContractError(f"expected normalized integral Chern data, got {d}")
    verdicts = [_trace(n, d, bogomolov_verdict(d))]

    if d.discriminant >= 0:
        return _unstable_branch(n, d, verdicts)
    if n >= 12:
        return _large_dimension(n, d, verdicts, config.precision)

    def excluded(*cites: str) -> ClassificationRecord:
        return ClassificationRecord(
            n, c1, c2, Branch.DISCRIMINANT_NEG, tuple(verdicts), Outcome.EXCLUDED, (LOW_DIMENSION,) + cites
        )

    v = _trace(n, d, nef_bound_verdict(n, d))
    verdicts.append(v)
    if v.status is Status.EXCLUDED:
        return excluded(NEF_TWIST, NEF_ALPHA_BOUND)

    if n == 6:
        v = _trace(n, d, segre_nef_obstruction(n, d))
        verdicts.append(v)
        if v.status is Status.EXCLUDED:
            return excluded(NEF_TWIST, SEGRE_Q6)

    decide_by = "printed" if config.formula_mode == "printed" else "hrr"
    v = _trace(n, d, rr_integrality(d, decide_by=decide_by))
    verdicts.append(v)
    if v.status is Status.EXCLUDED:
        return excluded(RESTRICTION_Q5, CHI_Q5)

    if (c1, c2) == (-1, 1):
        return _cayley_endgame(n, d, verdicts)
    raise ClassificationGap(f"candidate Q^{n} {d} survived every filter")


def classify(config: RunConfig | None = None) -> list[ClassificationRecord]:
    config = config or RunConfig()
    cands = config.candidates()
    if config.workers == 1:
        return [classify_candidate(n, c1, c2, config) for n, c1, c2 in cands]
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        records = list(pool.map(lambda c: classify_candidate(*c, config), cands))
    return sorted(records, key=lambda r: r.key)
