"""One test per acceptance criterion; each records a pass/fail line shown in the terminal summary."""

import random
import time
from fractions import Fraction
from math import comb

import pytest

from quadricfano import (
    ChernData, QuadricContext, RunConfig, anticanonical_degree, chi_hrr, chi_line_oracle, chi_q5, classify,
    degree, hyperplane, middle_relations_check, nef_c2_bound, s6_closed_form_q6, segre_inversion,
    segre_recurrence, sin_incompatibility, sine_gap, split, splitting_criterion, twist, verify_paper,
)
from quadricfano.classifier import Outcome
from quadricfano.filters import Status
from quadricfano.replay import PRINTED_SEGRE, CheckStatus

import oracles


@pytest.fixture(scope="module")
def checks():
    return {c.claim_id: c for c in verify_paper()}


def _printed(text: str) -> Fraction:
    # printed constants are products like "2^4*6^3*(-7)" or "(1/32)*(-186046)"
    value = Fraction(1)
    for factor in text.split("*"):
        base, _, exp = factor.strip("()").partition("^")
        value *= Fraction(base) ** int(exp or 1)
    return value


def _timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def test_chow_relations(acceptance_line):
    def run():
        ok = True
        for n in range(3, 13):
            ctx = QuadricContext(n)
            ok &= degree(hyperplane(ctx) ** n) == 2
            if n % 2:
                ok &= middle_relations_check(ctx)
        return ok

    ok, dt = _timed(run)
    acceptance_line("1 chow relations", ok and dt < 0.1, f"n in [3,12], {dt:.3f}s")
    assert ok and dt < 0.1


def test_split_hrr_oracle(acceptance_line):
    ctx = QuadricContext(5)

    def run():
        bad = [(a, b) for a in range(-6, 7) for b in range(-6, 7)
               if chi_hrr(ctx, split(a, b)) != chi_line_oracle(ctx, a) + chi_line_oracle(ctx, b)]
        return bad

    bad, dt = _timed(run)
    ok = not bad and dt < 1
    acceptance_line("2 split HRR oracle", ok, f"169 pairs, {len(bad)} mismatches, {dt:.3f}s")
    assert ok


def test_printed_chi_values(acceptance_line, checks):
    printed = {(0, 2): Fraction(-11, 12), (-1, 2): Fraction(9, 4), (0, 1): Fraction(1, 8)}
    ok = True
    for (c1, c2), value in printed.items():
        d = ChernData(c1, c2)
        ok &= chi_q5(d, "printed") == value
        ok &= chi_q5(d, "hrr").denominator != 1
        c = checks[f"chi-hrr({c1},{c2})"]
        ok &= c.status is CheckStatus.CONCLUSION_AGREES and "integrality" in c.conclusion
    acceptance_line("3 chi values on Q^5", ok, "printed -11/12, 9/4, 1/8; hrr non-integral")
    assert ok


def test_segre_consistency(acceptance_line):
    rng = random.Random(20261017)

    def run():
        ok = True
        for _ in range(100):
            d = ChernData(rng.randint(-20, 20), rng.randint(-20, 20))
            ok &= segre_recurrence(d, 10) == segre_inversion(d, 10)
        for _ in range(50):
            d = ChernData(rng.randint(-20, 20), rng.randint(-20, 20))
            s = segre_recurrence(d, 5)
            ok &= all(f(d) == s[i] for i, (_, f) in PRINTED_SEGRE.items())
        return ok

    ok, dt = _timed(run)
    acceptance_line("4 segre consistency", ok and dt < 1, f"100 + 50 random pairs, {dt:.3f}s")
    assert ok and dt < 1


def test_q6_obstructions(acceptance_line, checks):
    a = s6_closed_form_q6(twist(ChernData(0, 3), 3))
    b = s6_closed_form_q6(twist(ChernData(-1, 3), Fraction(7, 2)))
    ca, cb = checks["s6-q6(0,3,t=3)"], checks["s6-q6(-1,3,t=7/2)"]
    ok = (
        a < 0 and b < 0
        and ca.status is cb.status is CheckStatus.CONCLUSION_AGREES
        and ca.recomputed_value == -3456 and cb.recomputed_value == Fraction(-82223, 32)
        and _printed(ca.paper_value) == -24192 and _printed(cb.paper_value) == Fraction(-186046, 32)
        and "sign" in ca.conclusion and "sign" in cb.conclusion
    )
    acceptance_line("5 Q^6 obstructions", ok, f"s6 = {a}, {b}; printed -24192, -186046/32")
    assert ok


def test_nef_bounds(acceptance_line):
    def run():
        return all(
            (nef_c2_bound(n, c1) == 3) == (n == 6) and nef_c2_bound(n, c1) in (2, 3)
            for n in range(5, 12) for c1 in (0, -1)
        )

    ok, dt = _timed(run)
    acceptance_line("6 nef alpha bounds", ok and dt < 0.1, f"3 iff n = 6, else 2; {dt:.3f}s")
    assert ok and dt < 0.1


def test_sine_bound(acceptance_line):
    def run():
        gap = sine_gap(11)
        ok = abs(gap.midpoint - Fraction(5495, 10000)) < Fraction(1, 10**4) and gap.radius < gap.lower
        for n in range(12, 201):
            v = sin_incompatibility(n)
            ok &= v.status is Status.EXCLUDED
        return ok, gap

    (ok, gap), dt = _timed(run)
    ok = ok and dt < 2
    acceptance_line("7 sine bound", ok, f"f(1/11) = {gap.render(12)}; n in [12,200] excluded; {dt:.3f}s")
    assert ok


def test_splitting_instances(acceptance_line):
    ok = True
    for d, twisted, bound in ((ChernData(-1, 1), (7, 13), 14), (ChernData(0, 0), (8, 16), 17)):
        f = twist(d, 4)
        v = splitting_criterion(5, f)
        ok &= (f.c1, f.c2) == twisted and v.status is Status.SPLIT_FORCED and v.witnesses["bound"] == bound
    acceptance_line("8 splitting instances", ok, "13 <= 14 and 16 <= 17")
    assert ok


def test_classification_survivor(acceptance_line):
    def run():
        return classify(RunConfig(n_min=5, n_max=11))

    records, dt = _timed(run)
    survivors = [r for r in records if r.outcome not in (Outcome.SPLIT, Outcome.EXCLUDED)]
    ok = (
        [(r.key, r.outcome) for r in survivors] == [((5, -1, 1), Outcome.CAYLEY)]
        and classify(RunConfig(n_min=5, n_max=11)) == records
        and dt < 5
    )
    acceptance_line("9 classification", ok, f"{len(records)} records, sole survivor (5,-1,1) Cayley, {dt:.3f}s")
    assert ok


def test_bigness_witness(acceptance_line):
    n, d = 5, ChernData(-1, 1)
    value = anticanonical_degree(n, d)
    # expand (2 xi + (n - c1) H)^{n+1}; pi_* xi^j = s_{j-1}, deg H^n = 2
    b = n - (-1)
    oracle = sum(comb(n + 1, j) * 2**j * b ** (n + 1 - j) * 2 * oracles.segre_roots(-1, 1, j - 1)
                 for j in range(1, n + 2))
    ok = value == oracle == 46080
    acceptance_line("10 bigness witness", ok, f"(-K)^6 = {value}, oracle {oracle}")
    assert ok


def test_twist_identity(acceptance_line):
    rng = random.Random(7)
    ok = True
    for _ in range(100):
        c1, c2, n = rng.randint(-50, 50), rng.randint(-50, 50), rng.randint(5, 12)
        f = twist(ChernData(c1, c2), n - 1)
        ok &= f.c1 == c1 + 2 * (n - 1) and f.c2 == c2 + (n - 1) * c1 + (n - 1) ** 2
        ok &= (f.c1, f.c2) == oracles.twist_by_roots(c1, c2, n - 1) if c1 * c1 >= 4 * c2 else True
    acceptance_line("11 twist identity", ok, "100 random integral d, n in [5,12]")
    assert ok
