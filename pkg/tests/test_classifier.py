import pytest

from quadricfano.classifier import (
    EXCLUSION_CITATIONS, Branch, ClassificationGap, ClassificationRecord, Outcome, RunConfig, classify,
    classify_candidate,
)
from quadricfano.errors import ContractError
from quadricfano.filters import FilterVerdict, Status


@pytest.fixture(scope="module")
def default_records():
    return classify()


def test_single_cayley(default_records):
    non_split = [r.key for r in default_records if r.outcome not in (Outcome.SPLIT, Outcome.EXCLUDED)]
    assert non_split == [(5, -1, 1)]
    (cayley,) = [r for r in default_records if r.outcome is Outcome.CAYLEY]
    assert cayley.branch is Branch.DISCRIMINANT_NEG


def test_enumeration_order(default_records):
    keys = [r.key for r in default_records]
    assert keys == sorted(keys)
    assert len(keys) == 7 * 2 * 21


def test_branches(default_records):
    for r in default_records:
        nonneg = r.c1**2 >= 4 * r.c2
        assert (r.branch is Branch.DISCRIMINANT_NONNEG) == nonneg
        if nonneg:
            assert r.outcome is Outcome.SPLIT
            assert r.verdicts[-1].status is Status.SPLIT_FORCED


def test_excluded_records_cite_exclusion(default_records):
    for r in default_records:
        if r.outcome is Outcome.EXCLUDED:
            assert set(r.citations) & EXCLUSION_CITATIONS
            assert any(v.status is Status.EXCLUDED for v in r.verdicts)
        for v in r.verdicts:
            if v.status in (Status.EXCLUDED, Status.SPLIT_FORCED):
                assert v.witnesses


def test_q6_segre_record(default_records):
    (r,) = [r for r in default_records if r.key == (6, 0, 3)]
    assert r.outcome is Outcome.EXCLUDED
    assert r.verdicts[-1].filter_id == "segre_nef"
    assert r.verdicts[-1].witnesses["s6"] == -3456


def test_cayley_does_not_extend(default_records):
    for n in range(6, 12):
        (r,) = [r for r in default_records if r.key == (n, -1, 1)]
        assert r.outcome is Outcome.EXCLUDED
        assert r.verdicts[-1].filter_id == "cayley_extension"


def test_unstable_alternative_flagged(default_records):
    (r,) = [r for r in default_records if r.key == (5, -1, 1)]
    ids = [v.filter_id for v in r.verdicts]
    assert ids[-3:] == ["splitting_criterion", "unstable_alternative", "cayley"]
    assert "inference gap" in r.verdicts[-2].reason


def test_large_dimension():
    records = classify(RunConfig(n_min=12, n_max=14))
    for r in records:
        if r.branch is Branch.DISCRIMINANT_NEG:
            assert r.outcome is Outcome.NONEXISTENT_DIMENSION
            assert r.verdicts[-1].filter_id == "sin_bound"
        else:
            assert r.outcome is Outcome.SPLIT


def test_parallel_equivalence(default_records):
    assert classify(RunConfig(workers=4)) == default_records


def test_printed_mode_loses_cayley():
    # with the printed quadratic term, chi at (-1, 1) is 31/24
    records = classify(RunConfig(n_max=5, formula_mode="printed"))
    (r,) = [r for r in records if r.key == (5, -1, 1)]
    assert r.outcome is Outcome.EXCLUDED
    assert r.verdicts[-1].filter_id == "rr_integrality"


@pytest.mark.parametrize("kwargs", [
    {"n_min": 4}, {"n_max": 4}, {"c2_max": 2}, {"format": "xml"}, {"formula_mode": "x"}, {"workers": 0},
    {"precision": 1},
])
def test_config_rejected(kwargs):
    with pytest.raises(ContractError):
        RunConfig(**kwargs)


def test_candidate_guards():
    with pytest.raises(ContractError):
        classify_candidate(5, 1, 0)
    with pytest.raises(ContractError):
        classify_candidate(4, 0, 0)


def test_record_invariants():
    v = FilterVerdict("x", Status.PASS, "r")
    with pytest.raises(ContractError):
        ClassificationRecord(6, -1, 1, Branch.DISCRIMINANT_NEG, (v,), Outcome.CAYLEY)
    with pytest.raises(ContractError):
        ClassificationRecord(5, 0, 2, Branch.DISCRIMINANT_NEG, (v,), Outcome.EXCLUDED)
    with pytest.raises(ContractError):
        ClassificationRecord(5, 0, 2, Branch.DISCRIMINANT_NEG, (v,), Outcome.SPLIT)
    with pytest.raises(ContractError):
        FilterVerdict("x", Status.EXCLUDED, "no witness")


def test_gap_is_loud(monkeypatch):
    import quadricfano.classifier as c

    monkeypatch.setattr(c, "rr_integrality", lambda d, decide_by: FilterVerdict("rr_integrality", Status.PASS, "stub"))
    with pytest.raises(ClassificationGap):
        c.classify_candidate(5, 0, 1)
