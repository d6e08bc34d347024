"""Tests for the hypothesis checks, attainability and exhaustive verification."""

import pytest
from pydantic import ValidationError

from modplab import feasibility
from modplab.config import LabConfig
from modplab.exceptions import BudgetExceededError, ParameterError
from modplab.feasibility import (
    Counterexample,
    InertialType,
    TheoremInstance,
    VerificationReport,
    attainable_exponents,
    attainable_exponents_via_lemma,
    check_hypotheses,
    exhaustive_verify,
    exponents_within_window,
    inertial_types,
    theorem_verdict,
    verify_all_types,
)
from modplab.residual_reps import ResidualRep
from modplab.tame_arith import TameParams

INLINE = LabConfig(workers=1)
P5 = TameParams(p=5, d=1)


def _instance(p, r, a_vec, pairs):
    return TheoremInstance(
        p=p,
        n=len(a_vec),
        r=r,
        type=InertialType(p=p, a_vec=a_vec),
        rep=ResidualRep.from_pairs(p, pairs),
    )


def _checks(inst):
    return {c.name: c.passed for c in check_hypotheses(inst)}


class TestAttainable:
    def test_single_profile(self):
        assert attainable_exponents(P5, 0, InertialType(p=5, a_vec=(2,))) == {2}

    def test_weight_window(self):
        assert attainable_exponents(P5, 1, InertialType(p=5, a_vec=(2,))) == {2, 3}

    def test_niveau_two(self):
        inertial_type = InertialType(p=5, a_vec=(1, 2))
        found = attainable_exponents(TameParams(p=5, d=2), 1, inertial_type)
        assert 16 in found

    def test_rejects_large_r(self):
        with pytest.raises(ParameterError):
            attainable_exponents(P5, 4, InertialType(p=5, a_vec=(0,)))

    @pytest.mark.parametrize("p", [5, 7])
    @pytest.mark.parametrize("d", [1, 2])
    def test_two_oracles_agree_and_grow_with_r(self, p, d):
        params = TameParams(p=p, d=d)
        for inertial_type in inertial_types(p, 2):
            previous = frozenset()
            for r in range(p - 1):
                closed = attainable_exponents(params, r, inertial_type)
                via_lemma = attainable_exponents_via_lemma(params, r, inertial_type)
                assert closed == via_lemma
                assert previous <= closed
                previous = closed

    def test_niveau_one_attainable_within_window(self):
        inertial_type = InertialType(p=11, a_vec=(0, 3, 7))
        for kappa in attainable_exponents(TameParams(p=11, d=1), 1, inertial_type):
            rep = ResidualRep.from_pairs(11, [(1, kappa)])
            assert exponents_within_window(rep, inertial_type, 1)


class TestInstances:
    def test_type_entries_bounded(self):
        with pytest.raises(ValidationError):
            InertialType(p=5, a_vec=(4,))
        with pytest.raises(ValidationError):
            InertialType(p=5, a_vec=())

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError):
            _instance(11, 1, (0, 3, 7), [(1, 0), (1, 3)])

    def test_det_check(self):
        a_vec = (0, 3, 7)
        assert _checks(_instance(11, 1, a_vec, [(2, 14), (1, 0)]))["det"] is False
        assert _checks(_instance(11, 1, a_vec, [(1, 3), (1, 0), (1, 0)]))["det"]
        assert not _checks(_instance(11, 1, a_vec, [(1, 4), (1, 0), (1, 0)]))["det"]

    def test_p_bound(self):
        assert _checks(_instance(5, 1, (0, 1, 2), [(1, 0), (1, 1), (1, 2)]))["p-bound"]
        small = _instance(3, 1, (0, 1, 1), [(1, 0), (1, 1), (1, 1)])
        assert not _checks(small)["p-bound"]

    def test_big_subquotient_only_at_boundary(self):
        boundary = _instance(11, 1, (0, 3, 7), [(1, 3), (1, 0), (1, 0)])
        assert not _checks(boundary)["big-subquotient"]
        below = _instance(11, 0, (0, 3, 7), [(1, 3), (1, 0), (1, 0)])
        assert _checks(below)["big-subquotient"]

    def test_check_order(self):
        inst = _instance(11, 1, (0, 3, 7), [(1, 3), (1, 0), (1, 0)])
        assert [c.name for c in check_hypotheses(inst)] == [
            "det",
            "r-bound",
            "p-bound",
            "big-subquotient",
        ]

    def test_verdicts(self):
        applies = _instance(11, 0, (0, 3, 7), [(1, 3), (1, 0), (1, 0)])
        assert theorem_verdict(applies).kind == "PredictsNotRegular"
        det_off = _instance(11, 0, (0, 3, 7), [(1, 4), (1, 0), (1, 0)])
        assert theorem_verdict(det_off).model_dump() == {
            "kind": "NotApplicable",
            "failed": ["det"],
        }
        too_wide = _instance(11, 2, (0, 3, 7), [(1, 3), (1, 0), (1, 0)])
        assert theorem_verdict(too_wide).failed == ["r-bound"]


class TestExhaustive:
    def test_rejects_unsatisfiable_frames(self):
        with pytest.raises(ParameterError, match="p-bound"):
            exhaustive_verify(3, 3, 0, InertialType(p=3, a_vec=(0, 0, 1)), INLINE)
        with pytest.raises(ParameterError, match="r-bound"):
            exhaustive_verify(11, 3, 2, InertialType(p=11, a_vec=(0, 3, 7)), INLINE)

    def test_rejects_mismatched_type(self):
        with pytest.raises(ParameterError):
            exhaustive_verify(11, 3, 0, InertialType(p=11, a_vec=(0, 3)), INLINE)

    def test_budget_is_explicit(self):
        config = LabConfig(instance_budget=1, workers=1)
        with pytest.raises(BudgetExceededError) as info:
            exhaustive_verify(11, 3, 1, InertialType(p=11, a_vec=(0, 3, 7)), config)
        assert info.value.cap == 1
        assert info.value.reached > 1

    def test_budget_stops_before_high_niveaus(self, monkeypatch):
        niveaus = []
        real = feasibility.enumerate_profiles

        def recording(params, r, allowed_x):
            niveaus.append(params.d)
            return real(params, r, allowed_x)

        monkeypatch.setattr(feasibility, "enumerate_profiles", recording)
        config = LabConfig(instance_budget=1, workers=1)
        with pytest.raises(BudgetExceededError):
            inertial_type = InertialType(p=17, a_vec=(0, 1, 2, 3, 4, 5))
            exhaustive_verify(17, 6, 2, inertial_type, config)
        assert niveaus == [1]

    def test_budget_matching_the_count_passes(self):
        inertial_type = InertialType(p=11, a_vec=(0, 3, 7))
        count = exhaustive_verify(11, 3, 1, inertial_type, INLINE).repsChecked
        exact = LabConfig(instance_budget=count, workers=1)
        assert exhaustive_verify(11, 3, 1, inertial_type, exact).repsChecked == count
        short = LabConfig(instance_budget=count - 1, workers=1)
        with pytest.raises(BudgetExceededError) as info:
            exhaustive_verify(11, 3, 1, inertial_type, short)
        assert count - 1 < info.value.reached <= count

    def test_single_type_has_no_counterexample(self):
        inertial_type = InertialType(p=11, a_vec=(0, 3, 7))
        report = exhaustive_verify(11, 3, 1, inertial_type, INLINE)
        assert report.counterexamples == []
        assert report.typesChecked == 1
        assert report.repsChecked >= report.repsApplicable

    def test_all_types_p7_r0(self):
        report = verify_all_types(7, 3, 0, INLINE)
        assert report.counterexamples == []
        assert report.typesChecked == len(list(inertial_types(7, 3)))

    def test_orbit_dedupe_only_shrinks(self):
        inertial_type = InertialType(p=7, a_vec=(0, 1, 3))
        deduped = exhaustive_verify(7, 3, 1, inertial_type, INLINE)
        raw = exhaustive_verify(7, 3, 1, inertial_type, INLINE, dedupe_orbits=False)
        assert raw.repsChecked >= deduped.repsChecked
        assert raw.counterexamples == []

    def test_diagnostic_mode_is_labelled(self):
        inertial_type = InertialType(p=11, a_vec=(0, 3, 7))
        standard = exhaustive_verify(11, 3, 1, inertial_type, INLINE)
        diagnostic = exhaustive_verify(
            11, 3, 1, inertial_type, INLINE, require_big_subquotient=False
        )
        assert diagnostic.mode == "diagnostic"
        assert diagnostic.repsApplicable >= standard.repsApplicable
        for found in diagnostic.counterexamples:
            assert all(s["d"] == 1 for s in found.summands)

    @pytest.mark.slow
    @pytest.mark.parametrize("p", [7, 11, 13])
    @pytest.mark.parametrize("r", [0, 1])
    def test_theorem_holds(self, p, r):
        report = verify_all_types(p, 3, r, LabConfig(workers=2))
        assert report.counterexamples == []
        assert report.typesChecked == len(list(inertial_types(p, 3)))


def test_report_merge_sorts_counterexamples():
    late = Counterexample(
        type=[1, 1, 1], summands=[{"d": 1, "kappa": 2}], exponents=[2], detInertia=2
    )
    early = Counterexample(
        type=[0, 1, 1], summands=[{"d": 1, "kappa": 5}], exponents=[5], detInertia=5
    )
    first = VerificationReport(
        p=7, n=3, r=0, typesChecked=1, repsChecked=4, counterexamples=[late]
    )
    second = VerificationReport(
        p=7, n=3, r=0, typesChecked=2, repsChecked=6, counterexamples=[early]
    )
    merged = first.merge(second)
    assert merged.typesChecked == 3
    assert merged.repsChecked == 10
    assert merged.counterexamples == [early, late]


def test_inertial_types_are_multisets():
    types = list(inertial_types(5, 2))
    assert len(types) == 10
    assert types[0].a_vec == (0, 0)
    assert types[-1].a_vec == (3, 3)
