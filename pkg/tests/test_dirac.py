"""Tests for the Dirac inequality classifiers."""

import random
from fractions import Fraction

import pytest

from superunitary.algebra_core import (
    SYSTEM_ANTISTANDARD,
    SYSTEM_NONSTANDARD,
    SYSTEM_STANDARD,
    Root,
    Signature,
    Weight,
    build_positive_system,
    form,
)
from superunitary.dirac import (
    CASE_COMPACT,
    CASE_NONCOMPACT,
    casimir_difference,
    casimir_eigenvalue,
    classify,
    classify_fd,
    classify_ifd,
    dirac_inequality_equiv,
    dirac_margin,
    margin_table,
    non_unitarity_witness,
    oracle_agreement,
    psl_constraint,
    sweep,
    thresholds,
)
from superunitary.exceptions import (
    NotOddPositiveException,
    PslConstraintViolatedException,
    WrongCaseException,
)
from superunitary.weights import FDFamily, IFDFamily, family_weight

SU21 = Signature.from_pqn(2, 0, 1)
SU22 = Signature.from_pqn(2, 0, 2)
SU111 = Signature.from_pqn(1, 1, 1)
SU112 = Signature.from_pqn(1, 1, 2)

PS21 = build_positive_system(SU21, SYSTEM_STANDARD)
PS111 = build_positive_system(SU111, SYSTEM_NONSTANDARD)

HALF_STEPS = [Fraction(k, 2) for k in range(-8, 13)]
QUARTER_STEPS = [Fraction(k, 4) for k in range(-16, 17)]


def _fd(sig: Signature, a, b, x) -> Weight:
    return family_weight(FDFamily.create(sig, a, b, x))


def _ifd(sig: Signature, b, lam, x) -> Weight:
    return family_weight(IFDFamily.create(sig, (0, 0), b, lam, x))


class TestFiniteDimensional:
    @pytest.mark.parametrize("a", [0, 1, 2, 3])
    def test_su21(self, a):
        for x in HALF_STEPS + [Fraction(a + 10)]:
            assert classify(_fd(SU21, (a,), (), x), SU21).unitarizable == (x >= a), x

    @pytest.mark.parametrize("a", [0, 1, 2])
    @pytest.mark.parametrize("b", [0, 1, 2])
    def test_su22(self, a, b):
        k0 = 1 if b == 0 else 2
        for x in HALF_STEPS:
            isolated = x.denominator == 1 and a + k0 - 1 <= x <= a + 1
            expected = isolated or x > a + 1
            assert classify(_fd(SU22, (a,), (b,), x), SU22).unitarizable == expected, x

    def test_reasons(self):
        verdict = classify(Weight.parse("3,1|2"), SU21)
        assert verdict.unitarizable
        assert verdict.case == CASE_COMPACT
        assert verdict.to_dict(2) == {
            "unitarizable": True,
            "case": "compact",
            "reasons": [{"condition": "fd b)(ii)", "root": "e2-d1", "margin": "3"}],
        }

    def test_boundary_reason(self):
        verdict = classify(_fd(SU22, (1,), (1,), 2), SU22)
        assert verdict.unitarizable
        assert verdict.reasons[0].condition == "fd b)(i)"
        assert verdict.reasons[0].root.label(2) == "e2-d2"

    def test_failing_conditions_are_reported(self):
        verdict = classify(_fd(SU21, (1,), (), 0), SU21)
        assert not verdict.unitarizable
        assert {reason.condition for reason in verdict.reasons} >= {"unitarity a)(i)"}

    def test_wrong_case(self):
        with pytest.raises(WrongCaseException):
            classify_fd(Weight.zero(SU111), SU111)


class TestInfiniteDimensional:
    @pytest.mark.parametrize("lam", [Fraction(-5, 2), -3, -2, -1, 0, 1])
    def test_su111(self, lam):
        for x in QUARTER_STEPS:
            expected = lam <= 2 * x <= -lam
            assert classify(_ifd(SU111, (0,), lam, x), SU111).unitarizable == expected, x

    @pytest.mark.parametrize("lam", [-4, -3, -1, 0])
    @pytest.mark.parametrize("b", [0, 1, 2])
    def test_su112(self, lam, b):
        for x in HALF_STEPS:
            expected = lam <= 2 * x <= -lam - 2 * b
            assert classify(_ifd(SU112, (b, 0), lam, x), SU112).unitarizable == expected, x

    @pytest.mark.parametrize(
        "lam, x, condition",
        [
            (-1, Fraction(1, 2), "ifd b)(i)"),
            (0, 0, "ifd b)(ii)"),
            (-1, Fraction(-1, 2), "ifd b)(iii)"),
            (-1, 0, "ifd b)(iv)"),
        ],
    )
    def test_clauses(self, lam, x, condition):
        verdict = classify_ifd(_ifd(SU111, (0,), lam, x), SU111)
        assert verdict.unitarizable
        assert verdict.case == CASE_NONCOMPACT
        assert {reason.condition for reason in verdict.reasons} == {condition}

    def test_wrong_case(self):
        with pytest.raises(WrongCaseException):
            classify_ifd(Weight.zero(SU21), SU21)

    def test_witness(self):
        (reason,) = non_unitarity_witness(_ifd(SU111, (0,), -1, 1), SU111)
        assert reason.condition == "witness"
        assert reason.root.label(2) == "e1-d1"
        assert reason.margin == Fraction(1, 2)
        assert non_unitarity_witness(_ifd(SU111, (0,), -1, 0), SU111) == ()
        with pytest.raises(WrongCaseException):
            non_unitarity_witness(Weight.zero(SU21), SU21)


class TestMargins:
    def test_margin_table(self):
        table = margin_table(_fd(SU21, (1,), (), 3), PS21)
        assert [(root.label(2), value) for root, value in table] == [("e1-d1", 4), ("e2-d1", 2)]

    def test_nonstandard_margins(self):
        table = margin_table(_ifd(SU111, (0,), -3, Fraction(1, 2)), PS111)
        assert [(root.label(2), value) for root, value in table] == [("e1-d1", -1), ("-e2+d1", -2)]

    def test_not_odd_positive(self):
        with pytest.raises(NotOddPositiveException):
            dirac_margin(Weight.zero(SU21), Root.parse("e1-e2", SU21), PS21)
        with pytest.raises(NotOddPositiveException):
            dirac_inequality_equiv(Weight.zero(SU21), Root.parse("d1-e1", SU21), PS21)

    def test_casimir_eigenvalue(self):
        assert casimir_eigenvalue(Weight.zero(SU21), PS21) == 0
        # (Λ+2ρ, Λ) with ρ = (0,-1|1)
        assert casimir_eigenvalue(Weight.parse("1,0|0"), PS21) == 1

    @pytest.mark.parametrize("text", ["3,1|2", "1/2,-7/3|5/4", "0,0|0", "-2,4|-1/6", "5/3,5/3|-5/3"])
    def test_casimir_difference(self, text):
        weight = Weight.parse(text)
        for alpha in PS21.odd_positive:
            margin = dirac_margin(weight, alpha, PS21)
            assert casimir_difference(weight, alpha, PS21) == -2 * margin
            assert dirac_inequality_equiv(weight, alpha, PS21) == (margin <= 0)

    def test_shift_invariance(self):
        for weight, sig in [
            (_fd(SU22, (1,), (0,), 1), SU22),
            (_fd(SU22, (1,), (0,), Fraction(3, 2)), SU22),
            (_ifd(SU112, (1, 0), -3, Fraction(-1, 2)), SU112),
            (_ifd(SU112, (1, 0), -3, 1), SU112),
        ]:
            for t in (Fraction(-3), Fraction(1, 3), Fraction(7, 2)):
                assert classify(weight.shifted(t), sig) == classify(weight, sig)


class TestThresholds:
    def test_fd(self):
        assert thresholds(FDFamily.create(SU22, (1,), (1,), 0)) == {"x_min": 2, "x_max": 2}
        assert thresholds(FDFamily.create(SU22, (1,), (0,), 0)) == {"x_min": 1, "x_max": 2}
        assert thresholds(FDFamily.create(SU21, (2,), (), 0)) == {"x_min": 2, "x_max": 2}

    def test_ifd(self):
        assert thresholds(IFDFamily.create(SU112, (0, 0), (1, 0), -3, 0)) == {
            "xL_min": Fraction(-3, 2),
            "xL_max": Fraction(-3, 2),
            "xR_min": Fraction(1, 2),
            "xR_max": Fraction(1, 2),
        }

    def test_interval_matches_classifier(self):
        fam = IFDFamily.create(SU112, (0, 0), (1, 0), -3, 0)
        bounds = thresholds(fam)
        for x in HALF_STEPS:
            expected = bounds["xL_min"] <= x <= bounds["xR_max"]
            assert classify(family_weight(fam.at(x)), SU112).unitarizable == expected


class TestSweep:
    def test_grid_order(self):
        fam = FDFamily.create(SU21, (1,), (), 0)
        rows = sweep(fam, [0, Fraction(1, 2), 1, 2])
        assert [x for x, _ in rows] == [0, Fraction(1, 2), 1, 2]
        assert [verdict.unitarizable for _, verdict in rows] == [False, False, True, True]


class TestPsl:
    def test_constraint(self):
        assert psl_constraint(Weight.parse("1,0|0,1")) == 0
        assert psl_constraint(Weight.parse("1,1|0,0")) == 2

    def test_classify(self):
        assert classify(Weight.parse("1,0|0,1"), SU22, psl=True).case == CASE_COMPACT
        with pytest.raises(PslConstraintViolatedException):
            classify(Weight.parse("1,1|0,0"), SU22, psl=True)
        with pytest.raises(PslConstraintViolatedException):
            classify(Weight.parse("0,0|0"), SU21, psl=True)


class TestOracleAgreement:
    @pytest.mark.parametrize("x", [1, 2])
    def test_unitarizable_su21(self, x):
        report = oracle_agreement(_fd(SU21, (1,), (), x), SU21, depth=3)
        assert report.agrees
        assert report.verdict.unitarizable
        assert report.checked == 9

    def test_failing_conditions_are_not_checked(self):
        report = oracle_agreement(_fd(SU21, (1,), (), Fraction(1, 2)), SU21)
        assert report.agrees
        assert not report.unitarity_holds
        assert report.checked == 0

    def test_su111(self):
        report = oracle_agreement(_ifd(SU111, (0,), -1, 0), SU111, depth=3)
        assert report.agrees
        assert report.witness_eta is None

    def test_depth(self):
        with pytest.raises(ValueError):
            oracle_agreement(Weight.zero(SU21), SU21, depth=7)


SMALL_SIGNATURES = [
    Signature.from_pqn(p, q, n)
    for p in range(0, 5)
    for q in range(0, 5)
    for n in range(1, 5)
    if p + q >= 1 and 3 <= p + q + n <= 6
]


class TestProperties:
    def test_random_samples(self):
        rng = random.Random(20240617)
        for _ in range(500):
            sig = rng.choice(SMALL_SIGNATURES)
            kinds = [SYSTEM_STANDARD, SYSTEM_ANTISTANDARD]
            if not sig.is_compact:
                kinds.append(SYSTEM_NONSTANDARD)
            ps = build_positive_system(sig, rng.choice(kinds))
            weight = Weight(tuple(Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3))) for _ in range(sig.size)), sig.m)
            alpha = rng.choice(ps.odd_positive)
            assert form(alpha, alpha, sig) == 0
            margin = dirac_margin(weight, alpha, ps)
            assert dirac_inequality_equiv(weight, alpha, ps) == (margin <= 0)
            assert casimir_difference(weight, alpha, ps) == -2 * margin
            t = Fraction(rng.randint(-5, 5), rng.choice((1, 2, 4)))
            assert classify(weight.shifted(t), sig) == classify(weight, sig)
