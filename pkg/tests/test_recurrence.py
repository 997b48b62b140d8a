import math

import pytest
from hypothesis import given, settings

from taylorzeros import (
    DegenerateDiscriminant,
    NonFinite,
    Overflow,
    RecurrenceSpec,
    ZeroCoefficient,
    ZeroInitialValues,
    characteristic,
    closed_form_term,
    generate_sequence,
    validate,
)

from conftest import spec_strategy

FIBONACCI = RecurrenceSpec(-1.0, -1.0, 1.0, 0.0, 1.0)
FIG1_LEFT = RecurrenceSpec(5.0, 1.0, -1.0, 1.0, -3.0)


class TestValidate:
    def test_figure_parameters_are_valid(self):
        spec = validate(5, 1, -1, 1, -3)
        assert spec == FIG1_LEFT

    def test_zero_coefficient(self):
        with pytest.raises(ZeroCoefficient):
            validate(1, 1, 0, 1, 1)

    def test_zero_initial_values(self):
        with pytest.raises(ZeroInitialValues):
            validate(1, 1, 1, 0, 0)

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), -float("inf")])
    def test_non_finite(self, bad):
        with pytest.raises(NonFinite):
            validate(1, bad, 1, 1, 1)

    def test_non_numeric(self):
        with pytest.raises(NonFinite):
            validate(1, "x", 1, 1, 1)


class TestGenerateSequence:
    def test_fibonacci(self):
        assert generate_sequence(FIBONACCI, 6) == [0, 1, 1, 2, 3, 5, 8]

    def test_hand_applied_recurrence(self):
        # a2 = 1*(-3) + 5*1 = 2, a3 = 1*2 + 5*(-3) = -13
        assert generate_sequence(FIG1_LEFT, 3) == [1, -3, 2, -13]

    def test_base_case(self):
        assert generate_sequence(FIG1_LEFT, 0) == [1.0]

    def test_overflow_is_eager(self):
        spec = validate(5, 5, 1e-300, 1, 1)
        with pytest.raises(Overflow):
            generate_sequence(spec, 10)

    def test_negative_m_rejected(self):
        with pytest.raises(ValueError):
            generate_sequence(FIBONACCI, -1)


class TestClosedForm:
    def test_fibonacci_term_10(self):
        char = characteristic(FIBONACCI)
        assert closed_form_term(char, FIBONACCI, 10) == pytest.approx(55, rel=1e-9)

    def test_matches_recurrence_oracle(self):
        char = characteristic(FIG1_LEFT)
        assert closed_form_term(char, FIG1_LEFT, 3) == pytest.approx(-13, rel=1e-9)

    def test_repeated_root_rejected(self):
        spec = validate(1, 2, 1, 1, 1)
        with pytest.raises(DegenerateDiscriminant):
            closed_form_term(characteristic(spec), spec, 4)

    @given(spec=spec_strategy(min_disc=1e-2))
    @settings(max_examples=150, deadline=None)
    def test_agrees_with_sequence_up_to_60(self, spec):
        char = characteristic(spec)
        try:
            seq = generate_sequence(spec, 60)
        except Overflow:
            return
        scale = 0.0
        for n, expected in enumerate(seq):
            scale = max(scale, abs(expected))
            got = closed_form_term(char, spec, n)
            assert abs(got - expected) <= 1e-9 * scale + 1e-12


class TestCharacteristic:
    def test_factorable_case_one(self):
        # 2t^2 + 5t + 3 = (2t + 3)(t + 1)
        char = characteristic(validate(2, 5, 3, 1, -2))
        assert char.alpha == pytest.approx(-1.5)
        assert char.beta == pytest.approx(-1.0)
        assert char.critical_radius == pytest.approx(1.0)

    def test_factorable_case_two(self):
        # 2t^2 - 3t + 1 = (2t - 1)(t - 1)
        char = characteristic(validate(2, -3, 1, 2, 5))
        assert char.alpha == pytest.approx(1.0)
        assert char.beta == pytest.approx(0.5)
        assert char.critical_radius == pytest.approx(0.5)

    def test_factorable_case_three(self):
        # 2t^2 + t - 1 = (2t - 1)(t + 1)
        char = characteristic(validate(2, 1, -1, 2, 1))
        assert char.alpha == pytest.approx(-1.0)
        assert char.beta == pytest.approx(0.5)
        assert char.critical_radius == pytest.approx(0.5)

    def test_conjugate_pair_ordering(self):
        char = characteristic(validate(1, 1, 1, 1, 1))
        assert char.discriminant < 0
        assert char.alpha == char.beta.conjugate()
        assert abs(char.t1) == pytest.approx(abs(char.t2))
        assert char.t2.imag >= 0

    @given(spec=spec_strategy())
    @settings(max_examples=250, deadline=None)
    def test_invariants(self, spec):
        char = characteristic(spec)
        a, b, c = spec.a, spec.b, spec.c

        assert abs(char.alpha) >= abs(char.beta)
        for root in (char.alpha, char.beta):
            residual = abs(c + b * root + a * root * root)
            scale = abs(c) + abs(b * root) + abs(a * root * root)
            assert residual <= 1e-12 * scale

        assert abs(char.t1 * char.t2 - char.sign_ac) <= 1e-12

        sign_ab = (1 if a > 0 else -1) * (1 if b > 0 else -1)
        ratio = math.sqrt(abs(c)) / math.sqrt(abs(a))
        assert abs(char.alpha - (-sign_ab) * ratio * char.t2) <= 1e-12 * abs(char.alpha)

        if char.sign_ac < 0:
            assert -1 < char.t1.real < 0 and char.t1.imag == 0
            assert char.t2.real > 1 and char.t2.imag == 0
        elif char.discriminant > 0:
            assert 0 < char.t1.real < 1 < char.t2.real
            assert char.t1.imag == char.t2.imag == 0

        # reconstruct B, C, D from the root data and compare to the direct forms
        b_back = -char.sign_ac * (char.t1 + char.t2).real
        assert abs(b_back - char.B) <= 1e-12 * abs(char.B)
        assert char.D == spec.a0
        c_direct = -(spec.a1 + b * spec.a0 / c) * sign_ab * ratio
        assert abs(char.C - c_direct) <= 1e-12 * max(1e-300, abs(c_direct))

        assert char.critical_radius == pytest.approx(
            abs(c) / (abs(a) * abs(char.alpha)), rel=1e-12
        )
