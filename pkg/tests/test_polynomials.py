import math

import numpy as np
import pytest
from hypothesis import given, settings

from taylorzeros import (
    DegenerateDiscriminant,
    PoleEvaluation,
    PolyKind,
    RecurrenceSpec,
    characteristic,
    eval_poly,
    generate_sequence,
    h_closed_form,
    h_numerator,
    normalized_H,
    reciprocal_poly,
    taylor_poly,
    validate,
)
from taylorzeros.verifier import ParamBox, sample_spec

from conftest import spec_strategy

FIBONACCI = RecurrenceSpec(-1.0, -1.0, 1.0, 0.0, 1.0)
FIG1_LEFT = RecurrenceSpec(5.0, 1.0, -1.0, 1.0, -3.0)


def substitution_eval(spec, m, z):
    """Right side of the H_m definition, evaluated without the coefficient
    shortcut: sign(-ab)^m |c/a|^(m/2) Pstar_m(-sign(ab) sqrt|a/c| z)."""
    sign_ab = (1 if spec.a > 0 else -1) * (1 if spec.b > 0 else -1)
    pstar = reciprocal_poly(taylor_poly(spec, m))
    w = -sign_ab * math.sqrt(abs(spec.a) / abs(spec.c)) * z
    return (-sign_ab) ** m * abs(spec.c / spec.a) ** (m / 2) * eval_poly(pstar, w)


class TestTaylorPoly:
    def test_matches_sequence(self):
        poly = taylor_poly(FIG1_LEFT, 3)
        assert poly.kind is PolyKind.P
        assert list(poly.coeffs) == [1, -3, 2, -13]

    def test_fibonacci(self):
        assert list(taylor_poly(FIBONACCI, 4).coeffs) == [0, 1, 1, 2, 3]

    def test_degree_zero(self):
        assert list(taylor_poly(FIG1_LEFT, 0).coeffs) == [1.0]


class TestReciprocalPoly:
    def test_reversal(self):
        pstar = reciprocal_poly(taylor_poly(FIG1_LEFT, 3))
        assert pstar.kind is PolyKind.PSTAR
        assert list(pstar.coeffs) == [-13, 2, -3, 1]

    def test_constant(self):
        assert list(reciprocal_poly(taylor_poly(FIG1_LEFT, 0)).coeffs) == [1.0]

    def test_fibonacci_reversal(self):
        assert list(reciprocal_poly(taylor_poly(FIBONACCI, 4)).coeffs) == [3, 2, 1, 1, 0]

    def test_wrong_kind_rejected(self):
        pstar = reciprocal_poly(taylor_poly(FIBONACCI, 4))
        with pytest.raises(ValueError):
            reciprocal_poly(pstar)


class TestEvalPoly:
    def test_coefficient_sum(self):
        assert eval_poly(taylor_poly(FIG1_LEFT, 3), 1.0) == -13

    def test_constant(self):
        assert eval_poly(taylor_poly(FIG1_LEFT, 0), 2.7j) == 1.0

    def test_direct_arithmetic(self):
        assert eval_poly(taylor_poly(FIBONACCI, 4), 2.0) == 70


class TestNormalizedH:
    @pytest.mark.parametrize("params", [(5, 1, -1, 1, -3), (2, 5, 3, 1, -2), (2, -3, 1, 2, 5)])
    def test_h0_is_constant_a0(self, params):
        spec = validate(*params)
        assert list(normalized_H(spec, 0).coeffs) == [spec.a0]

    @pytest.mark.parametrize(
        "params,z",
        [((5, 1, -1, 1, -3), 0.3 + 0.1j), ((2, 5, 3, 1, -2), -1.1 + 0j)],
    )
    def test_matches_substitution_route(self, params, z):
        spec = validate(*params)
        direct = eval_poly(normalized_H(spec, 10), z)
        via_sub = substitution_eval(spec, 10, z)
        assert direct == pytest.approx(via_sub, rel=1e-10)

    @given(spec=spec_strategy())
    @settings(max_examples=100, deadline=None)
    def test_substitution_equivalence_random(self, spec):
        z = 0.37 - 0.81j
        direct = eval_poly(normalized_H(spec, 12), z)
        via_sub = substitution_eval(spec, 12, z)
        assert abs(direct - via_sub) <= 1e-10 * max(1.0, abs(via_sub))


class TestGeneratingFunctionIdentity:
    @given(spec=spec_strategy())
    @settings(max_examples=100, deadline=None)
    def test_convolution_collapses(self, spec):
        m = 50
        seq = np.asarray(generate_sequence(spec, m))
        conv = np.convolve([spec.c, spec.b, spec.a], seq)
        scale = (
            abs(spec.c) * np.abs(seq)
            + abs(spec.b) * np.abs(np.concatenate([[0], seq[:-1]]))
            + abs(spec.a) * np.abs(np.concatenate([[0, 0], seq[:-2]]))
        )
        assert conv[0] == spec.c * seq[0]
        expected_t1 = spec.c * seq[1] + spec.b * seq[0]
        assert abs(conv[1] - expected_t1) <= 1e-12 * max(scale[1], 1e-300)
        for n in range(2, m + 1):
            assert abs(conv[n]) <= 1e-12 * max(scale[n], 1e-300)


class TestClosedForm:
    def test_named_example_one(self):
        spec = validate(5, 1, -1, 1, -3)
        char = characteristic(spec)
        closed = h_closed_form(char, 10, 0.5)
        horner = eval_poly(normalized_H(spec, 10), 0.5)
        assert closed == pytest.approx(horner, rel=1e-9)

    def test_named_example_two(self):
        spec = validate(2, -3, 1, 2, 5)
        char = characteristic(spec)
        closed = h_closed_form(char, 25, 0.4j)
        horner = eval_poly(normalized_H(spec, 25), 0.4j)
        assert closed == pytest.approx(horner, rel=1e-9)

    def test_pole_rejected(self):
        char = characteristic(validate(5, 1, -1, 1, -3))
        with pytest.raises(PoleEvaluation):
            h_closed_form(char, 10, 1.0 / char.t2)

    def test_repeated_root_rejected(self):
        char = characteristic(validate(1, 2, 1, 1, 1))
        with pytest.raises(DegenerateDiscriminant):
            h_closed_form(char, 10, 0.5)

    def test_random_oracle_two_hundred_triples(self, rng):
        box = ParamBox()
        checked = 0
        while checked < 200:
            spec = sample_spec(rng, box)
            char = characteristic(spec)
            if abs(char.discriminant) <= 1e-6:
                continue
            m = int(rng.integers(1, 51))
            radius = rng.uniform(0.0, 2.0 * abs(char.t2))
            theta = rng.uniform(0.0, 2.0 * np.pi)
            z = complex(radius * np.cos(theta), radius * np.sin(theta))
            try:
                horner = eval_poly(normalized_H(spec, m), z)
                closed = h_closed_form(char, m, z)
            except PoleEvaluation:
                continue
            checked += 1
            assert abs(closed - horner) <= 1e-8 * max(1.0, abs(horner))


class TestComparisonPolynomialRoots:
    def test_minus_t1_minus_t2_are_zeros(self, rng):
        """-t2 and -t1 kill the comparison polynomial when ac < 0."""
        box = ParamBox()
        checked = 0
        while checked < 50:
            spec = sample_spec(rng, box)
            char = characteristic(spec)
            if char.sign_ac > 0:
                continue
            checked += 1
            m = int(rng.integers(2, 40))
            scale = abs(h_numerator(char, m, 0.0)) + abs(
                char.t2 ** (m + 1) * (1 + char.t2**2) * (char.C * char.t1 + char.D)
            )
            for z in (-char.t1, -char.t2):
                assert abs(h_numerator(char, m, z)) <= 1e-9 * max(scale, 1e-300)
