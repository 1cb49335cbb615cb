import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from dyadtrig.dyadic import ONE, ZERO, normalize, parse_dyadic
from dyadtrig.errors import DepthError, DomainError, PoleError
from dyadtrig.forward import (
    TrigKind,
    _unwind,
    dyadic_loop,
    forward,
    full_circle,
    radical_unwind,
    radical_unwind_truncated,
)
from dyadtrig.signature import SignatureWord, SigSeed, build_signature

SQRT2 = math.sqrt(2.0)


class TestRadicalUnwind:
    def test_bare_cosine_seed(self):
        assert radical_unwind(SignatureWord(2)) == 2.0

    def test_one_positive_turn(self):
        assert radical_unwind(SignatureWord(4)) == 2.0 + SQRT2

    def test_one_negative_turn(self):
        assert radical_unwind(SignatureWord(5)) == 2.0 - SQRT2

    def test_value_stays_in_range(self):
        for k in range(1, 13):
            for n in range(1, 1 << k, 2):
                v = radical_unwind(build_signature(normalize(n, k), SigSeed.COS))
                assert 0.0 <= v <= 4.0

    def test_step_count_is_depth(self):
        for k in range(1, 13):
            for n in range(1, 1 << k, 2):
                sig = build_signature(normalize(n, k), SigSeed.COS)
                _, steps = _unwind(sig.bits)
                assert steps == k - 1 == sig.depth


class TestTruncatedUnwind:
    def test_zero_depth(self):
        assert radical_unwind_truncated(0b101010, 0) == 2.0

    def test_single_positive(self):
        assert radical_unwind_truncated(0, 1) == radical_unwind(SignatureWord(4))

    def test_single_negative(self):
        assert radical_unwind_truncated(1, 1) == radical_unwind(SignatureWord(5))

    def test_depth_limit(self):
        with pytest.raises(DepthError):
            radical_unwind_truncated(0, 62)
        with pytest.raises(DomainError):
            radical_unwind_truncated(0, -1)


class TestDyadicLoop:
    def test_exact_endpoints(self):
        assert dyadic_loop(ZERO, SigSeed.COS) == 4.0
        assert dyadic_loop(ONE, SigSeed.SIN) == 4.0
        assert dyadic_loop(ONE, SigSeed.COS) == 0.0
        assert dyadic_loop(ZERO, SigSeed.SIN) == 0.0

    def test_midpoint(self):
        assert dyadic_loop(parse_dyadic("1/2"), SigSeed.COS) == 2.0

    def test_rejects_outside_unit_interval(self):
        with pytest.raises(DomainError):
            dyadic_loop(parse_dyadic("-1/2"), SigSeed.COS)
        with pytest.raises(DomainError):
            dyadic_loop(parse_dyadic("3/2"), SigSeed.COS)


class TestForward:
    def test_cos_midpoint(self):
        assert forward(TrigKind.COS, parse_dyadic("1/2")) == SQRT2 / 2

    def test_tan_midpoint(self):
        assert forward(TrigKind.TAN, parse_dyadic("1/2")) == 1.0

    def test_cos_five_sixteenths(self):
        got = forward(TrigKind.COS, parse_dyadic("5/16"))
        assert got == pytest.approx(oracle.cos_ref(5, 4), abs=5e-16)

    def test_poles_raise(self):
        for kind in (TrigKind.TAN, TrigKind.TAN2):
            with pytest.raises(PoleError):
                forward(kind, ONE)
        for kind in (TrigKind.COT, TrigKind.COT2):
            with pytest.raises(PoleError):
                forward(kind, ZERO)

    def test_squares_skip_final_root(self):
        x = parse_dyadic("3/8")
        assert forward(TrigKind.COS2, x) == dyadic_loop(x, SigSeed.COS) / 4
        assert forward(TrigKind.TAN2, x) == pytest.approx(
            math.tan(3 * math.pi / 16) ** 2, rel=1e-14
        )

    def test_cot_is_reciprocal_relation(self):
        x = parse_dyadic("3/8")
        assert forward(TrigKind.COT, x) * forward(TrigKind.TAN, x) == pytest.approx(1.0, rel=1e-13)

    def test_complementarity(self):
        # sin(x) and cos(1 - x) run the same arithmetic, level for level
        for k in range(1, 11):
            for n in range(0, (1 << k) + 1):
                x = normalize(n, k)
                mirrored = normalize((1 << k) - n, k)
                assert abs(forward(TrigKind.SIN, x) - forward(TrigKind.COS, mirrored)) <= 1e-15

    def test_pythagorean_squares(self):
        for k in range(1, 9):
            for n in range(0, (1 << k) + 1):
                x = normalize(n, k)
                total = forward(TrigKind.COS2, x) + forward(TrigKind.SIN2, x)
                assert abs(total - 1.0) <= 1e-14

    def test_accuracy_envelope_full_lattice(self):
        # whenever an intermediate doubled angle nears the quadrant boundary
        # the radicand cancellation costs ~ulp(2)/(8*value); the absolute
        # ceiling measured over k <= 12 is 1.61e-14 and the product
        # err * value stays bounded
        worst = 0.0
        worst_scaled = 0.0
        for k in range(1, 13):
            for n in range(0, (1 << k) + 1):
                ref = oracle.cos_ref(n, k)
                err = abs(forward(TrigKind.COS, normalize(n, k)) - ref)
                worst = max(worst, err)
                worst_scaled = max(worst_scaled, err * ref)
        assert worst <= 4e-14
        assert worst_scaled <= 6e-15


class TestExactMode:
    def test_square_is_exact_rational(self):
        assert forward(TrigKind.COS2, parse_dyadic("1/2"), exact=True) == Fraction(1, 2)

    def test_endpoints_exact(self):
        assert forward(TrigKind.COS, ZERO, exact=True) == 1
        assert forward(TrigKind.SIN, ONE, exact=True) == 1

    def test_tracks_float_path(self):
        for text in ["5/16", "1/2", "3/8", "127/128"]:
            x = parse_dyadic(text)
            got = forward(TrigKind.COS, x, exact=True)
            assert isinstance(got, Fraction)
            assert float(got) == pytest.approx(forward(TrigKind.COS, x), abs=5e-8)

    def test_tan_exact_near_zero_clamps(self):
        got = forward(TrigKind.TAN, parse_dyadic("1/1048576"), exact=True)
        assert got >= 0


class TestFullCircle:
    def test_second_quadrant_flips_sign(self):
        assert full_circle(TrigKind.COS, parse_dyadic("3/8")) == -forward(
            TrigKind.COS, parse_dyadic("1/2")
        )

    def test_zero(self):
        assert full_circle(TrigKind.SIN, ZERO) == 0.0

    def test_whole_turn(self):
        assert full_circle(TrigKind.COS, ONE) == 1.0

    def test_many_turns_match_reference(self):
        for text in ["-17/8", "5/4", "1023/64", "-3"]:
            x = parse_dyadic(text)
            theta = 2 * math.pi * float(x)
            assert full_circle(TrigKind.COS, x) == pytest.approx(math.cos(theta), abs=1e-12)
            assert full_circle(TrigKind.SIN, x) == pytest.approx(math.sin(theta), abs=1e-12)

    def test_rejects_other_kinds(self):
        with pytest.raises(DomainError):
            full_circle(TrigKind.TAN, parse_dyadic("1/8"))


@settings(max_examples=200)
@given(st.integers(min_value=1, max_value=12), st.data())
def test_forward_matches_reference_everywhere(k, data):
    n = data.draw(st.integers(min_value=0, max_value=1 << k))
    x = normalize(n, k)
    assert forward(TrigKind.COS, x) == pytest.approx(oracle.cos_ref(n, k), abs=4e-14)
    assert forward(TrigKind.SIN, x) == pytest.approx(oracle.sin_ref(n, k), abs=4e-14)
