"""Term generation, partial sums and segment geometry.

Reference values were computed independently with mpmath at 30 digits
(brute-force summation for the partial sums).
"""

import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from etalab import (
    SeriesState,
    eta_term,
    iter_partial_sums,
    partial_sum,
    partial_sum_path,
    segment,
    segment_angle,
    turn_angle,
)

# mpmath: 3**mpc(-0.5, -2)
TERM_3 = complex(-0.33847444412685854, -0.4677268262633088)
# mpmath: sum((-1)**(k-1)/k for k <= 1000); note S_1000 sits BELOW ln 2
S_1000_SIGMA1 = 0.69264743055982031


class TestEtaTerm:
    def test_first_term_is_one(self):
        for s in (0.5 + 3j, 0.1 + 0j, 0.9 - 40j):
            assert eta_term(1, s) == 1.0 + 0.0j

    def test_second_term_at_one(self):
        assert eta_term(2, 1.0 + 0.0j) == -0.5 + 0.0j

    def test_third_term_frozen(self):
        got = eta_term(3, 0.5 + 2.0j)
        assert abs(got - TERM_3) < 1e-15

    def test_rejects_bad_index(self):
        with pytest.raises(ValueError):
            eta_term(0, 0.5 + 1j)

    @given(
        n=st.integers(min_value=1, max_value=10**6),
        sigma=st.floats(min_value=0.05, max_value=0.95),
        t=st.floats(min_value=0.0, max_value=150.0),
    )
    @settings(max_examples=60, deadline=None)
    def test_modulus_is_power(self, n, sigma, t):
        got = abs(eta_term(n, complex(sigma, t)))
        want = n ** -sigma
        assert abs(got - want) <= 1e-14 * want


class TestPartialSum:
    def test_trivial_one_term(self):
        assert partial_sum(1, 0.3 + 7j) == 1.0 + 0.0j

    def test_two_terms_sigma_one(self):
        assert partial_sum(2, 1.0 + 0.0j) == 0.5 + 0.0j

    def test_thousand_terms_alternating_harmonic(self):
        got = partial_sum(1000, 1.0 + 0.0j)
        assert abs(got - S_1000_SIGMA1) < 1e-13
        # the even-index sum sits half a term below ln 2
        assert abs((math.log(2.0) - got.real) - 1.0 / 2000.0) < 1e-6

    def test_empty_sum_convention(self):
        assert partial_sum(0, 0.5 + 1j) == 0.0 + 0.0j

    @given(
        n=st.integers(min_value=2, max_value=20000),
        sigma=st.floats(min_value=0.1, max_value=0.95),
        t=st.floats(min_value=0.0, max_value=100.0),
    )
    @settings(max_examples=40, deadline=None)
    def test_telescoping(self, n, sigma, t):
        s = complex(sigma, t)
        gap = partial_sum(n, s) - partial_sum(n - 1, s)
        term = eta_term(n, s)
        scale = max(1.0, abs(partial_sum(n, s)))
        assert abs(gap - term) <= 1e-14 * scale

    @pytest.mark.parametrize("n", [10**5, 10**6])
    def test_telescoping_large(self, n):
        s = 0.5 + 20.0j
        path = partial_sum_path(s, n)
        gap = path[-1] - path[-2]
        assert abs(gap - eta_term(n, s)) <= 1e-14 * max(1.0, abs(path[-1]))

    @given(
        n=st.integers(min_value=1, max_value=5000),
        sigma=st.floats(min_value=0.1, max_value=0.9),
        t=st.floats(min_value=0.1, max_value=80.0),
    )
    @settings(max_examples=40, deadline=None)
    def test_conjugate_symmetry_exact(self, n, sigma, t):
        s = complex(sigma, t)
        assert partial_sum(n, s.conjugate()) == partial_sum(n, s).conjugate()

    def test_path_matches_scalar(self):
        s = 0.404 + 147.0j
        path = partial_sum_path(s, 70000)
        for n in (1, 2, 3, 65535, 65536, 65537, 70000):
            assert path[n - 1] == partial_sum(n, s)


class TestStreaming:
    def test_states_match_path(self):
        s = 0.5 + 38.0j
        path = partial_sum_path(s, 400)
        stream = iter_partial_sums(s)
        for n in range(1, 401):
            state = next(stream)
            assert state.n == n
            assert abs(state.sum - path[n - 1]) < 1e-14

    def test_state_invariants(self):
        s = 0.25 + 12.0j
        prev = None
        for state in iter_partial_sums(s):
            assert isinstance(state, SeriesState)
            assert abs(abs(state.last_term) - state.n ** -0.25) < 1e-14
            if prev is not None:
                assert abs((state.sum - prev.sum) - state.last_term) < 1e-13
            prev = state
            if state.n >= 300:
                break

    def test_offset_start(self):
        s = 0.7 + 5.0j
        stream = iter_partial_sums(s, n_from=1001)
        state = next(stream)
        assert state.n == 1001
        assert abs(state.sum - partial_sum(1001, s)) < 1e-13


class TestAngles:
    def test_segment_angle_trivials(self):
        assert segment_angle(1, 123.0) == 0.0
        assert segment_angle(2, 0.0) == math.pi

    def test_segment_angle_frozen(self):
        assert abs(segment_angle(3, 2.0) - (-2.1972245773362194)) < 1e-15

    def test_turn_angle_zero_t(self):
        assert turn_angle(17, 0.0) == 0.0

    def test_turn_angle_frozen(self):
        assert abs(turn_angle(1200, 20.0) - 0.016659726077837255) < 1e-15

    def test_turn_angle_decreasing_in_n(self):
        vals = [turn_angle(n, 20.0) for n in range(1, 2000)]
        assert all(b < a for a, b in zip(vals, vals[1:]))

    def test_turn_angle_rejects_negative_t(self):
        with pytest.raises(ValueError):
            turn_angle(5, -1.0)


class TestSegment:
    def test_segment_consistency(self):
        s = 0.5 + 38.0j
        for n in (1, 2, 293, 313):
            seg = segment(n, s)
            term = eta_term(n, s)
            assert abs((seg.end - seg.start) - term) < 1e-13
            assert abs(seg.length - abs(term)) < 1e-14
            assert seg.theta == segment_angle(n, 38.0)
            # the term points along theta
            assert abs(cmath.exp(1j * seg.theta) * seg.length - term) < 1e-13
