"""Witt coordinates, ghost components, and the connecting bijections."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tracewitt import (
    check_trace_sequence,
    coeffs_to_witt,
    divisors,
    elementary_to_traces,
    ghost_from_witt,
    traces_to_elementary,
    witt_from_ghost,
    witt_to_coeffs,
)

from .oracles import series_traces, witt_product_coeffs

INT_VECS = st.lists(st.integers(min_value=-20, max_value=20), max_size=12)
SMALL_VECS = st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=8)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(13) == [1, 13]
    with pytest.raises(ValueError):
        divisors(0)


class TestCoeffsWitt:
    def test_fibonacci(self):
        assert coeffs_to_witt((1, -1)) == (1, 1)

    def test_teichmueller(self):
        assert coeffs_to_witt([2], 4) == (2, 0, 0, 0)

    def test_empty(self):
        assert coeffs_to_witt(()) == ()
        assert witt_to_coeffs(()) == ()

    @given(INT_VECS)
    def test_round_trip(self, a):
        assert witt_to_coeffs(coeffs_to_witt(a)) == tuple(a)

    @given(INT_VECS)
    def test_reverse_round_trip(self, x):
        assert coeffs_to_witt(witt_to_coeffs(x)) == tuple(x)

    @given(INT_VECS)
    def test_integer_coeffs_give_integer_witt(self, a):
        assert all(isinstance(x, int) for x in coeffs_to_witt(a))

    @given(INT_VECS)
    def test_witt_to_coeffs_matches_product_oracle(self, x):
        assert list(witt_to_coeffs(x)) == witt_product_coeffs(x, len(x))

    def test_truncation_and_padding(self):
        full = coeffs_to_witt((1, -1), 6)
        assert len(full) == 6
        assert coeffs_to_witt((1, -1), 1) == (1,)


class TestGhost:
    def test_single_coordinate_in_degree_two(self):
        # only x_2 set: b_n = 2 * x_2^(n/2) at even n, 0 at odd n
        assert ghost_from_witt((0, 1), 4) == (0, 2, 0, 2)

    def test_teichmueller(self):
        assert ghost_from_witt([1], 3) == (1, 1, 1)

    def test_divisor_sum_by_hand(self):
        # b_4 = x1^4 + 2 x2^2 + 4 x4
        x = (2, 3, 5, 7)
        assert ghost_from_witt(x, 4)[3] == 2**4 + 2 * 3**2 + 4 * 7

    @given(SMALL_VECS)
    def test_matches_series_path(self, x):
        # independent route: product expansion then -t P'/P
        n = len(x)
        coeffs = witt_product_coeffs(x, n)
        assert list(ghost_from_witt(x, n)) == series_traces(coeffs, n)

    def test_empty(self):
        assert ghost_from_witt((), 0) == ()


class TestGhostInverse:
    def test_teichmueller(self):
        assert witt_from_ghost((2, 4, 8, 16)) == (2, 0, 0, 0)

    def test_non_integral_witness(self):
        assert witt_from_ghost((0, 1)) == (0, Fraction(1, 2))

    def test_empty(self):
        assert witt_from_ghost(()) == ()

    @given(INT_VECS)
    def test_round_trip(self, x):
        ghosts = ghost_from_witt(x, len(x))
        assert witt_from_ghost(ghosts) == tuple(map(Fraction, x))

    @given(INT_VECS)
    def test_reverse_round_trip(self, b):
        witt = witt_from_ghost(b)
        assert ghost_from_witt(witt, len(b)) == tuple(map(Fraction, b))


class TestCharacterizationBridge:
    @given(st.lists(st.integers(min_value=-10, max_value=10), max_size=8))
    def test_checker_agrees_with_witt_integrality(self, b):
        # the characterization: b passes all congruences iff its Witt vector is integral
        witt = witt_from_ghost(b)
        integral = all(x.denominator == 1 for x in map(Fraction, witt))
        assert check_trace_sequence(b).overall == integral

    @given(st.lists(st.integers(min_value=-8, max_value=8), max_size=8))
    def test_ghost_equals_newton_traces(self, a):
        # two routes from coefficients to traces agree:
        # Newton recursion vs Witt peel + divisor sums
        n = len(a)
        via_newton = elementary_to_traces(a, n)
        via_witt = ghost_from_witt(coeffs_to_witt(a), n)
        assert tuple(map(Fraction, via_newton)) == tuple(map(Fraction, via_witt))

    @given(st.lists(st.integers(min_value=-8, max_value=8), max_size=8))
    def test_witt_of_traces_equals_witt_of_coeffs(self, b):
        # triangle commutes: traces -> coeffs -> Witt == traces -> Witt
        coeffs = traces_to_elementary(b)
        assert coeffs_to_witt(coeffs) == witt_from_ghost(b)
