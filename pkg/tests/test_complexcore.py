import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from resonances.complexcore import (
    TruncatedSeries,
    principal_log,
    principal_sqrt,
    series_add,
    series_div,
    series_exp,
    series_log,
    series_mul,
)
from resonances.errors import DomainError, SingularityError

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, finite, finite)


def random_series(rng, order, scale=1.0):
    return TruncatedSeries(scale * (rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1)))


class TestPrincipalLog:
    def test_identity(self):
        assert principal_log(1) == 0

    def test_negative_real_axis_is_upper_edge(self):
        assert principal_log(-1) == 1j * math.pi
        # signed zero must not flip the branch
        assert principal_log(complex(-1.0, -0.0)) == 1j * math.pi
        assert principal_log(complex(-2.5, -0.0)).imag == math.pi

    def test_value(self):
        # mpmath, 40 digits
        expected = complex(0.16637005679618795915, -0.56098245256350348653)
        assert abs(principal_log(1 - 0.628319j) - expected) < 1e-15

    def test_zero(self):
        with pytest.raises(DomainError):
            principal_log(0)

    @pytest.mark.parametrize("bad", [complex(math.nan, 0), complex(0, math.inf)])
    def test_nonfinite(self, bad):
        with pytest.raises(DomainError):
            principal_log(bad)

    @given(complexes)
    def test_exp_inverts(self, c):
        if c == 0:
            return
        lg = principal_log(c)
        back = cmath.exp(lg)
        # exp amplifies the rounding of log c by |log c|
        assert abs(back - c) <= 4e-16 * (1 + abs(lg)) * abs(c)

    @given(complexes)
    def test_argument_range(self, c):
        if c == 0:
            return
        arg = principal_log(c).imag
        assert -math.pi < arg <= math.pi


class TestPrincipalSqrt:
    @pytest.mark.parametrize(
        "c, root", [(1, 1), (-1, 1j), (2j, 1 + 1j), (0, 0), (complex(-4, -0.0), 2j)]
    )
    def test_values(self, c, root):
        assert abs(principal_sqrt(c) - root) < 1e-15

    @given(complexes)
    def test_square_and_half_plane(self, c):
        r = principal_sqrt(c)
        assert abs(r * r - c) <= 1.6e-15 * abs(c) + 1e-320  # subnormals have no relative precision
        assert r.real >= 0
        if r.real == 0:
            assert r.imag >= 0


class TestSeriesArithmetic:
    def test_product(self, backend):
        a = TruncatedSeries([1, 1, 0])
        b = TruncatedSeries([1, -1, 0])
        assert np.allclose((a * b).coeffs, [1, 0, -1], atol=0)

    def test_geometric(self, backend):
        q = series_div(TruncatedSeries.constant(1, 2), TruncatedSeries([1, -1, 0]))
        assert list(q) == [1, 1, 1]

    def test_order_is_preserved(self, backend):
        a = TruncatedSeries([1, 2, 3, 4])
        assert (a * a).order == 3 and (a / a).order == 3 and (a + a).order == 3

    def test_mismatched_orders(self):
        with pytest.raises(DomainError):
            series_add(TruncatedSeries([1, 2]), TruncatedSeries([1, 2, 3]))

    def test_div_by_zero_constant(self):
        with pytest.raises(DomainError):
            series_div(TruncatedSeries([1, 1]), TruncatedSeries([0, 1]))

    @pytest.mark.parametrize("seed", range(10))
    def test_reciprocal(self, backend, seed):
        rng = np.random.default_rng(seed)
        a = random_series(rng, 8)
        one = series_mul(a, series_div(TruncatedSeries.constant(1, 8), a))
        # relative to the size of the coefficients involved
        scale = max(1.0, max(abs(c) for c in a) / abs(a[0])) ** 8
        assert abs(one[0] - 1) < 1e-13
        assert max(abs(c) for c in one.coeffs[1:]) < 1e-13 * scale

    @pytest.mark.parametrize("seed", range(10))
    def test_ring_axioms(self, backend, seed):
        rng = np.random.default_rng(100 + seed)
        K = int(rng.integers(0, 13))
        a, b, c = (random_series(rng, K) for _ in range(3))
        assert np.allclose(((a * b) * c).coeffs, (a * (b * c)).coeffs, rtol=0, atol=1e-13 * 10 ** (K / 4))
        assert np.allclose((a * (b + c)).coeffs, (a * b + a * c).coeffs, rtol=0, atol=1e-13 * 10 ** (K / 4))
        assert np.allclose((a * b).coeffs, (b * a).coeffs, rtol=0, atol=1e-13)

    def test_scalar_ops(self):
        a = TruncatedSeries([1, 2])
        assert list(2 * a) == [2, 4]
        assert list(a - 1) == [0, 2]
        assert list(1 - a) == [0, -2]
        assert list(a / 2) == [0.5, 1]
        assert list(a.shifted()) == [0, 1]

    def test_immutable(self):
        a = TruncatedSeries([1, 2])
        with pytest.raises(ValueError):
            a.coeffs[0] = 5

    def test_nonfinite_rejected(self):
        with pytest.raises(DomainError):
            TruncatedSeries([1, math.nan])

    def test_evaluate(self):
        a = TruncatedSeries([1, 2, 3])
        assert a.evaluate(0.5) == 1 + 1 + 0.75


def exp_by_powers(u, terms=40):
    """exp of a series with zero constant term by summing u^m/m! (independent of the recurrence)."""
    out = TruncatedSeries.constant(1, u.order)
    power = TruncatedSeries.constant(1, u.order)
    for m in range(1, terms):
        power = power * u
        out = out + power / math.factorial(m)
    return out


class TestSeriesLog:
    def test_constant(self, backend):
        assert np.allclose(series_log(TruncatedSeries([math.e, 0, 0])).coeffs, [1, 0, 0], atol=1e-16)

    def test_taylor_of_log1p(self, backend):
        a = 0.3 - 0.7j
        out = series_log(TruncatedSeries([1, a, 0]))
        assert np.allclose(out.coeffs, [0, a, -a * a / 2], rtol=0, atol=1e-16)

    def test_zero_constant(self):
        with pytest.raises(SingularityError):
            series_log(TruncatedSeries([0, 1, 0]))

    def test_constant_term_uses_principal_branch(self):
        assert series_log(TruncatedSeries([-1, 0]))[0] == 1j * math.pi

    @pytest.mark.parametrize("seed", range(8))
    def test_round_trip_through_exp(self, backend, seed):
        rng = np.random.default_rng(seed)
        u = random_series(rng, 8, scale=0.5)
        u = TruncatedSeries(np.concatenate([[0], u.coeffs[1:]]))
        c0 = complex(rng.normal(), rng.normal())
        s = exp_by_powers(u) * cmath.exp(c0)
        back = series_log(s)
        want = u + c0
        assert np.allclose(back.coeffs, want.coeffs, rtol=0, atol=1e-12)

    def test_exp_recurrence_matches_power_sum(self, backend):
        rng = np.random.default_rng(3)
        u = TruncatedSeries(np.concatenate([[0], random_series(rng, 7, 0.5).coeffs[1:]]))
        assert np.allclose(series_exp(u).coeffs, exp_by_powers(u).coeffs, rtol=0, atol=1e-13)

    @pytest.mark.parametrize("seed", range(8))
    def test_log_of_product(self, backend, seed):
        rng = np.random.default_rng(50 + seed)
        a = random_series(rng, 6, 0.3) + 1.5
        b = random_series(rng, 6, 0.3) + 2.0
        assert a[0].real > 0 and b[0].real > 0
        lhs = series_log(a * b)
        rhs = series_log(a) + series_log(b)
        assert np.allclose(lhs.coeffs, rhs.coeffs, rtol=0, atol=1e-12)

    def test_sqrt(self, backend):
        rng = np.random.default_rng(9)
        a = random_series(rng, 6, 0.3) + 1.0
        r = a.sqrt()
        assert np.allclose((r * r).coeffs, a.coeffs, rtol=0, atol=1e-13)
        assert r[0] == principal_sqrt(a[0])
