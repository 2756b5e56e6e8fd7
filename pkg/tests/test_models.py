import cmath
import math
import warnings

import numpy as np
import pytest

from resonances.errors import DomainError
from resonances.models import (
    Branch,
    DoubleDelta,
    TripleDelta,
    Winter,
    double_residual,
    effective_coupling,
    make_model,
    triple_coefficients,
    triple_residual,
    winter_residual,
)


def test_effective_coupling():
    assert effective_coupling(1, -0.1) == pytest.approx(-0.62831853071795868j, abs=2.3e-16)  # 2 ulp
    assert effective_coupling(-3, 0.1) == pytest.approx(-2j * math.pi * 0.3)
    for bad in (0, 1.5):
        with pytest.raises(DomainError):
            effective_coupling(bad, 0.1)


def test_triple_coefficients_example():
    a, b, c = triple_coefficients(1j, 0.1, -0.05, 0.15)
    assert a == pytest.approx(1 + 0.05j, abs=1e-15)
    assert b == pytest.approx(2 + 0.25j, abs=1e-15)
    assert c == pytest.approx(0.9975 + 0.20075j, abs=1e-15)


def test_triple_c_factorizes():
    rng = np.random.default_rng(1)
    for _ in range(20):
        w, zm, z0, zp = rng.normal(size=4) + 1j * rng.normal(size=4)
        *_, c = triple_coefficients(w, zm, z0, zp)
        assert abs(c - (1 + zm * w) * (1 + z0 * w) * (1 + zp * w)) < 1e-12 * max(1, abs(c))


def test_free_models_have_integer_poles(backend):
    for n in (1, 4, -2):
        w = 2j * math.pi * n
        assert abs(winter_residual(w, 0)) < 1e-14
        assert abs(double_residual(w, 0, 0)) < 1e-14
        assert abs(triple_residual(w, 0, 0, 0)) < 1e-14


def test_residual_matches_expanded_formula(backend):
    rng = np.random.default_rng(2)
    for _ in range(20):
        w = complex(rng.normal(), 10 * rng.normal())
        zm, z0, zp = 0.1 * (rng.normal(size=3) + 1j * rng.normal(size=3))
        a, b, c = triple_coefficients(w, zm, z0, zp)
        direct = a * cmath.exp(2 * w) - b * cmath.exp(w) + c
        assert abs(triple_residual(w, zm, z0, zp) - direct) < 1e-13 * max(1, abs(cmath.exp(2 * w)))
        d = cmath.exp(w) - (1 + z0 * w) * (1 + zp * w)
        assert abs(double_residual(w, z0, zp) - d) < 1e-13 * max(1, abs(cmath.exp(w)))


def test_triple_with_vanishing_centre_factorizes(backend):
    # z0 = 0: a e^{2w} - b e^w + c = (e^w - 1 - zm w)(e^w - 1 - zp w)
    rng = np.random.default_rng(3)
    for _ in range(10):
        w = complex(rng.normal(), 10 * rng.normal())
        zm, zp = 0.1 * (rng.normal(size=2) + 1j * rng.normal(size=2))
        prod = winter_residual(w, zm) * winter_residual(w, zp)
        assert abs(triple_residual(w, zm, 0, zp) - prod) < 1e-12 * max(1, abs(cmath.exp(2 * w)))


def test_double_with_one_coupling_is_winter(backend):
    for w in (0.3 + 6j, -0.2 + 19j):
        assert double_residual(w, 0, -0.1) == pytest.approx(winter_residual(w, -0.1), abs=1e-14)


class TestModelSpec:
    def test_fields_and_branches(self):
        m = TripleDelta(0.1, -0.05, 0.15)
        assert m.couplings == (0.1 + 0j, -0.05 + 0j, 0.15 + 0j)
        assert m.branches == (Branch.PLUS, Branch.MINUS)
        assert Winter(-0.1).branches == (Branch.NONE,)
        assert m.is_physical and not m.is_free
        assert Winter(0).is_free
        assert not DoubleDelta(0.1j, 0).is_physical

    def test_make_model(self):
        assert make_model("winter", z=-0.1) == Winter(-0.1)
        with pytest.raises(DomainError):
            make_model("quadruple")
        with pytest.raises(DomainError):
            make_model("winter", zp=0.1)

    def test_strong_coupling_warns(self):
        with pytest.warns(UserWarning, match="weak coupling"):
            Winter(1.5)
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            Winter(0.5)

    def test_nonfinite_coupling(self):
        with pytest.raises(DomainError):
            Winter(float("nan"))

    def test_residual_methods(self, backend):
        m = Winter(-0.1)
        w = 0.1 + 6j
        assert m.residual(w) == winter_residual(w, -0.1)
        assert m.residual_derivative(w) == pytest.approx(cmath.exp(w) + 0.1)

    def test_branch_parse(self):
        assert Branch.parse("+") is Branch.PLUS
        assert Branch.parse("minus") is Branch.MINUS
        assert Branch.PLUS.sign == 1 and Branch.MINUS.sign == -1
        with pytest.raises(DomainError):
            Branch.parse("up")

    def test_effective_couplings(self):
        assert TripleDelta(0.1, 0, 0).effective_couplings(2) == pytest.approx(
            (2j * math.pi * 0.2, 0, 0)
        )
