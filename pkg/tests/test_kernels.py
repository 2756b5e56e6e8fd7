import cmath

import numpy as np
import pytest

from resonances import _kernels
from resonances._kernels import _pykernels as P

MODELS = [
    (P.WINTER, (-0.1 + 0j, 0j, 0j)),
    (P.DOUBLE, (0.07 + 0j, -0.12 + 0j, 0j)),
    (P.TRIPLE, (0.1 + 0j, -0.05 + 0j, 0.15 + 0j)),
    (P.TRIPLE, (0.02 + 0.01j, 0.03 - 0.02j, -0.04 + 0j)),
]


def test_selector_roundtrip():
    names = _kernels.available_backends()
    assert "python" in names
    prev = _kernels.set_backend("python")
    try:
        assert _kernels.backend_name() == "python"
    finally:
        _kernels.set_backend(prev)
    with pytest.raises(ValueError):
        _kernels.get_backend("fortran")


@pytest.mark.parametrize("code, args", MODELS)
def test_derivative_matches_finite_difference(backend, code, args):
    for w in (0.3 + 6.1j, 1.2 + 31.0j, -0.4 + 12.5j):
        f, df, _ = _kernels.impl.residual(code, w, *args)
        h = 1e-6
        fd = (_kernels.impl.residual(code, w + h, *args)[0] - _kernels.impl.residual(code, w - h, *args)[0]) / (2 * h)
        fdi = (_kernels.impl.residual(code, w + 1j * h, *args)[0] - _kernels.impl.residual(code, w - 1j * h, *args)[0]) / (2j * h)
        assert abs(fd - df) < 1e-7 * max(1, abs(df))
        # holomorphic: both directions agree
        assert abs(fdi - df) < 1e-7 * max(1, abs(df))


def test_winter_residual_formula(backend):
    w, z = 0.2 + 5.0j, -0.1 + 0j
    f, df, _ = _kernels.impl.residual(P.WINTER, w, z, 0j, 0j)
    assert abs(f - (cmath.exp(w) - z * w - 1)) < 1e-14
    assert abs(df - (cmath.exp(w) - z)) < 1e-14


@pytest.mark.skipif(len(_kernels.available_backends()) < 2, reason="compiled backend not built")
class TestParity:
    py = _kernels.get_backend("python")

    @property
    def cy(self):
        return _kernels.get_backend("cython")

    @pytest.mark.parametrize("code, args", MODELS)
    def test_residual(self, code, args):
        for w in (0.1 + 6.2j, 2.0 + 60.0j, -1.0 - 3.0j):
            a = self.py.residual(code, w, *args)
            b = self.cy.residual(code, w, *args)
            for x, y in zip(a, b):
                assert abs(x - y) <= 1e-15 * max(1.0, abs(x))

    @pytest.mark.parametrize("code, args", MODELS)
    def test_newton_bitwise(self, code, args):
        for n in range(1, 30, 3):
            seed = 2j * np.pi * n + 0.1 - 0.05j
            a = self.py.newton(code, *args, seed, 1e-13, 50, np.pi, 20)
            b = self.cy.newton(code, *args, seed, 1e-13, 50, np.pi, 20)
            assert a[1:] == b[1:] or abs(a[0] - b[0]) <= 1e-15 * abs(a[0])
            assert a[3] == b[3]

    def test_series_kernels(self):
        rng = np.random.default_rng(0)
        s = rng.normal(size=9) + 1j * rng.normal(size=9)
        t = rng.normal(size=9) + 1j * rng.normal(size=9) + 3
        for name in ("series_mul", "series_div"):
            a = getattr(self.py, name)(s, t)
            b = getattr(self.cy, name)(s, t)
            assert np.allclose(a, b, rtol=1e-14, atol=0)
        assert np.allclose(self.py.series_log(t, cmath.log(t[0])), self.cy.series_log(t, cmath.log(t[0])), rtol=1e-14)
        u = s.copy()
        u[0] = 0
        assert np.allclose(self.py.series_exp(u, 1.0), self.cy.series_exp(u, 1.0), rtol=1e-14)
        assert np.allclose(self.py.series_sqrt(t, cmath.sqrt(t[0])), self.cy.series_sqrt(t, cmath.sqrt(t[0])), rtol=1e-14)


def test_newton_statuses(backend):
    k = _kernels.impl
    # seed far away with a tiny basin
    w, it, fn, st = k.newton(P.WINTER, -0.1 + 0j, 0j, 0j, 3.0 + 20j, 1e-13, 50, 1e-3, 20)
    assert st == P.BASIN_ESCAPE
    w, it, fn, st = k.newton(P.WINTER, -0.1 + 0j, 0j, 0j, 0.1 + 6.0j, 1e-13, 0, 10.0, 20)
    assert st == P.MAX_ITER and it == 0
    w, it, fn, st = k.newton(P.WINTER, -0.1 + 0j, 0j, 0j, complex(800, 0), 1e-13, 50, 10.0, 20)
    assert st == P.NONFINITE


@pytest.mark.parametrize("value, expect_python", [("1", True), ("0", False), ("", False)])
def test_environment_forces_fallback(value, expect_python):
    import subprocess
    import sys

    env = dict(__import__("os").environ, RESONANCES_PURE_PYTHON=value)
    out = subprocess.run(
        [sys.executable, "-c", "from resonances import _kernels; print(_kernels.backend_name())"],
        capture_output=True, text=True, env=env, check=True,
    ).stdout.strip()
    if expect_python or "cython" not in _kernels.available_backends():
        assert out == "python"
    else:
        assert out == "cython"
