"""Principal-branch complex functions and truncated power series.

Branch conventions
------------------
``principal_log`` returns ``ln|c| + i arg(c)`` with ``-pi < arg(c) <= pi``, so
the negative real axis maps to ``+i pi``. ``principal_sqrt`` returns the root
with argument in ``(-pi/2, pi/2]``. A negative zero imaginary part is treated
as ``+0`` so that neither function ever lands on the excluded lower edge.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DomainError, SingularityError

DEFAULT_ORDER = 8


def as_complex(value, name="value"):
    """Coerce to ``complex`` and reject NaN/Inf components."""
    try:
        c = complex(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} is not a number: {value!r}") from None
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise DomainError(f"{name} must be finite, got {c!r}")
    return c


def _upper_edge(c):
    # -0.0 imaginary part would select the -pi side of the cut
    if c.imag == 0.0:
        return complex(c.real, 0.0)
    return c


def principal_log(c):
    c = as_complex(c, "argument of log")
    if c == 0:
        raise DomainError("logarithm of zero")
    out = cmath.log(_upper_edge(c))
    if out.imag == -math.pi:
        # arg just above -pi that rounded onto the excluded edge
        out = complex(out.real, math.nextafter(-math.pi, 0.0))
    return out


def principal_sqrt(c):
    c = as_complex(c, "argument of sqrt")
    out = cmath.sqrt(_upper_edge(c))
    if out.real == 0 and out.imag < 0:
        # true real part underflowed; keep the root in the right half-plane
        out = complex(math.nextafter(0.0, 1.0), out.imag)
    return out


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Power series in a small parameter, truncated after ``order``.

    ``coeffs[k]`` multiplies ``eps**k``. Arithmetic between two series of the
    same order stays at that order; higher powers are dropped.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128).ravel()
        if c.size == 0:
            raise DomainError("a truncated series needs at least one coefficient")
        if not np.all(np.isfinite(c)):
            raise DomainError("series coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def constant(cls, value, order):
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = as_complex(value)
        return cls(c)

    @classmethod
    def variable(cls, order, scale=1.0):
        """The series ``scale * eps`` (zero if ``order`` is 0)."""
        c = np.zeros(order + 1, dtype=np.complex128)
        if order >= 1:
            c[1] = as_complex(scale)
        return cls(c)

    @property
    def order(self):
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, k):
        return complex(self.coeffs[k])

    def __iter__(self):
        return (complex(c) for c in self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({[complex(c) for c in self.coeffs]!r})"

    def evaluate(self, eps):
        """Sum ``coeffs[k] * eps**k`` (Horner)."""
        eps = complex(eps)
        acc = 0j
        for c in reversed(self.coeffs.tolist()):
            acc = acc * eps + c
        return acc

    def shifted(self):
        """Multiply by ``eps`` and truncate: ``(c0, c1, ...) -> (0, c0, c1, ...)``."""
        c = np.zeros_like(self.coeffs)
        c[1:] = self.coeffs[:-1]
        return TruncatedSeries(c)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other):
        return series_add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return series_add(self, -self._coerce(other))

    def __rsub__(self, other):
        return series_add(self._coerce(other), -self)

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(self.coeffs * as_complex(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        other = as_complex(other)
        if other == 0:
            raise DomainError("division of a series by zero")
        return TruncatedSeries(self.coeffs / other)

    def __rtruediv__(self, other):
        return series_div(self._coerce(other), self)

    def log(self):
        return series_log(self)

    def exp(self):
        return series_exp(self)

    def sqrt(self):
        return series_sqrt(self)


def _check_orders(a, b):
    if a.order != b.order:
        raise DomainError(f"series orders differ: {a.order} vs {b.order}")


def series_add(a, b):
    _check_orders(a, b)
    return TruncatedSeries(a.coeffs + b.coeffs)


def series_mul(a, b):
    _check_orders(a, b)
    return TruncatedSeries(_kernels.impl.series_mul(a.coeffs, b.coeffs))


def series_div(a, b):
    _check_orders(a, b)
    if b.coeffs[0] == 0:
        raise DomainError("series division by a series with zero constant term")
    return TruncatedSeries(_kernels.impl.series_div(a.coeffs, b.coeffs))


def series_log(s):
    """Logarithm; only the constant term picks a branch (the principal one)."""
    s0 = complex(s.coeffs[0])
    if s0 == 0:
        raise SingularityError("logarithm of a series with zero constant term")
    return TruncatedSeries(_kernels.impl.series_log(s.coeffs, principal_log(s0)))


def series_exp(s):
    return TruncatedSeries(_kernels.impl.series_exp(s.coeffs, cmath.exp(complex(s.coeffs[0]))))


def series_sqrt(s):
    """Square root with the principal root of the constant term."""
    s0 = complex(s.coeffs[0])
    if s0 == 0:
        raise SingularityError("square root of a series with zero constant term")
    return TruncatedSeries(_kernels.impl.series_sqrt(s.coeffs, principal_sqrt(s0)))
