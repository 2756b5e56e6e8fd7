"""The three delta-barrier models and their pole equations in ``w = 2 pi i k``.

* ``Winter(z)``: hard wall at 0, barrier at pi. Poles: ``e^w - z w - 1 = 0``.
* ``DoubleDelta(z0, zp)``: barriers at 0 and pi.
  Poles: ``e^w - (1 + z0 w)(1 + zp w) = 0``.
* ``TripleDelta(zm, z0, zp)``: barriers at -pi, 0, pi.
  Poles: ``a e^{2w} - b e^w + c = 0`` with ``a, b, c`` from
  :func:`triple_coefficients`.

Couplings are accepted as complex numbers; the physical case is real.
"""

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from . import _kernels
from .complexcore import as_complex
from .errors import DomainError


class Branch(str, Enum):
    PLUS = "plus"
    MINUS = "minus"
    NONE = "none"

    @property
    def sign(self):
        return {"plus": 1, "minus": -1, "none": 0}[self.value]

    @classmethod
    def parse(cls, value):
        if isinstance(value, Branch):
            return value
        aliases = {"+": "plus", "-": "minus", "": "none", None: "none"}
        try:
            return cls(aliases.get(value, value))
        except ValueError:
            raise DomainError(f"unknown branch {value!r}") from None


@dataclass(frozen=True)
class ModelSpec:
    """Base class; use :class:`Winter`, :class:`DoubleDelta` or :class:`TripleDelta`."""

    name = "model"
    kernel_code = -1
    coupling_names = ()
    branches = (Branch.NONE,)

    def __post_init__(self):
        for field in self.coupling_names:
            value = as_complex(getattr(self, field), field)
            object.__setattr__(self, field, value)
            if abs(value) >= 1:
                warnings.warn(
                    f"{self.name}: |{field}| = {abs(value):g} >= 1; the expansion assumes weak coupling",
                    stacklevel=3,
                )

    @property
    def couplings(self):
        return tuple(getattr(self, f) for f in self.coupling_names)

    @property
    def is_physical(self):
        """True when all couplings are real."""
        return all(c.imag == 0 for c in self.couplings)

    @property
    def is_free(self):
        return all(c == 0 for c in self.couplings)

    def kernel_args(self):
        args = list(self.couplings) + [0j] * (3 - len(self.coupling_names))
        return tuple(args)

    def residual(self, w):
        f, _, _ = _kernels.impl.residual(self.kernel_code, as_complex(w, "w"), *self.kernel_args())
        return f

    def residual_derivative(self, w):
        _, df, _ = _kernels.impl.residual(self.kernel_code, as_complex(w, "w"), *self.kernel_args())
        return df

    def effective_couplings(self, n):
        return tuple(effective_coupling(n, c) for c in self.couplings)

    def describe(self):
        parts = ", ".join(f"{f}={_fmt(c)}" for f, c in zip(self.coupling_names, self.couplings))
        return f"{self.name}({parts})"


def _fmt(c):
    return f"{c.real:g}" if c.imag == 0 else f"{c:g}"


@dataclass(frozen=True)
class Winter(ModelSpec):
    z: complex = 0j

    name = "winter"
    kernel_code = _kernels._pykernels.WINTER
    coupling_names = ("z",)


@dataclass(frozen=True)
class DoubleDelta(ModelSpec):
    z0: complex = 0j
    zp: complex = 0j

    name = "double"
    kernel_code = _kernels._pykernels.DOUBLE
    coupling_names = ("z0", "zp")


@dataclass(frozen=True)
class TripleDelta(ModelSpec):
    zm: complex = 0j
    z0: complex = 0j
    zp: complex = 0j

    name = "triple"
    kernel_code = _kernels._pykernels.TRIPLE
    coupling_names = ("zm", "z0", "zp")
    branches = (Branch.PLUS, Branch.MINUS)


MODELS = {cls.name: cls for cls in (Winter, DoubleDelta, TripleDelta)}


def make_model(name, **couplings):
    try:
        cls = MODELS[name]
    except KeyError:
        raise DomainError(f"unknown model {name!r}; choose from {', '.join(MODELS)}") from None
    unknown = set(couplings) - set(cls.coupling_names)
    if unknown:
        raise DomainError(f"{name} has no coupling(s) {', '.join(sorted(unknown))}")
    return cls(**couplings)


def effective_coupling(n, z):
    """``zeta = 2 pi i n z``."""
    if int(n) != n or n == 0:
        raise DomainError(f"excitation number must be a nonzero integer, got {n!r}")
    return 2j * math.pi * int(n) * as_complex(z, "coupling")


def winter_residual(w, z):
    f, _, _ = _kernels.impl.residual(_kernels._pykernels.WINTER, as_complex(w, "w"), as_complex(z, "z"), 0j, 0j)
    return f


def double_residual(w, z0, zp):
    f, _, _ = _kernels.impl.residual(
        _kernels._pykernels.DOUBLE, as_complex(w, "w"), as_complex(z0, "z0"), as_complex(zp, "zp"), 0j
    )
    return f


class TripleCoefficients(NamedTuple):
    a: complex
    b: complex
    c: complex


def triple_coefficients(w, zm, z0, zp):
    w, zm, z0, zp = (as_complex(v) for v in (w, zm, z0, zp))
    a = 1 - z0 * w
    b = 2 + (zm + zp) * w
    c = 1 + (zm + z0 + zp) * w + (zm * z0 + zm * zp + z0 * zp) * w**2 + zm * z0 * zp * w**3
    return TripleCoefficients(a, b, c)


def triple_residual(w, zm, z0, zp):
    f, _, _ = _kernels.impl.residual(
        _kernels._pykernels.TRIPLE,
        as_complex(w, "w"),
        as_complex(zm, "zm"),
        as_complex(z0, "z0"),
        as_complex(zp, "zp"),
    )
    return f
