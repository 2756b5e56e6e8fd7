"""Physical quantities attached to a pole ``w``.

``k = w / (2 pi i)`` is the complex momentum, ``E = k**2`` the complex energy
and ``gamma = -2 Im E`` the decay rate, so that ``|exp(-i E t)|**2 = exp(-gamma t)``.
"""

import cmath
import math
from dataclasses import dataclass, replace
from typing import Optional

from .complexcore import as_complex
from .errors import DomainError, SingularityError
from .models import Branch

SQRT_2_OVER_PI = math.sqrt(2 / math.pi)


def momentum_from_w(w):
    return as_complex(w, "w") / (2j * math.pi)


def energy_from_momentum(k):
    k = as_complex(k, "k")
    return k * k


@dataclass(frozen=True)
class ResonanceRecord:
    """One pole. ``k``, ``E`` and ``gamma`` always derive from ``w``."""

    n: int
    branch: Branch
    K: int
    w: complex
    residual: Optional[float] = None
    w_exact: Optional[complex] = None
    model: str = ""

    @property
    def k(self):
        return momentum_from_w(self.w)

    @property
    def E(self):
        return energy_from_momentum(self.k)

    @property
    def gamma(self):
        return -2.0 * self.E.imag

    @property
    def rel_error(self):
        if self.w_exact is None:
            return None
        return abs(self.w - self.w_exact) / abs(self.w_exact)

    def exact(self):
        """Copy of this record whose ``w`` is the exact pole."""
        if self.w_exact is None:
            raise DomainError("record has no exact pole")
        return replace(self, w=self.w_exact)


def make_record(n, branch, K, w, residual=None, w_exact=None, model=""):
    return ResonanceRecord(
        n=int(n),
        branch=Branch.parse(branch),
        K=int(K),
        w=as_complex(w, "w"),
        residual=residual,
        w_exact=None if w_exact is None else as_complex(w_exact, "w_exact"),
        model=model,
    )


def decay_rate(record):
    return -2.0 * record.E.imag


def _real_coupling(z):
    if isinstance(z, complex):
        if z.imag != 0:
            raise DomainError(f"the leading decay rate needs a real coupling, got {z!r}")
        z = z.real
    z = float(z)
    if not math.isfinite(z):
        raise DomainError("coupling must be finite")
    return z


def gamma_leading(n, z):
    """Leading-order decay rate ``(n/pi) ln[1 + (2 pi z n)^2]`` for real ``z``."""
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    z = _real_coupling(z)
    return n / math.pi * math.log1p((2 * math.pi * z * n) ** 2)


def gamma_from_sigma0(n, sigma0):
    """Decay rate kept to O(n) from ``k = n + sigma0/(2 pi i)``: ``-2 Im(n sigma0 / (pi i))``."""
    return -2.0 * (n * as_complex(sigma0) / (1j * math.pi)).imag


def outside_amplitude(k, z):
    """Amplitude ``pi z k / (2 pi i z k + 1)`` of the outgoing wave beyond the barrier."""
    k = as_complex(k, "k")
    z = as_complex(z, "z")
    den = 2j * math.pi * z * k + 1
    if den == 0:
        raise SingularityError("2 pi i z k = -1: pole of the outside amplitude")
    return math.pi * z * k / den


def winter_wavefunction(x, t, record, z, side="auto"):
    """Gamow wavefunction of the single-barrier model at ``(x, t)``.

    ``sqrt(2/pi) exp(-i E t)`` times ``sin(k x)`` for ``0 <= x <= pi`` and
    ``a exp(i k x)`` for ``x > pi``. ``side`` forces one piece
    (``"inside"``/``"outside"``) regardless of ``x``; it exists to compare
    both pieces at the barrier. Normalisation is the conventional prefactor.
    """
    x = float(x)
    if not x >= 0:
        raise DomainError(f"x must be >= 0, got {x!r}")
    if side == "auto":
        side = "inside" if x <= math.pi else "outside"
    k = record.k
    phase = cmath.exp(-1j * record.E * float(t))
    if side == "inside":
        piece = cmath.sin(k * x)
    elif side == "outside":
        piece = outside_amplitude(k, z) * cmath.exp(1j * k * x)
    else:
        raise DomainError(f"side must be 'auto', 'inside' or 'outside', got {side!r}")
    return SQRT_2_OVER_PI * phase * piece
