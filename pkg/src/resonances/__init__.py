"""Resonance poles of delta-barrier models from the 1/n expansion.

The n-th pole is ``w = 2 pi i n + sigma(n, zeta)`` with ``zeta = 2 pi i n z``;
``sigma`` is expanded in powers of ``1/(2 pi i n)`` at fixed ``zeta`` and every
approximate pole can be refined by Newton iteration on the exact pole equation.
"""

from ._kernels import available_backends, backend_name, set_backend
from .complexcore import TruncatedSeries, principal_log, principal_sqrt
from .errors import (
    BasinEscapeError,
    CapabilityError,
    ConvergenceError,
    DegenerateDenominatorError,
    DomainError,
    EmptyPlotError,
    ResonanceError,
    SingularityError,
)
from .expansion import (
    ExpansionResult,
    generic_pole_approx,
    winter_pole_approx,
    winter_sigma_series,
)
from .models import Branch, DoubleDelta, ModelSpec, TripleDelta, Winter, effective_coupling
from .observables import ResonanceRecord, gamma_leading, make_record
from .oracle import RootResult, exact_pole, newton_solve

__version__ = "0.1.0"
