"""Exact poles by damped Newton iteration on the model residuals.

Seeds come from the 1/n expansion. A root is only certified near its seed:
leaving a disc of radius ``basin_radius`` (default pi, half the 2 pi strip
height in w) is reported as a probable jump to a neighbouring pole.
"""

import math
import os
from dataclasses import dataclass
from typing import Optional

from . import _kernels
from .complexcore import as_complex
from .errors import BasinEscapeError, ConvergenceError, DomainError
from .expansion import CLOSED_FORM_ORDER, generic_pole_approx
from .models import Branch

DEFAULT_TOL = 1e-13
DEFAULT_MAX_ITER = 50
DEFAULT_BASIN = math.pi
MAX_HALVINGS = 20

BASIN_ENV = "RESONANCE_SEED_BASIN"

_K = _kernels._pykernels


@dataclass(frozen=True)
class RootResult:
    """Outcome of a Newton solve.

    ``residual_norm`` is ``|f(w)|``. ``step_norm`` is ``|f(w)/f'(w)|``, the
    distance to the root predicted by one more Newton step, in w units.
    """

    w: complex
    iterations: int
    residual_norm: float
    step_norm: float
    seed: complex
    converged: bool
    n: Optional[int] = None
    branch: Branch = Branch.NONE


def default_basin_radius():
    raw = os.environ.get(BASIN_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BASIN
    try:
        value = float(raw)
    except ValueError:
        raise DomainError(f"{BASIN_ENV} must be a real number, got {raw!r}") from None
    if not value > 0 or not math.isfinite(value):
        raise DomainError(f"{BASIN_ENV} must be positive and finite, got {raw!r}")
    return value


_STATUS_TEXT = {
    _K.MAX_ITER: "iteration limit reached",
    _K.ZERO_DERIVATIVE: "derivative vanished",
    _K.STAGNATED: "no step reduces the residual",
    _K.NONFINITE: "residual is not finite at the seed",
}


def newton_solve(model, seed, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER, basin_radius=None, n=None, branch=Branch.NONE):
    """Refine ``seed`` to a root of ``model``'s pole equation.

    Raises :class:`ConvergenceError` (or :class:`BasinEscapeError`) instead of
    returning an unconverged iterate; the exception carries the last state.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    if max_iter < 0:
        raise DomainError("max_iter must be >= 0")
    basin = default_basin_radius() if basin_radius is None else float(basin_radius)
    seed = as_complex(seed, "seed")
    w, iterations, fn, status = _kernels.impl.newton(
        model.kernel_code, *model.kernel_args(), seed, float(tol), int(max_iter), basin, MAX_HALVINGS
    )
    _, df, _ = _kernels.impl.residual(model.kernel_code, w, *model.kernel_args())
    step = fn / abs(df) if df != 0 else math.inf
    result = RootResult(
        w=complex(w),
        iterations=int(iterations),
        residual_norm=float(fn),
        step_norm=float(step),
        seed=seed,
        converged=status == _K.CONVERGED,
        n=n,
        branch=Branch.parse(branch),
    )
    if status == _K.BASIN_ESCAPE:
        raise BasinEscapeError(
            f"{model.describe()}: Newton left the basin |w - seed| <= {basin:g} "
            f"(seed {seed:.6g}, reached {w:.6g})",
            result,
        )
    if status != _K.CONVERGED:
        raise ConvergenceError(f"{model.describe()}: {_STATUS_TEXT[status]} (|f| = {fn:.3g})", result)
    return result


def exact_pole(model, n, branch=Branch.NONE, seed_order=None, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER, basin_radius=None):
    """Expansion seed of order ``seed_order`` refined by :func:`newton_solve`.

    ``seed_order=None`` uses the highest closed-form order of the model.
    """
    if seed_order is None:
        seed_order = CLOSED_FORM_ORDER[model.name]
    approx = generic_pole_approx(model, n, branch, seed_order)
    return newton_solve(model, approx.w_approx, tol, max_iter, basin_radius, n=n, branch=approx.branch)
