"""1/n expansion of resonance poles.

A pole is written ``w = 2 pi i n + sigma(n, zeta)`` and ``sigma`` is expanded
in ``eps = 1/(2 pi i n)``::

    sigma = sigma_0(zeta) + eps sigma_1(zeta) + eps^2 sigma_2(zeta) + ...

where ``zeta = 2 pi i n z`` is held fixed. The ``sigma_k`` depend on the
effective couplings only; ``n`` enters through ``eps``.

Two routes are provided. Closed forms are available through ``sigma_2`` for
the single-barrier (Winter) model and through ``sigma_1`` for the double and
triple models. The series engine solves each model's fixed-point equation
for ``sigma`` order by order in ``eps`` and reaches any order.
"""

import math
from dataclasses import dataclass

from .complexcore import (
    DEFAULT_ORDER,
    TruncatedSeries,
    as_complex,
    principal_log,
    principal_sqrt,
)
from .errors import (
    CapabilityError,
    DegenerateDenominatorError,
    DomainError,
    SingularityError,
)
from .models import Branch, DoubleDelta, TripleDelta, Winter, effective_coupling

CLOSED_FORM_ORDER = {"winter": 2, "double": 1, "triple": 1}

# series-engine residual must vanish to this (relative to the largest coefficient)
_ENGINE_CHECK = 1e-10


@dataclass(frozen=True)
class ExpansionResult:
    n: int
    branch: Branch
    order: int
    sigmas: tuple
    w_approx: complex
    method: str = "closed"

    @property
    def eps(self):
        return 1 / (2j * math.pi * self.n)

    def summed(self):
        """Recompute ``2 pi i n + sum_k sigma_k eps^k`` from :attr:`sigmas`."""
        return assemble_pole(self.n, self.sigmas)


def assemble_pole(n, sigmas):
    lead = 2j * math.pi * n
    eps = 1 / lead
    total = 0j
    for k, s in enumerate(sigmas):
        total += s * eps**k
    return lead + total


def _one_plus(zeta, label="zeta"):
    zeta = as_complex(zeta, label)
    if 1 + zeta == 0:
        raise SingularityError(f"{label} = -1 is a singular point of the expansion")
    return zeta, 1 + zeta


# --- single barrier ---------------------------------------------------------


def winter_sigma0(zeta):
    _, u = _one_plus(zeta)
    return principal_log(u)


def winter_sigma1(zeta):
    zeta, u = _one_plus(zeta)
    return zeta / u * principal_log(u)


def winter_sigma2(zeta):
    zeta, u = _one_plus(zeta)
    log = principal_log(u)
    return -0.5 * (zeta / u) ** 2 * log * (log - 2)


def _fixed_point(update, order, name):
    """Iterate ``sigma <- update(sigma)`` from zero; each pass fixes one more order."""
    sigma = TruncatedSeries.constant(0, order)
    for _ in range(order + 1):
        sigma = update(sigma)
    check = update(sigma) - sigma
    bound = _ENGINE_CHECK * max(1.0, max(abs(c) for c in sigma))
    assert max(abs(c) for c in check) <= bound, f"{name} series did not close at order {order}"
    return sigma


def winter_sigma_series(n, zeta, order=DEFAULT_ORDER):
    """``sigma_0..sigma_K`` of the single-barrier model from ``sigma = ln(1 + zeta + eps zeta sigma)``."""
    if n == 0:
        raise DomainError("excitation number must be nonzero")
    zeta, _ = _one_plus(zeta)
    base = TruncatedSeries.constant(1 + zeta, order)
    return _fixed_point(lambda s: (base + zeta * s.shifted()).log(), order, "winter")


# --- double barrier ---------------------------------------------------------


def double_sigma0(zeta0, zetap):
    _, u0 = _one_plus(zeta0, "zeta0")
    _, up = _one_plus(zetap, "zetap")
    return principal_log(u0 * up)


def double_sigma1(zeta0, zetap):
    zeta0, u0 = _one_plus(zeta0, "zeta0")
    zetap, up = _one_plus(zetap, "zetap")
    return (zeta0 / u0 + zetap / up) * principal_log(u0 * up)


def double_sigma_series(n, zeta0, zetap, order=DEFAULT_ORDER):
    """Double-barrier analogue: ``sigma = ln[(1 + zeta0 (1 + eps sigma))(1 + zetap (1 + eps sigma))]``."""
    if n == 0:
        raise DomainError("excitation number must be nonzero")
    zeta0, _ = _one_plus(zeta0, "zeta0")
    zetap, _ = _one_plus(zetap, "zetap")

    def update(s):
        scaled = 1 + s.shifted()  # (2 pi i n + sigma) / (2 pi i n)
        return ((1 + zeta0 * scaled) * (1 + zetap * scaled)).log()

    return _fixed_point(update, order, "double")


# --- triple barrier ---------------------------------------------------------


def triple_delta_disc(zetam, zeta0, zetap):
    """``Delta = sqrt[(zeta+ - zeta-)^2 + 4 zeta0^2 (1 + zeta+)(1 + zeta-)]``, principal root."""
    zetam, zeta0, zetap = (as_complex(v) for v in (zetam, zeta0, zetap))
    return principal_sqrt((zetap - zetam) ** 2 + 4 * zeta0**2 * (1 + zetap) * (1 + zetam))


def _sign(branch):
    branch = Branch.parse(branch)
    if branch is Branch.NONE:
        raise DomainError("the triple-barrier model needs branch 'plus' or 'minus'")
    return branch.sign


def _triple_log(sign, zetam, zeta0, zetap, delta):
    if zeta0 == 1:
        raise SingularityError("zeta0 = 1 is a singular point of the triple-barrier expansion")
    num = 2 + zetap + zetam + sign * delta
    if num == 0:
        raise SingularityError("vanishing numerator in the triple-barrier leading term")
    return principal_log(num / (2 * (1 - zeta0)))


def triple_sigma0(branch, zetam, zeta0, zetap):
    sign = _sign(branch)
    zetam, zeta0, zetap = (as_complex(v) for v in (zetam, zeta0, zetap))
    delta = triple_delta_disc(zetam, zeta0, zetap)
    return _triple_log(sign, zetam, zeta0, zetap, delta)


def triple_nlo_parts(branch, zetam, zeta0, zetap):
    """The algebraic prefactor's numerator and denominator ``(N, D)``."""
    sign = _sign(branch)
    zetam, zeta0, zetap = (as_complex(v) for v in (zetam, zeta0, zetap))
    delta = triple_delta_disc(zetam, zeta0, zetap)
    return _triple_nd(sign, zetam, zeta0, zetap, delta)


def _triple_nd(sign, zm, z0, zp, delta):
    num = (
        -2 * z0**3 * (zm + zp + 2 * zm * zp)
        + z0**2 * (4 + 6 * zm + 6 * zp + 8 * zm * zp)
        + (zm - zp) ** 2
        + sign * (2 * z0 + zm + zp) * delta
    )
    den = (1 - z0) * ((zm - zp) ** 2 + 4 * z0**2 * (1 + zp) * (1 + zm) + sign * (2 + zm + zp) * delta)
    return num, den


def triple_sigma1(branch, zetam, zeta0, zetap):
    sign = _sign(branch)
    zetam, zeta0, zetap = (as_complex(v) for v in (zetam, zeta0, zetap))
    delta = triple_delta_disc(zetam, zeta0, zetap)
    log = _triple_log(sign, zetam, zeta0, zetap, delta)
    if log == 0:
        # the whole correction carries this factor
        return 0j
    num, den = _triple_nd(sign, zetam, zeta0, zetap, delta)
    if den == 0:
        raise DegenerateDenominatorError("D vanishes: degenerate branch point of the triple-barrier expansion")
    return num / den * log


def triple_sigma_series(n, branch, zetam, zeta0, zetap, order=DEFAULT_ORDER):
    """Order-by-order solution of the triple-barrier fixed-point equation.

    ``sigma = ln{[2 + (zeta+ + zeta-) s + sign s R] / [2 (1 - zeta0 s)]}`` with
    ``s = 1 + eps sigma`` and ``R = sqrt[(zeta+ - zeta-)^2 + 4 zeta0^2 (1 + zeta+ s)(1 + zeta- s)]``.
    The constant term of ``R`` is ``Delta``, which fixes the branch labels.
    """
    if n == 0:
        raise DomainError("excitation number must be nonzero")
    sign = _sign(branch)
    zm, z0, zp = (as_complex(v) for v in (zetam, zeta0, zetap))
    if z0 == 1:
        raise SingularityError("zeta0 = 1 is a singular point of the triple-barrier expansion")
    if triple_delta_disc(zm, z0, zp) == 0:
        raise SingularityError("Delta = 0: the two branches coincide and the series engine degenerates")

    def update(s):
        scaled = 1 + s.shifted()
        disc = (zp - zm) ** 2 + 4 * z0**2 * (1 + zp * scaled) * (1 + zm * scaled)
        num = 2 + (zp + zm) * scaled + sign * scaled * disc.sqrt()
        den = 2 * (1 - z0 * scaled)
        if num[0] == 0:
            raise SingularityError("vanishing numerator in the triple-barrier leading term")
        return (num / den).log()

    return _fixed_point(update, order, "triple")


# --- dispatch ---------------------------------------------------------------


def winter_pole_approx(n, z, order=2):
    return generic_pole_approx(Winter(z), n, Branch.NONE, order)


def _closed_sigmas(model, n, branch, order):
    zetas = model.effective_couplings(n)
    if isinstance(model, Winter):
        funcs = (winter_sigma0, winter_sigma1, winter_sigma2)
        return [f(*zetas) for f in funcs[: order + 1]]
    if isinstance(model, DoubleDelta):
        funcs = (double_sigma0, double_sigma1)
        return [f(*zetas) for f in funcs[: order + 1]]
    funcs = (triple_sigma0, triple_sigma1)
    return [f(branch, *zetas) for f in funcs[: order + 1]]


def sigma_series(model, n, branch, order):
    zetas = model.effective_couplings(n)
    if isinstance(model, Winter):
        return winter_sigma_series(n, *zetas, order=order)
    if isinstance(model, DoubleDelta):
        return double_sigma_series(n, *zetas, order=order)
    return triple_sigma_series(n, branch, *zetas, order=order)


def _check_branch(model, branch):
    branch = Branch.parse(branch)
    if isinstance(model, TripleDelta):
        if branch is Branch.NONE:
            raise DomainError("the triple-barrier model needs branch 'plus' or 'minus'")
    elif branch is not Branch.NONE:
        raise DomainError(f"the {model.name} model has no {branch.value} branch")
    return branch


def generic_pole_approx(model, n, branch=Branch.NONE, order=2, method="auto"):
    """Approximate pole ``w`` truncated after ``sigma_order``.

    ``method`` is ``"closed"`` (published closed forms only), ``"series"``
    (order-by-order engine) or ``"auto"``: closed forms where available, and
    the engine beyond them for the single-barrier model. Orders beyond the
    closed forms of the double and triple models raise
    :class:`CapabilityError` unless ``method="series"``.
    """
    if order < 0:
        raise DomainError("expansion order must be >= 0")
    if n == 0 or int(n) != n:
        raise DomainError(f"excitation number must be a nonzero integer, got {n!r}")
    n = int(n)
    branch = _check_branch(model, branch)
    closed_max = CLOSED_FORM_ORDER[model.name]
    if method == "auto":
        method = "closed" if order <= closed_max else "series"
        if method == "series" and not isinstance(model, Winter):
            raise CapabilityError(
                f"{model.name}: closed forms exist through order {closed_max}; "
                f"order {order} needs method='series'"
            )
    if method == "closed":
        if order > closed_max:
            raise CapabilityError(f"{model.name}: closed forms exist through order {closed_max}, not {order}")
        sigmas = _closed_sigmas(model, n, branch, order)
    elif method == "series":
        sigmas = list(sigma_series(model, n, branch, order))
    else:
        raise DomainError(f"unknown method {method!r}")
    sigmas = tuple(complex(s) for s in sigmas)
    return ExpansionResult(n, branch, order, sigmas, assemble_pole(n, sigmas), method)


# --- fixed-order perturbation theory ----------------------------------------


def winter_z_series(n, order):
    """Coefficients ``p_k(n)`` of the ordinary z-expansion ``w = 2 pi i n + sum_k p_k z^k``.

    Solves ``delta = ln[1 + z (2 pi i n + delta)]`` order by order in ``z``.
    """
    if n == 0:
        raise DomainError("excitation number must be nonzero")
    lead = 2j * math.pi * n
    one = TruncatedSeries.constant(1, order)
    return _fixed_point(lambda d: (one + (lead + d).shifted()).log(), order, "z-expansion")


def winter_z_expansion(n, z, order=2):
    """Pole ``w`` from the z-expansion truncated after ``z**order``."""
    z = as_complex(z, "z")
    return 2j * math.pi * n + winter_z_series(n, order).evaluate(z)
