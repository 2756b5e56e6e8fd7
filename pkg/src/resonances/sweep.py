"""Sweep pipelines behind the CLI: expansion + oracle over a range of n."""

from dataclasses import dataclass, field
from typing import Optional

from .errors import DomainError, ResonanceError
from .expansion import generic_pole_approx, winter_z_expansion
from .models import Branch, ModelSpec, Winter
from .observables import ResonanceRecord, make_record
from .oracle import DEFAULT_MAX_ITER, DEFAULT_TOL, exact_pole, newton_solve

OUTPUT_KINDS = ("csv", "json", "svg")


@dataclass
class SweepConfig:
    model: ModelSpec
    n_min: int = 1
    n_max: int = 10
    order: int = 2
    branches: tuple = ()
    outputs: tuple = ("csv",)
    output_path: str = "."
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    basin_radius: Optional[float] = None
    z_order: int = 2

    def __post_init__(self):
        if not self.branches:
            self.branches = tuple(self.model.branches)
        self.branches = tuple(Branch.parse(b) for b in self.branches)
        self.validate()

    def validate(self):
        if self.n_min < 1 or self.n_max < 1:
            raise DomainError("n range must use n >= 1")
        if self.n_min > self.n_max:
            raise DomainError(f"empty n range {self.n_min}..{self.n_max}")
        if self.order < 0:
            raise DomainError("order must be >= 0")
        if not self.tol > 0:
            raise DomainError("tol must be positive")
        if self.max_iter < 0:
            raise DomainError("max_iter must be >= 0")
        if self.z_order < 0:
            raise DomainError("z_order must be >= 0")
        for b in self.branches:
            if b not in self.model.branches:
                allowed = ", ".join(x.value for x in self.model.branches)
                raise DomainError(f"{self.model.name} model has branches {allowed}, not {b.value}")
        for kind in self.outputs:
            if kind not in OUTPUT_KINDS:
                raise DomainError(f"unknown output {kind!r}; choose from {', '.join(OUTPUT_KINDS)}")

    @property
    def ns(self):
        return range(self.n_min, self.n_max + 1)


@dataclass
class Row:
    """One (n, branch) of a sweep; ``record`` is None when the expansion failed."""

    n: int
    branch: Branch
    K: int
    record: Optional[ResonanceRecord] = None
    error: Optional[str] = None
    converged: bool = False

    @property
    def ok(self):
        return self.error is None and self.converged


def solve_rows(config):
    """One row per (n, branch), ordered by n then branch as configured."""
    rows = []
    for n in config.ns:
        for branch in config.branches:
            rows.append(_solve_one(config, n, branch))
    return rows


def _solve_one(config, n, branch):
    row = Row(n, branch, config.order)
    model = config.model
    try:
        approx = generic_pole_approx(model, n, branch, config.order)
    except ResonanceError as exc:
        row.error = f"expansion: {exc}"
        return row
    try:
        root = newton_solve(
            model, approx.w_approx, config.tol, config.max_iter, config.basin_radius, n=n, branch=branch
        )
    except ResonanceError as exc:
        row.record = make_record(n, branch, config.order, approx.w_approx, model=model.name)
        row.error = f"oracle: {exc}"
        return row
    row.record = make_record(
        n, branch, config.order, approx.w_approx, residual=root.step_norm, w_exact=root.w, model=model.name
    )
    row.converged = True
    return row


@dataclass
class CompareRow:
    n: int
    w_exact: Optional[complex] = None
    errors: list = field(default_factory=list)  # relative error at K = 0..K_max
    z_error: Optional[float] = None
    error: Optional[str] = None

    @property
    def ok(self):
        return self.error is None


def compare_rows(config):
    """Relative error of the 1/n expansion at each K, and of the fixed-order z-expansion."""
    model = config.model
    if not isinstance(model, Winter):
        raise DomainError("compare supports the winter model only")
    rows = []
    for n in config.ns:
        row = CompareRow(n)
        try:
            root = exact_pole(model, n, Branch.NONE, min(config.order, 2), config.tol, config.max_iter,
                              config.basin_radius)
            row.w_exact = root.w
            scale = abs(root.w)
            for K in range(config.order + 1):
                w = generic_pole_approx(model, n, Branch.NONE, K).w_approx
                row.errors.append(abs(w - root.w) / scale)
            wz = winter_z_expansion(n, model.z, config.z_order)
            row.z_error = abs(wz - root.w) / scale
        except ResonanceError as exc:
            row.error = str(exc)
        rows.append(row)
    return rows

