"""Desk-scale remainder experiments.

Evaluates exact counts against a predicted expansion over a geometric
lambda-grid, tabulates remainders E(lam) = exact - prediction, and fits the
empirical growth exponent of |E| by ordinary least squares on log-log axes.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .counting import ProductSpec, count
from .errors import InsufficientDataError

MAX_GRID_POINTS = 10**4


@dataclass(frozen=True)
class GridSpec:
    """Geometric lambda-grid from lambda_min to lambda_max."""

    lambda_min: float
    lambda_max: float
    points: int
    spacing: str = "geometric"

    def __post_init__(self):
        if not 0 < self.lambda_min < self.lambda_max:
            raise ValueError("need 0 < lambda_min < lambda_max")
        if not 2 <= self.points <= MAX_GRID_POINTS:
            raise ValueError(f"points must lie in 2..{MAX_GRID_POINTS}")
        if self.spacing != "geometric":
            raise ValueError("only geometric spacing is supported")


def geometric_grid(grid: GridSpec) -> list[float]:
    """Strictly increasing points lambda_i = min * (max/min)**(i/(n-1))."""
    pts = np.exp(
        np.linspace(math.log(grid.lambda_min), math.log(grid.lambda_max), grid.points)
    )
    pts[0], pts[-1] = grid.lambda_min, grid.lambda_max
    return [float(x) for x in pts]


@dataclass(frozen=True)
class RemainderRow:
    lam: float
    exact: int
    prediction: float
    remainder: float


@dataclass(frozen=True)
class RemainderTable:
    rows: tuple[RemainderRow, ...]

    def __post_init__(self):
        lams = [r.lam for r in self.rows]
        if any(a >= b for a, b in zip(lams, lams[1:])):
            raise ValueError("rows must be sorted by strictly increasing lambda")

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    @property
    def lambdas(self) -> np.ndarray:
        return np.array([r.lam for r in self.rows])

    @property
    def remainders(self) -> np.ndarray:
        return np.array([r.remainder for r in self.rows])

    def write_csv(self, path) -> None:
        """Columns lambda,count_exact,prediction,remainder, full precision."""
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["lambda", "count_exact", "prediction", "remainder"])
            for r in self.rows:
                writer.writerow([repr(r.lam), r.exact, repr(r.prediction), repr(r.remainder)])


@dataclass(frozen=True)
class FitResult:
    """OLS fit of log|remainder| against log lambda."""

    slope: float
    intercept: float
    stderr: float
    points_used: int
    points_dropped: int


def evaluate_remainder(
    spec: ProductSpec,
    expansion,
    grid: GridSpec,
    method: str = "recursive",
    budget: int | None = None,
) -> RemainderTable:
    """Exact count minus predicted expansion value at each grid point.

    ``expansion`` is anything with an ``evaluate(lam)`` method (normally a
    TermExpansion).  Counting uses the recursive method by default; the
    dirichlet fast path is worthwhile for the double identity spec on large
    grids.  Grid points are independent, so evaluation order is irrelevant;
    results are deterministic.
    """
    rows = []
    for lam in geometric_grid(grid):
        exact = count(spec, lam, method=method, budget=budget).count
        prediction = expansion.evaluate(lam)
        rows.append(RemainderRow(lam, exact, prediction, exact - prediction))
    return RemainderTable(tuple(rows))


def fit_exponent(table: RemainderTable, lambda_floor: float | None = None) -> FitResult:
    """Fitted growth exponent of |E(lam)| over rows with lam >= lambda_floor.

    The floor defaults to 10x the smallest tabulated lambda, suppressing
    small-lambda transients.  Rows with remainder exactly zero are dropped
    (log undefined); at least 5 usable rows are required.
    """
    if len(table) == 0:
        raise InsufficientDataError("empty remainder table")
    if lambda_floor is None:
        lambda_floor = 10.0 * table.rows[0].lam
    usable = [r for r in table if r.lam >= lambda_floor and r.remainder != 0.0]
    if len(usable) < 5:
        raise InsufficientDataError(
            f"need at least 5 rows with lam >= {lambda_floor} and nonzero remainder, "
            f"got {len(usable)}"
        )
    x = np.log([r.lam for r in usable])
    y = np.log([abs(r.remainder) for r in usable])
    fit = stats.linregress(x, y)
    return FitResult(
        slope=float(fit.slope),
        intercept=float(fit.intercept),
        stderr=float(fit.stderr),
        points_used=len(usable),
        points_dropped=len(table) - len(usable),
    )
