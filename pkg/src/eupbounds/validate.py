"""Oracle-equivalence suites: closed forms against the finite-difference oracle.

Each check compares one closed-form value with its independently
discretized counterpart and records the relative error against the
module's stated tolerance.  Convergence-order checks report the observed
Richardson order from half- and full-resolution runs (target 2, accepted
band [1.8, 2.2], encoded as relative error 0.1 against the target).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .core import Confinement
from .onedim import spectrum_1d
from .sturm import ball_oracle, cap_oracle, oracle_1d_p2
from .twodim import nu1_of_theta

__all__ = [
    "ValidationCheck",
    "checks_1d",
    "checks_2d",
    "checks_3d",
    "run_suite",
    "DEFAULT_GRID_1D",
    "DEFAULT_GRID_2D",
    "DEFAULT_GRID_3D",
]

DEFAULT_GRID_1D = 4000
DEFAULT_GRID_2D = 8000
DEFAULT_GRID_3D = 4000

TOL_1D = 1e-4
TOL_2D = 1e-5
TOL_3D = 1e-4
ORDER_TARGET = 2.0
ORDER_TOL = 0.1    # relative: accepts observed order in [1.8, 2.2]

PAIRS_1D: Tuple[Tuple[float, float], ...] = tuple(
    (alpha, dx) for alpha in (0.0, 0.1, 1.0, 10.0) for dx in (0.5, 1.0, 2.0)
)
THETAS_2D: Tuple[float, ...] = (0.3, 0.5 * math.pi, 2.0, 2.5)
PAIRS_3D: Tuple[Tuple[float, float], ...] = ((1.0, 1.0), (1.0, 2.0), (0.0, 1.0),
                                             (-1.0, 1.0), (-1.0, 5.0))


@dataclass(frozen=True)
class ValidationCheck:
    suite: str
    name: str
    closed_form: float
    oracle: float
    rel_error: float
    tolerance: float
    grid: int
    passed: bool


def _check(suite: str, name: str, closed_form: float, oracle: float,
           tolerance: float, grid: int) -> ValidationCheck:
    rel = abs(oracle - closed_form) / abs(closed_form)
    return ValidationCheck(suite=suite, name=name, closed_form=closed_form,
                           oracle=oracle, rel_error=rel, tolerance=tolerance,
                           grid=grid, passed=rel <= tolerance)


def checks_1d(grid: int = DEFAULT_GRID_1D, *, k: int = 5,
              pairs: Sequence[Tuple[float, float]] = PAIRS_1D,
              richardson: bool = True) -> List[ValidationCheck]:
    """Slit spectrum p_k^2 against the FD oracle, plus observed order."""
    out: List[ValidationCheck] = []
    for alpha, dx in pairs:
        conf = Confinement.slit(dx, alpha)
        exact = [m.p_n ** 2 for m in spectrum_1d(conf, k)]
        fine = oracle_1d_p2(dx, alpha, grid, k=k)
        for j in range(k):
            out.append(_check(
                "1d", f"eig k={j + 1} alpha={alpha:g} dx={dx:g}",
                exact[j], fine.eigenvalues[j], TOL_1D, grid,
            ))
        if richardson:
            coarse = oracle_1d_p2(dx, alpha, grid // 2, k=1)
            err_c = abs(coarse.eigenvalues[0] - exact[0])
            err_f = abs(fine.eigenvalues[0] - exact[0])
            order = math.log2(err_c / err_f) if err_f > 0.0 else ORDER_TARGET
            out.append(_check(
                "1d", f"order alpha={alpha:g} dx={dx:g}",
                ORDER_TARGET, order, ORDER_TOL, grid,
            ))
    return out


def checks_2d(grid: int = DEFAULT_GRID_2D, *,
              thetas: Sequence[float] = THETAS_2D) -> List[ValidationCheck]:
    """Legendre-root cap eigenvalue against the FD cap oracle (unit sphere)."""
    out: List[ValidationCheck] = []
    for theta in thetas:
        nu1 = nu1_of_theta(theta)
        closed = nu1 * (nu1 + 1.0)
        oracle = cap_oracle(theta, grid, k=1).eigenvalues[0]
        out.append(_check(
            "2d", f"cap theta={theta:g}", closed, oracle, TOL_2D, grid,
        ))
    return out


def checks_3d(grid: int = DEFAULT_GRID_3D, *,
              pairs: Sequence[Tuple[float, float]] = PAIRS_3D) -> List[ValidationCheck]:
    """lambda_1 = pi^2/R^2 - K against the FD radial ball oracle."""
    out: List[ValidationCheck] = []
    for curvature, radius in pairs:
        closed = math.pi ** 2 / radius ** 2 - curvature
        oracle = ball_oracle(curvature, radius, grid, k=1).eigenvalues[0]
        out.append(_check(
            "3d", f"ball K={curvature:g} R={radius:g}", closed, oracle, TOL_3D, grid,
        ))
    return out


def run_suite(suite: str = "all", grid: Optional[int] = None) -> List[ValidationCheck]:
    """Run the requested oracle suites; ``grid`` overrides every default."""
    out: List[ValidationCheck] = []
    if suite in ("1d", "all"):
        out.extend(checks_1d(grid or DEFAULT_GRID_1D))
    if suite in ("2d", "all"):
        out.extend(checks_2d(grid or DEFAULT_GRID_2D))
    if suite in ("3d", "all"):
        out.extend(checks_3d(grid or DEFAULT_GRID_3D))
    if not out:
        raise ValueError(f"unknown suite {suite!r}")
    return out
