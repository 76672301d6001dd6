"""Minimal momentum variance on a spherical cap.

For Dirichlet confinement to a geodesic ball of radius R = a*theta on a
sphere of radius a, the minimal variance is hbar^2 * lambda_1 with
lambda_1 = nu1*(nu1+1)/a^2, where nu1(theta) is the smallest positive
degree at which the Legendre function P_nu(cos(theta)) vanishes.

P_nu is evaluated through the Gauss hypergeometric series
2F1(-nu, nu+1; 1; (1-x)/2), which terminates at integer degree and
converges for x above cos(0.95*pi); caps nearly covering the sphere are
excluded rather than treated with connection formulas.  The root is
bracketed by scanning nu upward in steps of 0.25 from the positive value
at nu -> 0+ (first-root spacing exceeds the step everywhere in the
domain) and polished by bisection.

The module is parameterized by (a, theta) directly; ``CapProblem.from_alpha``
maps a deformation strength to a = 1/(2*sqrt(alpha)) for cross-dimension
consistency, a convention rather than a derived relation in 2D.

All functions are pure; root scans over theta grids may run concurrently
with no coordination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .core import DeformationParam
from .errors import ConvergenceError, DomainError, RootNotFoundError

__all__ = ["CapProblem", "CapResult", "legendre_p", "nu1_of_theta", "cap_bound",
           "THETA_MAX"]

THETA_MAX = 0.95 * math.pi
_X_MIN = math.cos(THETA_MAX)

_SERIES_REL_TOL = 1e-13
_SERIES_MAX_TERMS = 100_000
_SCAN_STEP = 0.25
_SCAN_CAP = 1e4
_BRACKET_TOL = 1e-12


@dataclass(frozen=True)
class CapProblem:
    """Sphere radius a, angular radius theta in (0, 0.95*pi), and hbar."""

    a: float
    theta: float
    hbar: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a > 0.0):
            raise DomainError(f"sphere radius a must be finite and > 0, got {self.a!r}")
        if not (math.isfinite(self.theta) and 0.0 < self.theta < THETA_MAX):
            raise DomainError(
                f"theta must lie in (0, {THETA_MAX!r}), got {self.theta!r}"
            )
        if not (math.isfinite(self.hbar) and self.hbar > 0.0):
            raise DomainError(f"hbar must be finite and > 0, got {self.hbar!r}")

    @property
    def radius(self) -> float:
        """Geodesic radius R = a * theta."""
        return self.a * self.theta

    @classmethod
    def from_alpha(cls, alpha: float, theta: float, hbar: float = 1.0) -> "CapProblem":
        """Convenience constructor using the a = 1/(2*sqrt(alpha)) convention."""
        return cls(a=DeformationParam(alpha, hbar).sphere_radius, theta=theta,
                   hbar=hbar)


@dataclass(frozen=True)
class CapResult:
    nu1: float
    lambda1: float
    sigma_p_min: float
    product: float
    bracket: Tuple[float, float]
    residual: float


def legendre_p(nu: float, x: float) -> float:
    """Legendre function of the first kind for real degree nu >= 0.

    Sums 2F1(-nu, nu+1; 1; (1-x)/2) to relative 1e-13 with a 1e5 term cap;
    integer degrees terminate exactly on the classical polynomials.
    """
    if not (math.isfinite(nu) and nu >= 0.0):
        raise DomainError(f"nu must be finite and >= 0, got {nu!r}")
    if not (math.isfinite(x) and _X_MIN < x <= 1.0):
        raise DomainError(f"x must lie in ({_X_MIN!r}, 1], got {x!r}")
    s = 0.5 * (1.0 - x)
    if s == 0.0:
        return 1.0
    total = 1.0
    term = 1.0
    scale = 1.0
    for k in range(_SERIES_MAX_TERMS):
        term *= (k - nu) * (k + nu + 1.0) * s / ((k + 1.0) * (k + 1.0))
        if term == 0.0:
            return total
        if not (math.isfinite(term) and math.isfinite(total)):
            raise ConvergenceError(
                f"Legendre series overflowed at nu={nu!r}, x={x!r}",
                partial_sum=total, last_term=term,
            )
        total += term
        scale = max(scale, abs(total))
        if abs(term) <= _SERIES_REL_TOL * scale:
            return total
    raise ConvergenceError(
        f"Legendre series hit the {_SERIES_MAX_TERMS}-term cap at nu={nu!r}, x={x!r}",
        partial_sum=total, last_term=term,
    )


def _find_nu1(theta: float) -> Tuple[float, Tuple[float, float], float]:
    """Smallest positive root of nu -> P_nu(cos(theta)), with bracket and
    slope-normalized residual."""
    if not (math.isfinite(theta) and 0.0 < theta < THETA_MAX):
        raise DomainError(f"theta must lie in (0, {THETA_MAX!r}), got {theta!r}")
    x = math.cos(theta)

    def g(nu: float) -> float:
        return legendre_p(nu, x)

    lo, g_lo = 0.0, 1.0   # P_0 = 1
    hi = _SCAN_STEP
    while True:
        if hi > _SCAN_CAP:
            raise RootNotFoundError(
                f"no sign change of P_nu(cos {theta!r}) below nu={_SCAN_CAP}; "
                f"theta is too small for the scan (flat-limit nu1 is roughly "
                f"{2.405 / theta:.3g})"
            )
        g_hi = g(hi)
        if g_hi <= 0.0:
            break
        lo, g_lo = hi, g_hi
        hi += _SCAN_STEP

    if g_hi == 0.0:
        return hi, (hi, hi), 0.0

    while hi - lo > _BRACKET_TOL:
        mid = 0.5 * (lo + hi)
        g_mid = g(mid)
        if g_mid > 0.0:
            lo, g_lo = mid, g_mid
        elif g_mid < 0.0:
            hi, g_hi = mid, g_mid
        else:
            return mid, (mid, mid), 0.0

    root = 0.5 * (lo + hi)
    slope = (g_hi - g_lo) / (hi - lo)
    if slope == 0.0:
        residual = abs(g(root))
    else:
        residual = abs(g(root) / slope)
    return root, (lo, hi), residual


def nu1_of_theta(theta: float) -> float:
    """Smallest positive degree with P_nu(cos(theta)) = 0; decreasing in theta."""
    return _find_nu1(theta)[0]


def cap_bound(problem: CapProblem) -> CapResult:
    """Assemble the cap bound: lambda1 = nu1*(nu1+1)/a^2, sigma = hbar*sqrt(lambda1).

    ``product`` reports sigma_p_min * R for comparison with the 1D and 3D
    uncertainty products.
    """
    nu1, bracket, residual = _find_nu1(problem.theta)
    lambda1 = nu1 * (nu1 + 1.0) / (problem.a * problem.a)
    sigma = problem.hbar * math.sqrt(lambda1)
    return CapResult(
        nu1=nu1,
        lambda1=lambda1,
        sigma_p_min=sigma,
        product=sigma * problem.radius,
        bracket=bracket,
        residual=residual,
    )
