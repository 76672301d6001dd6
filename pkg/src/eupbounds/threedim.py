"""Closed-form 3D bound for geodesic-ball confinement at constant curvature.

For a ball of geodesic radius R in a space of curvature K = 4*alpha the
minimal spread obeys sigma_p * R = pi*hbar*sqrt(1 - K R^2/pi^2), valid for
either curvature sign: the spherical branch (alpha > 0) vanishes at
R_max = pi/(2*sqrt(alpha)), while the hyperbolic branch grows with R and
pins sigma_p above the floor hbar*sqrt(|K|) at every finite radius.  The
equivalent first Dirichlet eigenvalue lambda_1 = pi^2/R^2 - K is validated
against the finite-difference radial oracle rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core import ball_radius_max
from .errors import DomainError

__all__ = ["Ball3DResult", "bound_3d", "bound_1d_geodesic"]

_RMAX_ULPS = 8


@dataclass(frozen=True)
class Ball3DResult:
    sigma_p_min: float
    product: float
    lambda1: float
    curvature: float
    floor: Optional[float]


def bound_3d(radius: float, alpha: float, hbar: float = 1.0) -> Ball3DResult:
    """Minimal momentum spread in a geodesic ball of the given radius.

    For alpha > 0 the radius is capped at pi/(2*sqrt(alpha)), where the
    bound degenerates to zero; for alpha < 0 the curvature floor
    hbar*sqrt(|K|) is reported alongside.
    """
    if not (math.isfinite(radius) and radius > 0.0):
        raise DomainError(f"radius must be finite and > 0, got {radius!r}")
    if not math.isfinite(alpha):
        raise DomainError(f"alpha must be finite, got {alpha!r}")
    if not (math.isfinite(hbar) and hbar > 0.0):
        raise DomainError(f"hbar must be finite and > 0, got {hbar!r}")
    curvature = 4.0 * alpha
    if alpha > 0.0:
        r_max = ball_radius_max(alpha)
        if radius > r_max + _RMAX_ULPS * math.ulp(r_max):
            raise DomainError(
                f"radius {radius!r} exceeds the maximum geodesic radius {r_max!r} "
                f"for alpha={alpha!r}"
            )
    lambda1 = math.pi ** 2 / radius ** 2 - curvature
    if lambda1 < 0.0:
        # only reachable within rounding of R_max; the bound degenerates there
        lambda1 = 0.0
    sigma = hbar * math.sqrt(lambda1)
    floor = hbar * math.sqrt(-curvature) if alpha < 0.0 else None
    return Ball3DResult(
        sigma_p_min=sigma,
        product=sigma * radius,
        lambda1=lambda1,
        curvature=curvature,
        floor=floor,
    )


def bound_1d_geodesic(radius: float, hbar: float = 1.0) -> float:
    """Geodesic-representation slit bound sigma_p = pi*hbar/(2R).

    Substituting dx = 2*tan(sqrt(alpha)*R)/sqrt(alpha) into the 1D bound
    cancels the curvature factors exactly, so this matches
    bound_1d(...).sigma_p_min for any alpha > 0 with R < pi/(2*sqrt(alpha)).
    """
    if not (math.isfinite(radius) and radius > 0.0):
        raise DomainError(f"radius must be finite and > 0, got {radius!r}")
    if not (math.isfinite(hbar) and hbar > 0.0):
        raise DomainError(f"hbar must be finite and > 0, got {hbar!r}")
    return 0.5 * math.pi * hbar / radius
