"""Shared parameter and geometry types plus the curvature coordinate map.

Conventions used throughout the package: the deformation strength
``alpha`` carries units 1/length^2, ``hbar`` is a configurable action
scale (default 1, natural units), and every bound scales linearly in
``hbar``.  For ``alpha > 0`` the spatial geometry is a sphere of radius
``a = 1/(2*sqrt(alpha))`` with constant curvature ``K = 4*alpha``, so
``K * a**2 = 1``.

All types are immutable after construction and all functions are pure;
everything here is safe for unsynchronized concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError

__all__ = [
    "DeformationParam",
    "ConfinementKind",
    "Confinement",
    "geodesic_radius_from_coordinate",
    "coordinate_from_geodesic_radius",
]

# Slack applied to the closed-interval radius check R <= pi/(2 sqrt(alpha)):
# values beyond R_max by more than this many ulps are rejected.
_RMAX_ULPS = 8


@dataclass(frozen=True)
class DeformationParam:
    """Deformation strength ``alpha`` together with the action scale ``hbar``.

    Derived read-only geometry for ``alpha > 0``: ``curvature`` (= 4*alpha)
    and ``sphere_radius`` (= 1/(2*sqrt(alpha))).
    """

    alpha: float
    hbar: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.alpha):
            raise DomainError(f"alpha must be finite, got {self.alpha!r}")
        if not (math.isfinite(self.hbar) and self.hbar > 0.0):
            raise DomainError(f"hbar must be finite and > 0, got {self.hbar!r}")

    @property
    def curvature(self) -> float:
        """Spatial curvature K = 4*alpha (3D convention)."""
        return 4.0 * self.alpha

    @property
    def sphere_radius(self) -> float:
        """Sphere radius a = 1/(2*sqrt(alpha)); defined only for alpha > 0."""
        if self.alpha <= 0.0:
            raise DomainError("sphere_radius requires alpha > 0")
        return 1.0 / (2.0 * math.sqrt(self.alpha))


class ConfinementKind(Enum):
    SLIT_1D = "slit1d"
    CAP_2D = "cap2d"
    BALL_3D = "ball3d"


def ball_radius_max(alpha: float) -> float:
    """Largest admissible geodesic ball radius pi/(2*sqrt(alpha)) for alpha > 0."""
    if alpha <= 0.0:
        raise DomainError("ball_radius_max requires alpha > 0")
    return 0.5 * math.pi / math.sqrt(alpha)


@dataclass(frozen=True)
class Confinement:
    """Apparatus geometry: slit width or geodesic ball radius.

    ``size`` is the slit width (SLIT_1D) or the geodesic radius R
    (CAP_2D / BALL_3D), in length units.
    """

    kind: ConfinementKind
    size: float
    curvature_space: DeformationParam

    def __post_init__(self):
        if not (math.isfinite(self.size) and self.size > 0.0):
            raise DomainError(f"confinement size must be finite and > 0, got {self.size!r}")
        alpha = self.curvature_space.alpha
        if self.kind is ConfinementKind.BALL_3D and alpha > 0.0:
            r_max = ball_radius_max(alpha)
            if self.size > r_max + _RMAX_ULPS * math.ulp(r_max):
                raise DomainError(
                    f"ball radius {self.size!r} exceeds the maximum geodesic radius "
                    f"{r_max!r} for alpha={alpha!r}"
                )
        if self.kind is ConfinementKind.CAP_2D:
            if alpha <= 0.0:
                raise DomainError("a 2D cap requires alpha > 0")
            theta = self.size / self.curvature_space.sphere_radius
            if not (0.0 < theta < math.pi):
                raise DomainError(
                    f"cap angular radius {theta!r} must lie in (0, pi)"
                )

    @property
    def alpha(self) -> float:
        return self.curvature_space.alpha

    @property
    def hbar(self) -> float:
        return self.curvature_space.hbar

    @classmethod
    def slit(cls, width: float, alpha: float, hbar: float = 1.0) -> "Confinement":
        return cls(ConfinementKind.SLIT_1D, width, DeformationParam(alpha, hbar))

    @classmethod
    def cap(cls, radius: float, alpha: float, hbar: float = 1.0) -> "Confinement":
        return cls(ConfinementKind.CAP_2D, radius, DeformationParam(alpha, hbar))

    @classmethod
    def ball(cls, radius: float, alpha: float, hbar: float = 1.0) -> "Confinement":
        return cls(ConfinementKind.BALL_3D, radius, DeformationParam(alpha, hbar))


def geodesic_radius_from_coordinate(r: float, alpha: float) -> float:
    """Map the flat radial coordinate r to the geodesic radius.

    rho = arctan(sqrt(alpha)*r)/sqrt(alpha); strictly increasing in r and
    saturating at pi/(2*sqrt(alpha)) as r -> inf.
    """
    if not (math.isfinite(r) and r >= 0.0):
        raise DomainError(f"r must be finite and >= 0, got {r!r}")
    if not (math.isfinite(alpha) and alpha > 0.0):
        raise DomainError(f"alpha must be finite and > 0, got {alpha!r}")
    root = math.sqrt(alpha)
    return math.atan(root * r) / root


def coordinate_from_geodesic_radius(rho: float, alpha: float) -> float:
    """Inverse map r = tan(sqrt(alpha)*rho)/sqrt(alpha).

    Defined on 0 <= rho < pi/(2*sqrt(alpha)); past that the coordinate
    chart ends and a DomainError is raised.
    """
    if not (math.isfinite(alpha) and alpha > 0.0):
        raise DomainError(f"alpha must be finite and > 0, got {alpha!r}")
    limit = 0.5 * math.pi / math.sqrt(alpha)
    if not (math.isfinite(rho) and 0.0 <= rho < limit):
        raise DomainError(
            f"rho must lie in [0, {limit!r}) for alpha={alpha!r}, got {rho!r}"
        )
    root = math.sqrt(alpha)
    return math.tan(root * rho) / root
