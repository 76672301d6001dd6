"""Closed-form 1D machinery for slit confinement under the deformed algebra.

The momentum operator is p = -i*hbar*[(1 + alpha*x^2) d/dx + alpha*x] on
the interval [-dx/2, dx/2] with Dirichlet walls.  Its square has the pure
point spectrum p_n = n * p_1 with

    p_1 = (pi*hbar*sqrt(alpha)/2) / arctan(sqrt(alpha)*dx/2),

eigenfunctions

    psi_n(x) = C (1 + alpha x^2)^(-1/2) * trig((n*pi/2) * u(x)),
    u(x) = arctan(sqrt(alpha) x)/arctan(sqrt(alpha) dx/2),

with cosine for odd n, sine for even n and the n-independent constant
C = [sqrt(alpha)/arctan(sqrt(alpha)*dx/2)]^(1/2).  The minimal
uncertainty product is sigma_p * dx = pi*hbar*Phi with the correction
factor Phi = sqrt(alpha)z/arctan(sqrt(alpha)z) at z = dx/2.

alpha = 0 is handled by an explicit flat-limit branch (p_n = n*pi*hbar/dx,
plain sine/cosine modes); negative alpha is rejected.  All functions are
pure and thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, NamedTuple

import numpy as np

from .core import Confinement, ConfinementKind
from .errors import DomainError
from .quadrature import integrate

__all__ = [
    "Parity",
    "Regime",
    "Mode1D",
    "Bound1DResult",
    "Moments1D",
    "RSCheck",
    "phi_factor",
    "bound_1d",
    "mode_1d",
    "spectrum_1d",
    "eval_mode_1d",
    "mode_values",
    "momentum_action_values",
    "moments_1d",
    "robertson_schrodinger_check",
]

# Below this value of sqrt(alpha)*z the Maclaurin series is used for Phi;
# the truncation error of the three-term series is < 1e-16 there.
_SERIES_THRESHOLD = 1e-4

# Regime boundaries in the dimensionless combination sqrt(alpha)*dx/2.
_FLAT_EDGE = 1e-4
_LARGE_EDGE = 1e2


class Parity(Enum):
    EVEN = "even"   # cosine branch, odd n
    ODD = "odd"     # sine branch, even n


class Regime(Enum):
    FLAT_LIMIT = "flat-limit"
    MODERATE = "moderate"
    LARGE_DEFORMATION = "large-deformation"


@dataclass(frozen=True)
class Mode1D:
    """One discrete momentum eigenstate of the squared momentum operator."""

    n: int
    parity: Parity
    p_n: float
    norm_const: float


@dataclass(frozen=True)
class Bound1DResult:
    sigma_p_min: float
    product: float
    phi: float
    regime: Regime


class Moments1D(NamedTuple):
    mean_p: float
    mean_p2: float
    sigma_x: float
    mean_x: float


class RSCheck(NamedTuple):
    lhs: float
    rhs: float
    satisfied: bool


def _phi_series(x: float) -> float:
    # x/arctan(x) = 1 + x^2/3 - 4 x^4/45 + O(x^6)
    x2 = x * x
    return 1.0 + x2 * (1.0 / 3.0 - x2 * (4.0 / 45.0))


def _phi_closed(x: float) -> float:
    return x / math.atan(x)


def phi_factor(z: float, alpha: float) -> float:
    """Correction factor sqrt(alpha)*z / arctan(sqrt(alpha)*z).

    Returns 1 in the flat limit, is >= 1 everywhere and strictly
    increasing in z for alpha > 0.  Below sqrt(alpha)*z = 1e-4 the even
    Maclaurin series is used; the branches agree to better than 1e-14.
    """
    if not (math.isfinite(z) and z >= 0.0):
        raise DomainError(f"z must be finite and >= 0, got {z!r}")
    if not (math.isfinite(alpha) and alpha >= 0.0):
        raise DomainError(f"alpha must be finite and >= 0, got {alpha!r}")
    x = math.sqrt(alpha) * z
    if x < _SERIES_THRESHOLD:
        return _phi_series(x)
    return _phi_closed(x)


def _require_slit(conf: Confinement) -> None:
    if conf.kind is not ConfinementKind.SLIT_1D:
        raise DomainError(f"expected a 1D slit confinement, got {conf.kind}")
    if conf.alpha < 0.0:
        raise DomainError("negative alpha is not supported in 1D")


def bound_1d(conf: Confinement) -> Bound1DResult:
    """Minimal momentum spread for a slit of width conf.size.

    sigma_p_min = pi*hbar*Phi(dx/2)/dx, so the uncertainty product
    sigma_p_min*dx equals pi*hbar at alpha = 0 and grows monotonically
    with alpha.
    """
    _require_slit(conf)
    dx = conf.size
    hbar = conf.hbar
    phi = phi_factor(0.5 * dx, conf.alpha)
    product = math.pi * hbar * phi
    scale = math.sqrt(conf.alpha) * 0.5 * dx
    if scale < _FLAT_EDGE:
        regime = Regime.FLAT_LIMIT
    elif scale > _LARGE_EDGE:
        regime = Regime.LARGE_DEFORMATION
    else:
        regime = Regime.MODERATE
    return Bound1DResult(sigma_p_min=product / dx, product=product, phi=phi,
                         regime=regime)


def _p1(conf: Confinement) -> float:
    dx = conf.size
    hbar = conf.hbar
    alpha = conf.alpha
    if alpha == 0.0:
        return math.pi * hbar / dx
    root = math.sqrt(alpha)
    return 0.5 * math.pi * hbar * root / math.atan(root * 0.5 * dx)


def _norm_const(conf: Confinement) -> float:
    alpha = conf.alpha
    if alpha == 0.0:
        return math.sqrt(2.0 / conf.size)
    root = math.sqrt(alpha)
    return math.sqrt(root / math.atan(root * 0.5 * conf.size))


def mode_1d(conf: Confinement, n: int) -> Mode1D:
    """Construct the mode with index n (nonzero integer); p_n = n * p_1."""
    _require_slit(conf)
    if not isinstance(n, int) or n == 0:
        raise DomainError(f"mode index must be a nonzero integer, got {n!r}")
    parity = Parity.EVEN if n % 2 != 0 else Parity.ODD
    return Mode1D(n=n, parity=parity, p_n=n * _p1(conf), norm_const=_norm_const(conf))


def spectrum_1d(conf: Confinement, n_max: int) -> List[Mode1D]:
    """Modes n = 1..n_max in ascending order of n."""
    if not isinstance(n_max, int) or n_max < 1:
        raise DomainError(f"n_max must be an integer >= 1, got {n_max!r}")
    return [mode_1d(conf, n) for n in range(1, n_max + 1)]


def _trig_arguments(mode: Mode1D, conf: Confinement, x: np.ndarray):
    """Phase theta_n(x) and the amplitude prefactor C/sqrt(1+alpha x^2)."""
    alpha = conf.alpha
    if alpha == 0.0:
        theta = (mode.n * math.pi / conf.size) * x
        pref = np.full_like(x, mode.norm_const)
    else:
        root = math.sqrt(alpha)
        t = math.atan(root * 0.5 * conf.size)
        theta = (0.5 * math.pi * mode.n / t) * np.arctan(root * x)
        pref = mode.norm_const / np.sqrt(1.0 + alpha * x * x)
    return theta, pref


def mode_values(mode: Mode1D, conf: Confinement, x: np.ndarray) -> np.ndarray:
    """Vectorized psi_n(x); exact zeros at x = +-dx/2 are enforced by branch."""
    x = np.asarray(x, dtype=float)
    theta, pref = _trig_arguments(mode, conf, x)
    trig = np.cos(theta) if mode.parity is Parity.EVEN else np.sin(theta)
    return np.where(np.abs(x) == 0.5 * conf.size, 0.0, pref * trig)


def eval_mode_1d(mode: Mode1D, conf: Confinement, x: float) -> float:
    """psi_n at a single point; |x| <= dx/2 required."""
    _require_slit(conf)
    if not (math.isfinite(x) and abs(x) <= 0.5 * conf.size):
        raise DomainError(f"x must satisfy |x| <= {0.5 * conf.size!r}, got {x!r}")
    return float(mode_values(mode, conf, np.asarray([x]))[0])


def momentum_action_values(mode: Mode1D, conf: Confinement, x: np.ndarray) -> np.ndarray:
    """Real profile phi with (p psi_n)(x) = -i * phi(x).

    Applying the operator to the closed form analytically collapses to
    phi = p_n * C * (1+alpha x^2)^(-1/2) * trig'(theta_n), which keeps the
    <p> = 0 parity cancellation exact at the integrand level.
    """
    x = np.asarray(x, dtype=float)
    theta, pref = _trig_arguments(mode, conf, x)
    dtrig = -np.sin(theta) if mode.parity is Parity.EVEN else np.cos(theta)
    return mode.p_n * pref * dtrig


def moments_1d(mode: Mode1D, conf: Confinement, *, rel_tol: float = 1e-10,
               abs_tol: float = 1e-10) -> Moments1D:
    """Quadrature moments <p>, <p^2>, sigma_x, <x> of one mode.

    The momentum integrands use the analytic operator action, never finite
    differences, so <p> vanishes to quadrature accuracy by parity and
    <p^2> reproduces p_n^2.
    """
    _require_slit(conf)
    half = 0.5 * conf.size

    def psi(x):
        return mode_values(mode, conf, x)

    def act(x):
        return momentum_action_values(mode, conf, x)

    opts = {"rel_tol": rel_tol, "abs_tol": abs_tol}
    mean_p = integrate(lambda x: psi(x) * act(x), -half, half, **opts)
    mean_p2 = integrate(lambda x: act(x) ** 2, -half, half, **opts)
    mean_x = integrate(lambda x: x * psi(x) ** 2, -half, half, **opts)
    mean_x2 = integrate(lambda x: x * x * psi(x) ** 2, -half, half, **opts)
    sigma_x = math.sqrt(max(mean_x2 - mean_x * mean_x, 0.0))
    return Moments1D(mean_p=mean_p, mean_p2=mean_p2, sigma_x=sigma_x, mean_x=mean_x)


def robertson_schrodinger_check(mode: Mode1D, conf: Confinement, *,
                                rel_tol: float = 1e-10,
                                abs_tol: float = 1e-10) -> RSCheck:
    """State-dependent uncertainty inequality for one mode.

    lhs = sigma_p*sigma_x against rhs = (hbar/2)*[1 + alpha*(sigma_x^2 + <x>^2)];
    satisfied allows 1e-10 slack for quadrature rounding.
    """
    m = moments_1d(mode, conf, rel_tol=rel_tol, abs_tol=abs_tol)
    sigma_p = math.sqrt(max(m.mean_p2 - m.mean_p ** 2, 0.0))
    lhs = sigma_p * m.sigma_x
    rhs = 0.5 * conf.hbar * (1.0 + conf.alpha * (m.sigma_x ** 2 + m.mean_x ** 2))
    return RSCheck(lhs=lhs, rhs=rhs, satisfied=lhs >= rhs - 1e-10)
