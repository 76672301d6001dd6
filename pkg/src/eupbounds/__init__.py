"""Momentum-spread lower bounds for apparatus-defined confinement.

Closed-form bounds for a 1D slit, a 2D spherical cap and a 3D geodesic
ball under the position-deformed commutator [x, p] = i*hbar*(1 + alpha*x^2),
together with the full discrete slit spectrum and eigenfunctions, and an
independent finite-difference Sturm-Liouville oracle that cross-validates
every closed form.
"""

from .core import (
    Confinement,
    ConfinementKind,
    DeformationParam,
    coordinate_from_geodesic_radius,
    geodesic_radius_from_coordinate,
)
from .errors import (
    CoefficientError,
    ConvergenceError,
    DomainError,
    EupError,
    QuadratureError,
    RootNotFoundError,
)
from .onedim import (
    Bound1DResult,
    Mode1D,
    Moments1D,
    Parity,
    Regime,
    RSCheck,
    bound_1d,
    eval_mode_1d,
    mode_1d,
    moments_1d,
    phi_factor,
    robertson_schrodinger_check,
    spectrum_1d,
)
from .sturm import (
    BoundaryCondition,
    EigenResult,
    Pencil,
    SturmLiouvilleProblem,
    ball_oracle,
    cap_oracle,
    discretize,
    flat_disk_oracle,
    oracle_1d_p2,
    smallest_eigenvalues,
)
from .threedim import Ball3DResult, bound_1d_geodesic, bound_3d
from .twodim import CapProblem, CapResult, cap_bound, legendre_p, nu1_of_theta

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "DeformationParam", "Confinement", "ConfinementKind",
    "geodesic_radius_from_coordinate", "coordinate_from_geodesic_radius",
    "EupError", "DomainError", "CoefficientError", "ConvergenceError",
    "RootNotFoundError", "QuadratureError",
    "Parity", "Regime", "Mode1D", "Bound1DResult", "Moments1D", "RSCheck",
    "phi_factor", "bound_1d", "mode_1d", "spectrum_1d", "eval_mode_1d",
    "moments_1d", "robertson_schrodinger_check",
    "CapProblem", "CapResult", "legendre_p", "nu1_of_theta", "cap_bound",
    "Ball3DResult", "bound_3d", "bound_1d_geodesic",
    "BoundaryCondition", "SturmLiouvilleProblem", "Pencil", "EigenResult",
    "discretize", "smallest_eigenvalues", "oracle_1d_p2",
    "flat_disk_oracle", "cap_oracle", "ball_oracle",
]
