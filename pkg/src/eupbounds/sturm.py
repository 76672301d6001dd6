"""Independent finite-difference oracle for Sturm-Liouville eigenproblems.

Discretizes -(p(x) u')' = lambda w(x) u on a uniform grid with a symmetric
second-order three-point scheme (p sampled at half-nodes, w at nodes) and
solves the resulting tridiagonal pencil (T, diag(w)) with an in-repo
Sturm-sequence bisection plus inverse iteration.  No external eigensolver
is used, so every closed form in the package is checked against genuinely
independent arithmetic.

Boundary conditions: Dirichlet eliminates the boundary node; a Regularity
condition (for radial problems with a coordinate singularity at the left
end) switches to a half-offset grid whose first node sits at h/2 and
closes the left face with zero flux, so the singular endpoint is never
sampled.  The 1D momentum-squared oracle deliberately discretizes in the
original x coordinate - the phase substitution that trivializes the
operator would reproduce the closed form by construction and check
nothing.

``n_points`` counts uniform subintervals; unknowns are the N-1 interior
nodes (Dirichlet/Dirichlet) or the N cell centers (Regularity/Dirichlet).

Problems are frozen and assembly/solve share no mutable state, so
independent solves may run concurrently; a single solve is sequential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .errors import CoefficientError, DomainError, EupError

__all__ = [
    "BoundaryCondition",
    "SturmLiouvilleProblem",
    "EigenResult",
    "Pencil",
    "discretize",
    "eigenvalue_count_below",
    "smallest_eigenvalues",
    "solve",
    "oracle_1d_p2",
    "flat_disk_oracle",
    "cap_oracle",
    "ball_oracle",
]

_MAX_EIGENVALUES = 10
_BISECT_REL_TOL = 1e-10
_RESIDUAL_TARGET = 1e-8
_INVIT_SEED = 74519


class BoundaryCondition(Enum):
    DIRICHLET = "dirichlet"
    REGULARITY = "regularity"


@dataclass(frozen=True)
class SturmLiouvilleProblem:
    """Coefficients, interval, boundary conditions and grid resolution."""

    interval: Tuple[float, float]
    p_coef: Callable[[np.ndarray], np.ndarray]
    w_coef: Callable[[np.ndarray], np.ndarray]
    bc_lo: BoundaryCondition = BoundaryCondition.DIRICHLET
    bc_hi: BoundaryCondition = BoundaryCondition.DIRICHLET
    n_points: int = 256

    def __post_init__(self):
        lo, hi = self.interval
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise DomainError(f"interval must satisfy x_lo < x_hi, got {self.interval!r}")
        if self.bc_hi is not BoundaryCondition.DIRICHLET:
            raise DomainError("only a Dirichlet condition is supported at x_hi")
        if not isinstance(self.n_points, int) or self.n_points < 16:
            raise DomainError(f"n_points must be an integer >= 16, got {self.n_points!r}")


@dataclass(frozen=True)
class Pencil:
    """Symmetric tridiagonal pencil T u = lambda diag(weights) u."""

    diag: np.ndarray
    offdiag: np.ndarray
    weights: np.ndarray
    grid: Optional[np.ndarray] = None
    grid_spacing: Optional[float] = None


@dataclass(frozen=True)
class EigenResult:
    eigenvalues: Tuple[float, ...]
    grid: Optional[np.ndarray]
    eigenvectors: Optional[Tuple[np.ndarray, ...]]
    grid_spacing: Optional[float]


def _check_positive(values: np.ndarray, coords: np.ndarray, name: str) -> None:
    bad = np.nonzero(~(values > 0.0))[0]
    if bad.size:
        i = int(bad[0])
        raise CoefficientError(
            f"{name} is non-positive at x={coords[i]!r} (value {values[i]!r})",
            coordinate=float(coords[i]),
        )


def grid_nodes(prob: SturmLiouvilleProblem) -> Tuple[np.ndarray, float]:
    """Unknown locations and spacing for the problem's grid layout."""
    lo, hi = prob.interval
    h = (hi - lo) / prob.n_points
    if prob.bc_lo is BoundaryCondition.DIRICHLET:
        nodes = lo + h * np.arange(1, prob.n_points)
    else:
        nodes = lo + h * (np.arange(prob.n_points) + 0.5)
    return nodes, h


def discretize(prob: SturmLiouvilleProblem) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Assemble (diag, offdiag, weights) of the pencil T u = lambda W u.

    Dirichlet/Dirichlet: interior nodes x_i = lo + i h, flux coefficients
    p(lo + (i +- 1/2) h).  Regularity/Dirichlet: cell centers at
    (i + 1/2) h with a zero-flux closure at the left face and a mirrored
    ghost cell behind the Dirichlet face, which keeps the scheme second
    order without ever sampling the singular endpoint.
    """
    lo, hi = prob.interval
    nodes, h = grid_nodes(prob)
    weights = np.asarray(prob.w_coef(nodes), dtype=float)
    _check_positive(weights, nodes, "w_coef")
    inv_h2 = 1.0 / (h * h)

    if prob.bc_lo is BoundaryCondition.DIRICHLET:
        faces = lo + h * (np.arange(prob.n_points) + 0.5)   # N half-nodes
        p = np.asarray(prob.p_coef(faces), dtype=float)
        _check_positive(p, faces, "p_coef")
        diag = (p[:-1] + p[1:]) * inv_h2
        offdiag = -p[1:-1] * inv_h2
    else:
        inner = lo + h * np.arange(1, prob.n_points)        # interior faces
        p_inner = np.asarray(prob.p_coef(inner), dtype=float)
        _check_positive(p_inner, inner, "p_coef")
        p_hi = float(np.asarray(prob.p_coef(np.asarray([hi])), dtype=float)[0])
        if not p_hi > 0.0:
            raise CoefficientError(
                f"p_coef is non-positive at x={hi!r} (value {p_hi!r})", coordinate=hi
            )
        diag = np.empty(prob.n_points)
        diag[0] = p_inner[0] * inv_h2
        diag[1:-1] = (p_inner[:-1] + p_inner[1:]) * inv_h2
        diag[-1] = (p_inner[-1] + 2.0 * p_hi) * inv_h2
        offdiag = -p_inner * inv_h2

    return diag, offdiag, weights


def _standard_form(pencil: Pencil) -> Tuple[list, list]:
    """Similarity-transform the pencil to standard symmetric tridiagonal form.

    S = W^(-1/2) T W^(-1/2) shares the pencil's eigenvalues; returned as
    plain lists (diag, squared offdiag) for the sequential Sturm recurrence.
    """
    w = pencil.weights
    d = pencil.diag / w
    e = pencil.offdiag / np.sqrt(w[:-1] * w[1:])
    return d.tolist(), (e * e).tolist()


def _count_below(d: list, e2: list, sigma: float) -> int:
    """Number of eigenvalues of the standard form strictly below sigma.

    LDL^T Sturm sequence: negative pivots count eigenvalues below the
    shift; vanishing pivots are nudged to keep the recurrence defined.
    """
    tiny = 1e-300
    count = 0
    q = d[0] - sigma
    if q < 0.0:
        count = 1
    for i in range(1, len(d)):
        if abs(q) < tiny:
            q = -tiny if q < 0.0 else tiny
        q = d[i] - sigma - e2[i - 1] / q
        if q < 0.0:
            count += 1
    return count


def eigenvalue_count_below(pencil: Pencil, sigma: float) -> int:
    """Sturm-sequence count of pencil eigenvalues strictly below sigma."""
    d, e2 = _standard_form(pencil)
    return _count_below(d, e2, sigma)


def _gershgorin(d: Sequence[float], e: np.ndarray) -> Tuple[float, float]:
    radius = np.zeros(len(d))
    ae = np.abs(e)
    radius[:-1] += ae
    radius[1:] += ae
    darr = np.asarray(d)
    return float(np.min(darr - radius)), float(np.max(darr + radius))


def _bisect_eigenvalues(d: list, e2: list, e: np.ndarray, k: int) -> list:
    n = len(d)
    lo0, hi0 = _gershgorin(d, e)
    span = max(abs(lo0), abs(hi0), 1.0)
    lo0 -= 1e-12 * span
    hi0 += 1e-12 * span
    if _count_below(d, e2, hi0) < k:
        raise EupError(
            f"bisection bracket failure: fewer than {k} eigenvalues below the "
            f"Gershgorin bound {hi0!r} (n={n})"
        )

    # Every count evaluation localizes all k targets at once.
    lows = [lo0] * k
    highs = [hi0] * k

    def absorb(sigma: float, count: int) -> None:
        for j in range(k):
            if count >= j + 1:
                if sigma < highs[j]:
                    highs[j] = sigma
            elif sigma > lows[j]:
                lows[j] = sigma

    eigenvalues = []
    for j in range(1, k + 1):
        lo, hi = lows[j - 1], highs[j - 1]
        for _ in range(200):
            width = hi - lo
            if width <= _BISECT_REL_TOL * max(abs(lo), abs(hi)) or width <= 5e-324:
                break
            mid = 0.5 * (lo + hi)
            c = _count_below(d, e2, mid)
            absorb(mid, c)
            if c >= j:
                hi = mid
            else:
                lo = mid
        eigenvalues.append(0.5 * (lo + hi))
    return eigenvalues


def _solve_shifted(d: np.ndarray, e: np.ndarray, sigma: float, rhs: np.ndarray) -> np.ndarray:
    """Solve (S - sigma I) x = rhs for symmetric tridiagonal S, with partial
    pivoting between adjacent rows (fill-in of one extra superdiagonal)."""
    n = len(d)
    b = (d - sigma).tolist()        # main diagonal
    a = e.tolist()                  # subdiagonal entries a[i] couples rows i,i+1
    c = e.tolist()                  # superdiagonal
    f = [0.0] * n                   # second superdiagonal fill-in
    x = rhs.tolist()
    tiny = 1e-300
    for i in range(n - 1):
        if abs(b[i]) < abs(a[i]):
            # swap row i with row i+1
            b[i], a[i] = a[i], b[i]
            ci_new = b[i + 1]
            b[i + 1] = c[i]
            c[i] = ci_new
            if i + 1 < n - 1:
                f[i] = c[i + 1]
                c[i + 1] = 0.0
            x[i], x[i + 1] = x[i + 1], x[i]
        piv = b[i]
        if abs(piv) < tiny:
            piv = tiny if piv >= 0.0 else -tiny
            b[i] = piv
        m = a[i] / piv
        b[i + 1] -= m * c[i]
        if i + 1 < n - 1:
            c[i + 1] -= m * f[i]
        x[i + 1] -= m * x[i]
    if abs(b[n - 1]) < tiny:
        b[n - 1] = tiny if b[n - 1] >= 0.0 else -tiny
    x[n - 1] /= b[n - 1]
    if n >= 2:
        x[n - 2] = (x[n - 2] - c[n - 2] * x[n - 1]) / b[n - 2]
    for i in range(n - 3, -1, -1):
        x[i] = (x[i] - c[i] * x[i + 1] - f[i] * x[i + 2]) / b[i]
    return np.asarray(x)


def _pencil_matvec(pencil: Pencil, v: np.ndarray) -> np.ndarray:
    out = pencil.diag * v
    out[:-1] += pencil.offdiag * v[1:]
    out[1:] += pencil.offdiag * v[:-1]
    return out


def _eigenvector(pencil: Pencil, d: np.ndarray, e: np.ndarray,
                 lam: float, rng: np.random.Generator) -> np.ndarray:
    """Inverse iteration in standard form, mapped back to the pencil."""
    n = len(d)
    w = pencil.weights
    v = rng.standard_normal(n)
    v /= math.sqrt(float(np.dot(v, v)))
    for _ in range(5):
        v = _solve_shifted(d, e, lam, v)
        v /= math.sqrt(float(np.dot(v, v)))
        u = v / np.sqrt(w)
        r = _pencil_matvec(pencil, u) - lam * (w * u)
        scale = max(float(np.linalg.norm(_pencil_matvec(pencil, u))),
                    abs(lam) * float(np.linalg.norm(w * u)), 1e-300)
        if float(np.linalg.norm(r)) / scale < _RESIDUAL_TARGET:
            break
    h = pencil.grid_spacing if pencil.grid_spacing is not None else 1.0
    u = v / np.sqrt(w)
    u /= math.sqrt(h * float(np.dot(w, u * u)))
    if u[int(np.argmax(np.abs(u)))] < 0.0:
        u = -u
    return u


def smallest_eigenvalues(pencil: Pencil, k: int, *, vectors: bool = False) -> EigenResult:
    """k smallest pencil eigenvalues by Sturm-sequence bisection.

    Each eigenvalue is located to relative 1e-10 in the bisection sense;
    eigenvectors (optional) come from inverse iteration at the converged
    shift and are normalized in the discrete w-weighted norm
    h * sum(w_i u_i^2) = 1 with deterministic seeding.
    """
    n = len(pencil.diag)
    if not isinstance(k, int) or k < 1 or k > _MAX_EIGENVALUES:
        raise DomainError(f"k must be an integer in [1, {_MAX_EIGENVALUES}], got {k!r}")
    if k > n:
        raise DomainError(f"k={k} exceeds the pencil dimension {n}")
    d_list, e2 = _standard_form(pencil)
    e_std = pencil.offdiag / np.sqrt(pencil.weights[:-1] * pencil.weights[1:])
    eigenvalues = _bisect_eigenvalues(d_list, e2, e_std, k)
    eigenvectors = None
    if vectors:
        d_arr = np.asarray(d_list)
        vecs = []
        for j, lam in enumerate(eigenvalues):
            rng = np.random.default_rng(_INVIT_SEED + j)
            vecs.append(_eigenvector(pencil, d_arr, e_std, lam, rng))
        eigenvectors = tuple(vecs)
    return EigenResult(
        eigenvalues=tuple(eigenvalues),
        grid=pencil.grid,
        eigenvectors=eigenvectors,
        grid_spacing=pencil.grid_spacing,
    )


def solve(prob: SturmLiouvilleProblem, k: int, *, vectors: bool = False) -> EigenResult:
    """Discretize and solve in one step."""
    diag, offdiag, weights = discretize(prob)
    nodes, h = grid_nodes(prob)
    pencil = Pencil(diag=diag, offdiag=offdiag, weights=weights, grid=nodes,
                    grid_spacing=h)
    return smallest_eigenvalues(pencil, k, vectors=vectors)


def oracle_1d_p2(dx: float, alpha: float, n_points: int, *, k: int = 5,
                 vectors: bool = False) -> EigenResult:
    """FD eigenvalues of the squared slit momentum operator, in units of hbar^2.

    With f = 1 + alpha x^2 and phi = sqrt(f) psi the eigenproblem becomes
    -(f phi')' = (p/hbar)^2 phi / f on (-dx/2, dx/2) with Dirichlet walls,
    i.e. p_coef = f and w_coef = 1/f; eigenvalues are (p_k/hbar)^2.
    """
    if not (math.isfinite(dx) and dx > 0.0):
        raise DomainError(f"dx must be finite and > 0, got {dx!r}")
    if not (math.isfinite(alpha) and alpha >= 0.0):
        raise DomainError(f"alpha must be finite and >= 0, got {alpha!r}")
    prob = SturmLiouvilleProblem(
        interval=(-0.5 * dx, 0.5 * dx),
        p_coef=lambda x: 1.0 + alpha * x * x,
        w_coef=lambda x: 1.0 / (1.0 + alpha * x * x),
        bc_lo=BoundaryCondition.DIRICHLET,
        bc_hi=BoundaryCondition.DIRICHLET,
        n_points=n_points,
    )
    return solve(prob, k, vectors=vectors)


def flat_disk_oracle(n_points: int, *, k: int = 1) -> EigenResult:
    """Flat radial problem -(rho u')' = lambda rho u on (0, 1).

    Its eigenvalues are the squared zeros of the first radial mode family;
    this run supplies the flat-disk reference constant for the cap module.
    """
    prob = SturmLiouvilleProblem(
        interval=(0.0, 1.0),
        p_coef=lambda x: x,
        w_coef=lambda x: x,
        bc_lo=BoundaryCondition.REGULARITY,
        bc_hi=BoundaryCondition.DIRICHLET,
        n_points=n_points,
    )
    return solve(prob, k)


def cap_oracle(theta: float, n_points: int, *, k: int = 1) -> EigenResult:
    """Reduced azimuthally-symmetric cap problem on a unit sphere.

    -(sin t u')' = mu sin t u on (0, theta) with regularity at the pole and
    a Dirichlet rim; mu = lambda * a^2, so divide by a^2 for a general
    sphere radius.
    """
    if not (0.0 < theta < math.pi):
        raise DomainError(f"theta must lie in (0, pi), got {theta!r}")
    prob = SturmLiouvilleProblem(
        interval=(0.0, theta),
        p_coef=np.sin,
        w_coef=np.sin,
        bc_lo=BoundaryCondition.REGULARITY,
        bc_hi=BoundaryCondition.DIRICHLET,
        n_points=n_points,
    )
    return solve(prob, k)


def ball_oracle(curvature: float, radius: float, n_points: int, *, k: int = 1) -> EigenResult:
    """Radial ball problem -(s^2 u')' = lambda s^2 u on (0, R).

    The metric factor is s = sin(sqrt(K) r)/sqrt(K) for K > 0, s = r for
    K = 0 and s = sinh(sqrt(|K|) r)/sqrt(|K|) for K < 0.
    """
    if not (math.isfinite(radius) and radius > 0.0):
        raise DomainError(f"radius must be finite and > 0, got {radius!r}")
    if curvature > 0.0:
        root = math.sqrt(curvature)
        if radius >= math.pi / root:
            raise DomainError(
                f"radius {radius!r} reaches the antipode for curvature {curvature!r}"
            )

        def s(x):
            return np.sin(root * x) / root
    elif curvature == 0.0:
        def s(x):
            return np.asarray(x, dtype=float)
    else:
        root = math.sqrt(-curvature)

        def s(x):
            return np.sinh(root * x) / root

    prob = SturmLiouvilleProblem(
        interval=(0.0, radius),
        p_coef=lambda x: s(x) ** 2,
        w_coef=lambda x: s(x) ** 2,
        bc_lo=BoundaryCondition.REGULARITY,
        bc_hi=BoundaryCondition.DIRICHLET,
        n_points=n_points,
    )
    return solve(prob, k)
