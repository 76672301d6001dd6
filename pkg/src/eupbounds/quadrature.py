"""Adaptive composite Gauss-Legendre quadrature.

A fixed 15-point Gauss-Legendre rule is applied per panel and panels are
bisected recursively until the two-half refinement changes the estimate
by less than the local budget (absolute budget halves on descent, the
relative test uses the refined value).  Integrands must accept and
return numpy arrays.
"""

from __future__ import annotations

import numpy as np

from .errors import QuadratureError

__all__ = ["integrate"]

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(15)


def _panel(f, lo: float, hi: float) -> float:
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    return half * float(np.dot(_WEIGHTS, f(mid + half * _NODES)))


def _refine(f, lo, hi, whole, abs_tol, rel_tol, depth):
    mid = 0.5 * (lo + hi)
    left = _panel(f, lo, mid)
    right = _panel(f, mid, hi)
    refined = left + right
    err = abs(refined - whole)
    if err <= max(abs_tol, rel_tol * abs(refined)):
        return refined
    if depth <= 0:
        raise QuadratureError(
            f"quadrature panel [{lo!r}, {hi!r}] did not converge", achieved=err
        )
    return _refine(f, lo, mid, left, 0.5 * abs_tol, rel_tol, depth - 1) + _refine(
        f, mid, hi, right, 0.5 * abs_tol, rel_tol, depth - 1
    )


def integrate(f, lo: float, hi: float, *, rel_tol: float = 1e-10,
              abs_tol: float = 1e-10, max_depth: int = 48) -> float:
    """Integrate the vectorized callable ``f`` over [lo, hi].

    Raises QuadratureError (with the achieved panel error attached) if the
    recursion depth is exhausted before the tolerances are met.
    """
    if lo == hi:
        return 0.0
    return _refine(f, lo, hi, _panel(f, lo, hi), abs_tol, rel_tol, max_depth)
