"""Figure rendering for the report path.

Each report writes a canonical CSV data file plus a rendered figure next
to it: the 1D uncertainty-product curves over slit width, the cap degree
and product over angular radius, and the 3D product over ball radius for
spherical, flat and hyperbolic curvature (with the momentum floor drawn
for the hyperbolic branch).
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import numpy as np

from . import __version__
from .core import Confinement, ball_radius_max
from .onedim import bound_1d
from .records import render_csv
from .threedim import bound_3d
from .twodim import THETA_MAX, CapProblem, cap_bound

__all__ = ["render_reports"]

_ALPHAS_1D = (0.0, 0.1, 1.0, 10.0)
_ALPHAS_3D = (0.25, 0.0, -0.25)


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _write(path: Path, header, rows) -> None:
    path.write_text(render_csv(header, rows, [f"meta tool_version={__version__}"]),
                    encoding="utf-8")


def _report_1d(out: Path, points: int, dpi: int, ext: str) -> list:
    plt = _pyplot()
    widths = np.exp(np.linspace(math.log(0.05), math.log(50.0), points))
    rows = []
    curves = {}
    for alpha in _ALPHAS_1D:
        products = [bound_1d(Confinement.slit(float(w), alpha)).product
                    for w in widths]
        curves[alpha] = products
        rows += [[alpha, float(w), p] for w, p in zip(widths, products)]
    csv_path = out / "bound1d.csv"
    _write(csv_path, ["alpha", "dx", "product"], rows)

    fig, ax = plt.subplots(figsize=(5.0, 3.6), dpi=dpi)
    for alpha, products in curves.items():
        ax.plot(widths, np.asarray(products) / math.pi,
                label=f"alpha={alpha:g}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("slit width dx")
    ax.set_ylabel("sigma_p dx / (pi hbar)")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig_path = out / f"bound1d.{ext}"
    fig.savefig(fig_path)
    plt.close(fig)
    return [csv_path, fig_path]


def _report_2d(out: Path, points: int, dpi: int, ext: str) -> list:
    plt = _pyplot()
    thetas = np.linspace(0.05, 0.98 * THETA_MAX, points)
    results = [cap_bound(CapProblem(a=1.0, theta=float(t))) for t in thetas]
    rows = [[float(t), r.nu1, r.lambda1, r.product]
            for t, r in zip(thetas, results)]
    csv_path = out / "cap2d.csv"
    _write(csv_path, ["theta", "nu1", "lambda1", "product"], rows)

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(7.5, 3.2), dpi=dpi)
    ax1.plot(thetas, [r.nu1 for r in results])
    ax1.set_yscale("log")
    ax1.set_xlabel("cap angular radius theta")
    ax1.set_ylabel("first root degree nu1")
    ax2.plot(thetas, [r.product / math.pi for r in results])
    ax2.set_xlabel("cap angular radius theta")
    ax2.set_ylabel("sigma_p R / (pi hbar)")
    fig.tight_layout()
    fig_path = out / f"cap2d.{ext}"
    fig.savefig(fig_path)
    plt.close(fig)
    return [csv_path, fig_path]


def _report_3d(out: Path, points: int, dpi: int, ext: str) -> list:
    plt = _pyplot()
    rows = []
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(7.5, 3.2), dpi=dpi)
    for alpha in _ALPHAS_3D:
        r_hi = 0.999 * ball_radius_max(alpha) if alpha > 0.0 else 20.0
        radii = np.linspace(0.05, r_hi, points)
        results = [bound_3d(float(r), alpha) for r in radii]
        rows += [[alpha, float(r), b.product, b.sigma_p_min]
                 for r, b in zip(radii, results)]
        ax1.plot(radii, [b.product / math.pi for b in results],
                 label=f"alpha={alpha:g}")
        ax2.plot(radii, [b.sigma_p_min for b in results], label=f"alpha={alpha:g}")
    floor = bound_3d(1.0, _ALPHAS_3D[-1]).floor
    ax2.axhline(floor, color="k", lw=0.8, ls=":", label="hyperbolic floor")
    ax1.set_xlabel("ball radius R")
    ax1.set_ylabel("sigma_p R / (pi hbar)")
    ax1.legend(frameon=False)
    ax2.set_xlabel("ball radius R")
    ax2.set_ylabel("sigma_p,min")
    ax2.set_yscale("log")
    ax2.legend(frameon=False)
    fig.tight_layout()
    csv_path = out / "ball3d.csv"
    _write(csv_path, ["alpha", "radius", "product", "sigma_p_min"], rows)
    fig_path = out / f"ball3d.{ext}"
    fig.savefig(fig_path)
    plt.close(fig)
    return [csv_path, fig_path]


def render_reports(out_dir, *, dims: Sequence[int] = (1, 2, 3), points: int = 200,
                   dpi: int = 150, figure_format: str = "png") -> list:
    """Render the requested report figures and CSV files; returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    if 1 in dims:
        paths += _report_1d(out, points, dpi, figure_format)
    if 2 in dims:
        paths += _report_2d(out, points, dpi, figure_format)
    if 3 in dims:
        paths += _report_3d(out, points, dpi, figure_format)
    return paths
