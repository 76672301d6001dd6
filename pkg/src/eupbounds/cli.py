"""Command-line front end: bounds, scans, mode sampling, oracle validation.

Commands emit CSV by default (header row, comma delimiter, "\n" endings,
trailing "# meta" line) or JSON lines with --format json; the env var
EUP_DEFAULT_FORMAT overrides the default.  Identical inputs always produce
byte-identical output.  Errors are single machine-parsable lines
"EUP-ERR <code> <message>" on stderr.

Exit codes: 0 success, 1 usage, 2 domain/numerical error, 3 validation
failure.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import __version__
from .core import Confinement, ball_radius_max
from .errors import DomainError, EupError
from .onedim import bound_1d, mode_1d, mode_values
from .quadrature import integrate
from .records import OutputRecord, json_line, render_csv
from .threedim import bound_3d
from .twodim import CapProblem, cap_bound
from .validate import run_suite

__all__ = ["main", "console_main"]

_FORMATS = ("csv", "json")

# Decimal CLI input within this relative slack above the maximum geodesic
# radius is snapped onto it (rounded text renderings of pi/(2 sqrt(alpha))
# should reach the degenerate bound, not a domain error).
_RADIUS_SNAP_REL = 1e-9


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="eup", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--hbar", type=float, default=1.0)
        p.add_argument("--format", choices=_FORMATS, default=None,
                       help="output format (default csv, or EUP_DEFAULT_FORMAT)")

    p_bound = sub.add_parser("bound", help="minimal momentum spread for one geometry")
    p_bound.add_argument("--dim", type=int, choices=(1, 2, 3), required=True)
    p_bound.add_argument("--alpha", type=float, default=None)
    p_bound.add_argument("--dx", type=float, default=None, help="slit width (1D)")
    p_bound.add_argument("--a", type=float, default=None, help="sphere radius (2D)")
    p_bound.add_argument("--theta", type=float, default=None,
                         help="cap angular radius (2D)")
    p_bound.add_argument("--radius", type=float, default=None,
                         help="geodesic ball radius (3D)")
    add_common(p_bound)

    p_scan = sub.add_parser("scan", help="sweep one parameter, one row per point")
    p_scan.add_argument("--dim", type=int, choices=(1, 2, 3), required=True)
    p_scan.add_argument("--sweep", required=True,
                        help="name:start:stop:count or name:log:start:stop:count")
    p_scan.add_argument("--alpha", type=float, default=None)
    p_scan.add_argument("--dx", type=float, default=None)
    p_scan.add_argument("--a", type=float, default=None)
    p_scan.add_argument("--theta", type=float, default=None)
    p_scan.add_argument("--radius", type=float, default=None)
    add_common(p_scan)

    p_val = sub.add_parser("validate", help="closed forms against the FD oracle")
    p_val.add_argument("--suite", choices=("1d", "2d", "3d", "all"), default="all")
    p_val.add_argument("--grid", type=int, default=None,
                       help="override the oracle grid resolution")
    add_common(p_val)

    p_modes = sub.add_parser("modes", help="sample one slit eigenfunction")
    p_modes.add_argument("--dim", type=int, choices=(1,), required=True)
    p_modes.add_argument("--alpha", type=float, required=True)
    p_modes.add_argument("--dx", type=float, required=True)
    p_modes.add_argument("--n", type=int, required=True)
    p_modes.add_argument("--samples", type=int, default=512)
    add_common(p_modes)

    p_report = sub.add_parser("report", help="render figures plus CSV data files")
    p_report.add_argument("--out-dir", default="figures")
    p_report.add_argument("--dims", default="1,2,3",
                          help="comma-separated subset of 1,2,3")
    p_report.add_argument("--points", type=int, default=200)
    p_report.add_argument("--dpi", type=int, default=150)
    p_report.add_argument("--figure-format", choices=("png", "pdf"), default="png")
    return parser


def _resolve_format(args) -> str:
    fmt = getattr(args, "format", None)
    if fmt is None:
        fmt = os.environ.get("EUP_DEFAULT_FORMAT", "csv")
    if fmt not in _FORMATS:
        raise UsageError(f"unsupported output format {fmt!r}")
    return fmt


def _require(args, names) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for --dim {args.dim}")


def _meta(tolerance_used=None, oracle_grid=None, **extra) -> Dict[str, object]:
    meta: Dict[str, object] = {"tool_version": __version__,
                               "tolerance_used": tolerance_used,
                               "oracle_grid": oracle_grid}
    meta.update(extra)
    return meta


def _emit(records: List[OutputRecord], fmt: str,
          meta_comment: Optional[str] = None) -> str:
    if fmt == "json":
        return "".join(json_line(r) + "\n" for r in records)
    header = ["command"]
    first = records[0]
    header += list(first.inputs.keys()) + list(first.outputs.keys())
    rows = []
    for rec in records:
        rows.append([rec.command, *rec.inputs.values(), *rec.outputs.values()])
    comments = [meta_comment] if meta_comment else [f"meta tool_version={__version__}"]
    return render_csv(header, rows, comments)


def _snap_radius(radius: float, alpha: float) -> float:
    if alpha > 0.0:
        r_max = ball_radius_max(alpha)
        if r_max < radius <= r_max * (1.0 + _RADIUS_SNAP_REL):
            return r_max
    return radius


def _bound_record(dim: int, alpha, dx, a, theta, radius, hbar) -> OutputRecord:
    if dim == 1:
        res = bound_1d(Confinement.slit(dx, alpha, hbar))
        return OutputRecord(
            "bound",
            inputs={"dim": 1, "alpha": alpha, "dx": dx, "hbar": hbar},
            outputs={
                "sigma_p_min": res.sigma_p_min,
                "product": res.product,
                "phi": res.phi,
                "regime": res.regime.value,
                "degenerate": False,
            },
            meta=_meta(),
        )
    if dim == 2:
        if a is None:
            problem = CapProblem.from_alpha(alpha, theta, hbar)
        else:
            problem = CapProblem(a=a, theta=theta, hbar=hbar)
        res = cap_bound(problem)
        return OutputRecord(
            "bound",
            inputs={"dim": 2, "a": problem.a, "theta": theta, "hbar": hbar},
            outputs={
                "nu1": res.nu1,
                "lambda1": res.lambda1,
                "sigma_p_min": res.sigma_p_min,
                "product": res.product,
                "residual": res.residual,
                "degenerate": False,
            },
            meta=_meta(),
        )
    res = bound_3d(_snap_radius(radius, alpha), alpha, hbar)
    return OutputRecord(
        "bound",
        inputs={"dim": 3, "alpha": alpha, "radius": radius, "hbar": hbar},
        outputs={
            "curvature": res.curvature,
            "lambda1": res.lambda1,
            "sigma_p_min": res.sigma_p_min,
            "product": res.product,
            "floor": res.floor,
            "degenerate": res.product == 0.0,
        },
        meta=_meta(),
    )


def cmd_bound(args, fmt: str) -> Tuple[str, int]:
    if args.dim == 1:
        _require(args, ("alpha", "dx"))
    elif args.dim == 2:
        _require(args, ("theta",))
        if (args.a is None) == (args.alpha is None):
            raise UsageError("exactly one of --a / --alpha is required for --dim 2")
    else:
        _require(args, ("alpha", "radius"))
    rec = _bound_record(args.dim, args.alpha, args.dx, args.a, args.theta,
                        args.radius, args.hbar)
    return _emit([rec], fmt), 0


_SWEEPABLE = {1: ("dx", "alpha"), 2: ("theta", "a"), 3: ("radius", "alpha")}


def _parse_sweep(spec: str, dim: int) -> Tuple[str, List[float]]:
    parts = spec.split(":")
    log = len(parts) == 5 and parts[1] == "log"
    if not (len(parts) == 4 or log):
        raise UsageError(
            f"malformed sweep {spec!r}; expected name:start:stop:count "
            f"or name:log:start:stop:count"
        )
    name = parts[0]
    if name not in _SWEEPABLE[dim]:
        raise UsageError(f"cannot sweep {name!r} for --dim {dim}; "
                         f"choose from {_SWEEPABLE[dim]}")
    try:
        start = float(parts[-3])
        stop = float(parts[-2])
        count = int(parts[-1])
    except ValueError as exc:
        raise UsageError(f"malformed sweep {spec!r}: {exc}") from None
    if count < 2:
        raise UsageError("sweep count must be >= 2")
    if log:
        if start <= 0.0 or stop <= 0.0:
            raise UsageError("log sweeps need positive endpoints")
        values = np.exp(np.linspace(math.log(start), math.log(stop), count))
    else:
        values = np.linspace(start, stop, count)
    return name, [float(v) for v in values]


def cmd_scan(args, fmt: str) -> Tuple[str, int]:
    name, values = _parse_sweep(args.sweep, args.dim)
    fixed = {"alpha": args.alpha, "dx": args.dx, "a": args.a,
             "theta": args.theta, "radius": args.radius}
    fixed[name] = None   # supplied by the sweep
    if args.dim == 1:
        needed = {"dx", "alpha"} - {name}
    elif args.dim == 2:
        needed = {"theta"} - {name}
        if name != "a" and fixed["a"] is None and fixed["alpha"] is None:
            raise UsageError("one of --a / --alpha is required for --dim 2 scans")
    else:
        needed = {"radius", "alpha"} - {name}
    for key in needed:
        if fixed[key] is None:
            raise UsageError(f"--{key} is required for this sweep")

    records: List[OutputRecord] = []
    warnings = 0
    for value in values:
        params = dict(fixed)
        params[name] = value
        try:
            rec = _bound_record(args.dim, params["alpha"], params["dx"],
                                params["a"], params["theta"], params["radius"],
                                args.hbar)
            outputs = dict(rec.outputs)
            outputs["status"] = "ok"
            outputs["error"] = None
            records.append(OutputRecord("scan", inputs=rec.inputs,
                                        outputs=outputs, meta=rec.meta))
        except EupError as exc:
            warnings += 1
            inputs = _scan_inputs(args.dim, params, args.hbar)
            outputs = dict.fromkeys(_scan_output_keys(args.dim))
            outputs["status"] = ("domain-error" if isinstance(exc, DomainError)
                                 else "numerical-error")
            outputs["error"] = str(exc).replace(",", ";")
            records.append(OutputRecord("scan", inputs=inputs, outputs=outputs,
                                        meta=_meta()))
    meta_comment = f"meta warnings={warnings} tool_version={__version__}"
    if fmt == "json":
        trailer = OutputRecord("scan", inputs={}, outputs={},
                               meta=_meta(warnings=warnings))
        return _emit(records + [trailer], fmt), 0
    return _emit(records, fmt, meta_comment=meta_comment), 0


def _scan_inputs(dim: int, params: Dict[str, Optional[float]],
                 hbar: float) -> Dict[str, object]:
    if dim == 1:
        return {"dim": 1, "alpha": params["alpha"], "dx": params["dx"], "hbar": hbar}
    if dim == 2:
        a = params["a"]
        if a is None and params["alpha"] is not None and params["alpha"] > 0:
            a = 1.0 / (2.0 * math.sqrt(params["alpha"]))
        return {"dim": 2, "a": a, "theta": params["theta"], "hbar": hbar}
    return {"dim": 3, "alpha": params["alpha"], "radius": params["radius"],
            "hbar": hbar}


def _scan_output_keys(dim: int) -> List[str]:
    if dim == 1:
        return ["sigma_p_min", "product", "phi", "regime", "degenerate"]
    if dim == 2:
        return ["nu1", "lambda1", "sigma_p_min", "product", "residual", "degenerate"]
    return ["curvature", "lambda1", "sigma_p_min", "product", "floor", "degenerate"]


def cmd_validate(args, fmt: str) -> Tuple[str, int]:
    checks = run_suite(args.suite, args.grid)
    records = []
    for c in checks:
        records.append(OutputRecord(
            "validate",
            inputs={"suite": c.suite, "check": c.name, "grid": c.grid},
            outputs={
                "closed_form": c.closed_form,
                "oracle": c.oracle,
                "rel_error": c.rel_error,
                "tolerance": c.tolerance,
                "passed": c.passed,
            },
            meta=_meta(tolerance_used=c.tolerance, oracle_grid=c.grid),
        ))
    code = 0 if all(c.passed for c in checks) else 3
    return _emit(records, fmt), code


def cmd_modes(args, fmt: str) -> Tuple[str, int]:
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    conf = Confinement.slit(args.dx, args.alpha, args.hbar)
    mode = mode_1d(conf, args.n)
    xs = np.linspace(-0.5 * args.dx, 0.5 * args.dx, args.samples)
    psi = mode_values(mode, conf, xs)
    norm = integrate(lambda x: mode_values(mode, conf, x) ** 2,
                     -0.5 * args.dx, 0.5 * args.dx)
    records = []
    inputs = {"dim": 1, "n": args.n, "alpha": args.alpha, "dx": args.dx,
              "hbar": args.hbar}
    for x, value in zip(xs, psi):
        records.append(OutputRecord(
            "modes", inputs=inputs,
            outputs={"kind": "sample", "x": float(x), "psi": float(value),
                     "p_n": None, "norm_const": None, "norm": None},
            meta=_meta(),
        ))
    records.append(OutputRecord(
        "modes", inputs=inputs,
        outputs={"kind": "summary", "x": None, "psi": None, "p_n": mode.p_n,
                 "norm_const": mode.norm_const, "norm": norm},
        meta=_meta(tolerance_used=1e-10),
    ))
    return _emit(records, fmt), 0


def cmd_report(args) -> Tuple[str, int]:
    from .report import render_reports

    try:
        dims = tuple(int(d) for d in args.dims.split(",") if d)
    except ValueError:
        raise UsageError(f"--dims must be a subset of 1,2,3, got {args.dims!r}") from None
    if not dims or any(d not in (1, 2, 3) for d in dims):
        raise UsageError(f"--dims must be a subset of 1,2,3, got {args.dims!r}")
    paths = render_reports(args.out_dir, dims=dims, points=args.points,
                           dpi=args.dpi, figure_format=args.figure_format)
    return "".join(f"wrote {p}\n" for p in paths), 0


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "report":
            text, code = cmd_report(args)
        else:
            fmt = _resolve_format(args)
            if args.command == "bound":
                text, code = cmd_bound(args, fmt)
            elif args.command == "scan":
                text, code = cmd_scan(args, fmt)
            elif args.command == "validate":
                text, code = cmd_validate(args, fmt)
            else:
                text, code = cmd_modes(args, fmt)
    except UsageError as exc:
        print(f"EUP-ERR 1 {exc}", file=err)
        return 1
    except EupError as exc:
        message = " ".join(str(exc).split())
        print(f"EUP-ERR 2 {message}", file=err)
        return 2
    except SystemExit as exc:   # argparse --help
        return int(exc.code or 0)
    out.write(text)
    return code


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
