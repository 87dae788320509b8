"""Command line: ``epstein-kit verify | mesh | report``.

Exit status is 0 on success (every check passed), 1 when a check fails or an
output cannot be written, and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
from pathlib import Path

import numpy as np

from . import bounds as B
from .config import ConfigError, load_config
from .domains import domain_from_name
from .errors import GeometryError
from .mesh import dome_mesh, epstein_mesh, flow_meshes, write_obj
from .verify import SUITES, render, run_verify
from .wvolume import ConvexRevolutionBody, mean_curvature_identity_residual, w_volume, w_volume_alternate

__all__ = ["main", "build_parser", "wvolume_table", "bound_table", "WVOLUME_COLUMNS", "BOUND_COLUMNS"]

# column names are part of the output format
WVOLUME_COLUMNS = ("r", "W_direct", "W_alternate", "scaling_residual", "lemma33_residual")
BOUND_COLUMNS = ("t", "F", "G_K", "G")


def _range(lo: float, hi: float, step: float) -> np.ndarray:
    if step <= 0:
        raise GeometryError("step must be positive")
    if lo > hi:
        return np.array([])
    n = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return lo + step * np.arange(n)


def wvolume_table(r_min: float = 0.5, r_max: float = 2.0, r_step: float = 0.5, offset: float = 0.5) -> list:
    """Rows (r, W, W_alt, scaling residual, mean-curvature residual) for balls, all by quadrature."""
    rows = []
    for r in _range(r_min, r_max, r_step):
        ball = ConvexRevolutionBody.ball(float(r))
        direct = w_volume(ball, closed_form=False)
        scaled = w_volume(ball.neighborhood(offset), closed_form=False)
        rows.append((float(r), direct, w_volume_alternate(ball, closed_form=False),
                     abs(scaled - direct + 2 * math.pi * offset),
                     mean_curvature_identity_residual(ball, closed_form=False).residual))
    return rows


def bound_table(t_min: float = 1e-3, t_max: float = 1.0, count: int = 25, K: float = 1.5) -> list:
    """Rows (t, F(t), G_K(t), G(t)) at log-spaced t."""
    if count <= 0 or t_min > t_max:
        return []
    ts = np.logspace(math.log10(t_min), math.log10(t_max), count) if count > 1 else np.array([t_min])
    return [(float(t), B.thick_part_excess(t), B.l2_bending_factor(t, K), B.l2_volume_defect(t)) for t in ts]


def _csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([repr(float(v)) for v in row])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="epstein-kit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--config", help="key = value tolerance file")
    v.add_argument("--out", help="also write the report here and a JSON summary next to it")

    m = sub.add_parser("mesh", help="write an OBJ mesh")
    m.add_argument("target", choices=["epstein", "dome", "flow"])
    m.add_argument("--out", required=True)
    m.add_argument("--map", default="koebe", help="catalogue map (epstein, flow)")
    m.add_argument("--metric", default="hyperbolic")
    m.add_argument("--s", type=float, default=0.0, help="flow time of the epstein surface")
    m.add_argument("--levels", type=int, default=24)
    m.add_argument("--angles", type=int, default=48)
    m.add_argument("--radius", type=float, default=2.5, help="hyperbolic radius of the source grid")
    m.add_argument("--steps", type=int, default=5)
    m.add_argument("--dt", type=float, default=0.5)
    m.add_argument("--domain", default="two-disks", help="disk, slit-plane or two-disks (dome)")
    m.add_argument("--a", type=float, default=0.5, help="center offset of the two-disk union")
    m.add_argument("--resolution", type=int, default=32)

    r = sub.add_parser("report", help="write a CSV table")
    r.add_argument("target", choices=["wvolume-table", "bound-table"])
    r.add_argument("--out", required=True)
    r.add_argument("--r-min", type=float, default=0.5)
    r.add_argument("--r-max", type=float, default=2.0)
    r.add_argument("--r-step", type=float, default=0.5)
    r.add_argument("--offset", type=float, default=0.5, help="neighborhood distance for the scaling residual")
    r.add_argument("--t-min", type=float, default=1e-3)
    r.add_argument("--t-max", type=float, default=1.0)
    r.add_argument("--count", type=int, default=25)
    r.add_argument("--K", type=float, default=1.5)
    return p


def _cmd_verify(args) -> int:
    cfg = load_config(args.config)
    reports = run_verify(args.suite, args.seed, cfg)
    text, summary = render(reports)
    sys.stdout.write(text)
    if args.out:
        out = Path(args.out)
        out.write_text(text)
        out.with_name(out.name + ".json").write_text(summary)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_mesh(args) -> int:
    out = Path(args.out)
    if args.target == "epstein":
        mesh = epstein_mesh(args.map, args.metric, args.s, args.levels, args.angles, args.radius)
        write_obj(mesh, out, f"epstein surface of {args.map}, {args.metric} metric, s = {args.s}")
        written = [out]
    elif args.target == "dome":
        params = {"a": args.a} if args.domain in ("two-disks", "two-disk-union") else {}
        mesh = dome_mesh(domain_from_name(args.domain, **params), args.resolution)
        write_obj(mesh, out, f"dome of the {args.domain}")
        written = [out]
    else:
        meshes = flow_meshes(args.map, args.steps, args.dt, metric=args.metric, levels=args.levels,
                             angles=args.angles, radius=args.radius)
        written = []
        for k, mesh in enumerate(meshes):
            path = out.with_name(f"{out.stem}_{k:03d}{out.suffix or '.obj'}")
            write_obj(mesh, path, f"epstein surface of {args.map} flowed by s = {k * args.dt}")
            written.append(path)
    for path in written:
        print(path)
    return 0


def _cmd_report(args) -> int:
    if args.target == "wvolume-table":
        text = _csv(WVOLUME_COLUMNS, wvolume_table(args.r_min, args.r_max, args.r_step, args.offset))
    else:
        text = _csv(BOUND_COLUMNS, bound_table(args.t_min, args.t_max, args.count, args.K))
    Path(args.out).write_text(text)
    print(args.out)
    return 0


_COMMANDS = {"verify": _cmd_verify, "mesh": _cmd_mesh, "report": _cmd_report}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, GeometryError) as exc:
        print(f"epstein-kit: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"epstein-kit: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
