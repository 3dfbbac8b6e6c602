"""Command-line driver.

    trijacobi eval --family pi --n 2 --k 1 --a 1 --b 2 --c 3 --at 0.2,0.3
    trijacobi table --nmax 3 --a 1/2 --b 1/3 --c 0
    trijacobi verify algebra --seed 7
    trijacobi connection --n 4 --family pi --format csv
    trijacobi quadrature --npts 5 --a 0 --b 0 --c 0

Parameters written as ``p/q`` or integers are exact (``Fraction``); decimal
strings become floats. Exit codes: 0 success, 1 a verification check failed,
2 usage error.
"""

import argparse
from dataclasses import asdict, dataclass, field
from fractions import Fraction
import json
import sys

import numpy as np

from . import __version__
from .connection import connection_pi, connection_sigma, connection_sigma_from_pi
from .errors import TriJacobiError
from .quadrature import gauss_jacobi_01, triangle_rule
from .suites import SUITES, run_suite
from .triangle import D3, TriParams, family_norm, tri_family_eval

__all__ = ["RunConfig", "parse_scalar", "format_scalar", "build_parser", "main"]


class UsageError(Exception):
    """Bad command-line input; reported with exit code 2."""


@dataclass
class RunConfig:
    command: str
    suite: str = None
    params: tuple = None
    n: int = None
    k: int = None
    nmax: int = None
    N: int = None
    npts: int = None
    family: str = "e"
    points: list = field(default_factory=list)
    grid: int = None
    seed: int = 0
    tol: float = None
    format: str = "table"
    out: str = None
    triangle: bool = False

    def validate(self):
        if self.tol is not None and self.tol <= 0:
            raise UsageError("--tol must be positive")
        if self.command == "verify" and self.nmax is not None and self.N is not None:
            if self.suite in ("intertwine", "subalgebras", "hermiticity") and self.nmax > self.N:
                raise UsageError("--nmax must not exceed --N for lattice suites")

    def suite_config(self):
        return {"params": self.params, "nmax": self.nmax, "N": self.N, "tol": self.tol}

    def to_json(self):
        out = asdict(self)
        out["params"] = None if self.params is None else [format_scalar(v) for v in self.params]
        out["points"] = [[format_scalar(v) for v in pt] for pt in self.points]
        return out


# ---------------------------------------------------------------------------
# scalars


def parse_scalar(text):
    """``"3"`` and ``"2/7"`` give a ``Fraction``; ``"0.25"`` or ``"1e-3"`` give a float."""
    text = text.strip()
    try:
        if any(ch in text for ch in ".eE") and "/" not in text:
            return float(text)
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse number {text!r}") from exc


def format_scalar(value):
    """``p/q`` for rationals and 17 significant digits for floats."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def _parse_point(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--at expects x,y, got {text!r}")
    return tuple(parse_scalar(p) for p in parts)


# ---------------------------------------------------------------------------
# output


def _emit(text, cfg):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_rows(header, rows, fmt):
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"
    if fmt == "csv":
        lines = [",".join(header)] + [",".join(r) for r in rows]
        return "\n".join(lines) + "\n"
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def _require(cfg, *names):
    missing = [n for n in names if getattr(cfg, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + m for m in missing))


def _grid_points(m):
    return [
        (Fraction(i, m), Fraction(j, m)) for i in range(m + 1) for j in range(m + 1 - i)
    ]


def cmd_eval(cfg):
    _require(cfg, "n", "k")
    try:
        g = D3.from_name(cfg.family)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not 0 <= cfg.k <= cfg.n:
        raise UsageError("need 0 <= k <= n")
    points = list(cfg.points)
    if cfg.grid is not None:
        points += _grid_points(cfg.grid)
    if not points:
        raise UsageError("give --at x,y or --grid M")
    rows = []
    for x, y in points:
        value = tri_family_eval(g, cfg.n, cfg.k, cfg.params, x, y)
        rows.append([format_scalar(x), format_scalar(y), format_scalar(value)])
    return _render_rows(["x", "y", "value"], rows, cfg.format), 0


def cmd_table(cfg):
    nmax = cfg.nmax if cfg.nmax is not None else 3
    try:
        g = D3.from_name(cfg.family)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    header = ["n", "k", "norm"] + [f"J({format_scalar(x)},{format_scalar(y)})" for x, y in cfg.points]
    rows = []
    for n in range(nmax + 1):
        for k in range(n + 1):
            row = [str(n), str(k), format_scalar(family_norm(g, n, k, cfg.params))]
            row += [format_scalar(tri_family_eval(g, n, k, cfg.params, x, y)) for x, y in cfg.points]
            rows.append(row)
    return _render_rows(header, rows, cfg.format), 0


_CONNECTIONS = {
    "pi": connection_pi,
    "sigma": connection_sigma,
    "sigma-pi": connection_sigma_from_pi,
}


def cmd_connection(cfg):
    _require(cfg, "n")
    family = cfg.family if cfg.family != "e" else "pi"
    if family not in _CONNECTIONS:
        raise UsageError(f"--family for connection must be one of {sorted(_CONNECTIONS)}")
    p = tuple(float(v) for v in cfg.params)
    C = _CONNECTIONS[family](cfg.n, p).entries
    if cfg.format == "json":
        payload = {
            "n": cfg.n,
            "source": "pi" if family == "sigma-pi" else "e",
            "target": "sigma" if family.startswith("sigma") else "pi",
            "entries": [[float(v) for v in row] for row in C],
        }
        return json.dumps(payload, indent=2) + "\n", 0
    header = ["l\\m"] + [str(m) for m in range(cfg.n + 1)]
    rows = [[str(ell)] + [format_scalar(v) for v in C[ell]] for ell in range(cfg.n + 1)]
    fmt = "csv" if cfg.format == "csv" else "table"
    return _render_rows(header, rows, fmt), 0


def cmd_quadrature(cfg):
    npts = cfg.npts or cfg.n or 4
    a, b, c = cfg.params
    if cfg.triangle:
        rule = triangle_rule(npts, cfg.params)
        rows = [
            [format_scalar(x), format_scalar(y), format_scalar(w)]
            for (x, y), w in zip(rule.nodes, rule.weights)
        ]
        header = ["x", "y", "weight"]
    else:
        rule = gauss_jacobi_01(npts, a, b)
        rows = [[format_scalar(x), format_scalar(w)] for x, w in zip(rule.nodes, rule.weights)]
        header = ["x", "weight"]
    return _render_rows(header, rows, cfg.format), 0


def cmd_verify(cfg):
    names = list(SUITES) if cfg.suite == "all" else [cfg.suite]
    checks = []
    for name in names:
        for check in run_suite(name, cfg.suite_config(), cfg.seed):
            check = dict(check)
            check["id"] = f"{name}:{check['id']}"
            checks.append(check)
    checks.sort(key=lambda c: c["id"])
    status = 0 if all(c["passed"] for c in checks) else 1
    if cfg.format == "json":
        report = {"version": __version__, "config": cfg.to_json(), "checks": checks}
        return json.dumps(report, indent=2, sort_keys=True) + "\n", status
    rows = [
        [c["id"], "pass" if c["passed"] else "FAIL", format_scalar(c["residual"])]
        for c in checks
    ]
    return _render_rows(["id", "status", "residual"], rows, cfg.format), status


_COMMANDS = {
    "eval": cmd_eval,
    "table": cmd_table,
    "verify": cmd_verify,
    "connection": cmd_connection,
    "quadrature": cmd_quadrature,
}


# ---------------------------------------------------------------------------
# argument parsing


def build_parser():
    parser = argparse.ArgumentParser(
        prog="trijacobi",
        description="Jacobi polynomials on the triangle, Racah connection matrices and algebra checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", default=None, help="exponent of x (p/q for exact mode)")
    common.add_argument("--b", default=None, help="exponent of y")
    common.add_argument("--c", default=None, help="exponent of 1-x-y")
    common.add_argument("--n", type=int, default=None)
    common.add_argument("--k", type=int, default=None)
    common.add_argument("--nmax", type=int, default=None)
    common.add_argument("--N", type=int, default=None, help="lattice truncation degree")
    common.add_argument("--npts", type=int, default=None, help="quadrature points per direction")
    common.add_argument("--family", default="e", help="e, pi, sigma, tau, rot1, rot2")
    common.add_argument("--at", action="append", default=[], metavar="X,Y")
    common.add_argument("--grid", type=int, default=None, metavar="M", help="points (i/M, j/M)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--format", choices=("table", "csv", "json"), default=None)
    common.add_argument("--out", default=None)

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("eval", parents=[common], help="evaluate one family member")
    sub.add_parser("table", parents=[common], help="norms and values for n <= nmax")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    sub.add_parser("connection", parents=[common], help="dump a connection matrix")
    q = sub.add_parser("quadrature", parents=[common], help="print a quadrature rule")
    q.add_argument("--triangle", action="store_true", help="triangle rule instead of [0, 1]")
    return parser


def _config_from_args(args):
    values = [args.a, args.b, args.c]
    if all(v is None for v in values):
        params = None if args.command == "verify" else TriParams(0, 0, 0)
    else:
        params = TriParams(*(parse_scalar(v) if v is not None else Fraction(0) for v in values))
    fmt = args.format or ("json" if args.command == "verify" else "table")
    cfg = RunConfig(
        command=args.command,
        suite=getattr(args, "suite", None),
        params=params,
        n=args.n,
        k=args.k,
        nmax=args.nmax,
        N=args.N,
        npts=args.npts,
        family=args.family,
        points=[_parse_point(t) for t in args.at],
        grid=args.grid,
        seed=args.seed,
        tol=args.tol,
        format=fmt,
        out=args.out,
        triangle=getattr(args, "triangle", False),
    )
    cfg.validate()
    return cfg


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        text, status = _COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        parser.error(str(exc))
    except (TriJacobiError, ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"trijacobi: error: {exc}\n")
        return 2
    _emit(text, cfg)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
