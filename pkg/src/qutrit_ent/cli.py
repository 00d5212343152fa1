"""Command line front end.

Exit codes: 0 success, 1 I/O or parse failure, 2 validation failure,
3 domain error.
"""

import argparse
import sys
from pathlib import Path

from . import bases, density, families, matrixio
from .entropy import Route, subadditivity_report
from .errors import DeviationError, DimensionMismatch, DomainError, MatrixFileError, SingletDominant
from .measures import entanglement_report

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_DOMAIN = 0, 1, 2, 3

FIG1_GRID = (-1.0, 0.5, 301)
FIG23_P_POINTS = 201  # open interval: endpoints dropped


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def _grid(text):
    try:
        lo, hi, count = text.split(":")
        return float(lo), float(hi), int(count)
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be min:max:count, got {text!r}") from None


def _floats(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser():
    parser = _Parser(prog="qutrit-ent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def tol_flags(p):
        p.add_argument("--tol-psd", type=float, default=density.TOL_PSD)
        p.add_argument("--tol-trace", type=float, default=density.TOL_TRACE)

    p = sub.add_parser("validate", help="check density-matrix properties of a matrix file")
    p.add_argument("--in", dest="inp", required=True)
    tol_flags(p)

    p = sub.add_parser("analyze", help="entropies, negativity and concurrence of a state")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--route", choices=[r.value for r in Route])
    p.add_argument("--out", help="also write the results as a one-row CSV")
    tol_flags(p)

    p = sub.add_parser("sweep", help="parameter sweep over a qutrit family, as CSV")
    p.add_argument("--family", choices=["eq16", "eq22"], required=True)
    p.add_argument("--grid", type=_grid, action="append", default=[], help="min:max:count; eq22 takes p then b")
    p.add_argument("--b-values", type=_floats, help="explicit b values (eq22 b axis)")
    p.add_argument("--out")

    p = sub.add_parser("figure", help="plot data for the three figures")
    p.add_argument("name", choices=["fig1", "fig2", "fig3"])
    p.add_argument("--b-values", type=_floats, help="b values for fig2/fig3 (required there)")
    p.add_argument("--grid", type=_grid, action="append", default=[], help="override the x-axis grid")
    p.add_argument("--out")

    p = sub.add_parser("basis", help="convert a 4x4 matrix between the e and g bases")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.add_argument("--to", choices=["g", "e"], default="g")
    p.add_argument("--truncate", action="store_true", help="drop the singlet row/column (g basis output)")
    p.add_argument("--renormalize", action=argparse.BooleanOptionalAction, default=True, help="rescale by 1 - singlet_weight (default on)")

    p = sub.add_parser("random", help="write seeded random density matrices")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output directory")
    return parser


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    m = matrixio.read_matrix(args.inp)
    report = density.validation_report(m)
    limits = {"hermiticity": 1e-12, "trace": args.tol_trace, "positivity": args.tol_psd}
    ok = m.shape[0] >= 2
    for key, dev in report.items():
        good = dev <= limits[key]
        ok &= good
        print(f"{key}={dev:.3e} {'ok' if good else 'VIOLATED'}")
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_analyze(args):
    m = matrixio.read_matrix(args.inp)
    state = density.validate(m, tol_trace=args.tol_trace, tol_psd=args.tol_psd)
    if state.dim == 3:
        route = Route(args.route or Route.PADDED_QUTRIT.value)
        if route is not Route.PADDED_QUTRIT:
            raise UsageError("3x3 input supports only --route padded-qutrit")
    elif state.dim == 4:
        route = Route(args.route or Route.TWO_QUBIT.value)
        if route is Route.PADDED_QUTRIT:
            raise UsageError("4x4 input supports --route two-qubit or padded-6x6")
    else:
        raise DimensionMismatch(f"analyze needs a 3x3 or 4x4 state, got {state.dim}x{state.dim}")

    ent = subadditivity_report(state, route)
    rep = entanglement_report(state)
    values = {
        "route": route.value,
        "s1": ent.s1,
        "s2": ent.s2,
        "s12": ent.s12,
        "iq": ent.iq,
        "ppt_spectrum": ";".join(matrixio.fmt_real(x) for x in rep.ppt_spectrum),
        "negativity_sum": rep.negativity_sum,
        "negativity_excess": rep.negativity_excess,
        "entangled_by_ppt": "true" if rep.entangled_by_ppt else "false",
        "concurrence": rep.concurrence,
        "lambda_c": ";".join(matrixio.fmt_real(x) for x in rep.lambda_c),
    }
    lines = []
    for key, v in values.items():
        lines.append(f"{key}={v if isinstance(v, str) else matrixio.fmt_real(v)}")
    print("\n".join(lines))
    if args.out:
        cols = tuple(values)
        _emit(
            ",".join(cols) + "\n" + ",".join(v if isinstance(v, str) else matrixio.fmt_real(v) for v in values.values()) + "\n",
            args.out,
        )
    return EXIT_OK


def _axis(spec):
    return families.grid_axis(*spec)


def cmd_sweep(args):
    if args.family == "eq16":
        if len(args.grid) != 1:
            raise UsageError("eq16 sweep needs exactly one --grid (b axis)")
        rows = families.sweep_eq16(_axis(args.grid[0]))
    else:
        if args.b_values is not None:
            if len(args.grid) != 1:
                raise UsageError("eq22 sweep with --b-values needs one --grid (p axis)")
            grids = (_axis(args.grid[0]), args.b_values)
        elif len(args.grid) == 2:
            grids = (_axis(args.grid[0]), _axis(args.grid[1]))
        else:
            raise UsageError("eq22 sweep needs --grid for p and b, or --grid for p plus --b-values")
        rows = families.sweep_eq22(*grids)
    _emit(matrixio.format_csv(matrixio.sweep_rows_to_dicts(rows)), args.out)
    return EXIT_OK


def figure_rows(name, b_values=None, grid=None):
    if name == "fig1":
        return families.sweep_eq16(_axis(grid or FIG1_GRID))
    if not b_values:
        raise UsageError(f"{name} needs --b-values (the plotted b values are not fixed)")
    if grid:
        p_axis = _axis(grid)
    else:
        p_axis = families.grid_axis(0.0, 0.5, FIG23_P_POINTS)[1:-1]
    return families.sweep_eq22(p_axis, b_values, plot_box=True)


def cmd_figure(args):
    if len(args.grid) > 1:
        raise UsageError("figure takes at most one --grid")
    rows = figure_rows(args.name, args.b_values, args.grid[0] if args.grid else None)
    _emit(matrixio.format_csv(matrixio.sweep_rows_to_dicts(rows)), args.out)
    return EXIT_OK


def cmd_basis(args):
    m = matrixio.read_matrix(args.inp)
    if m.shape != (4, 4):
        raise DimensionMismatch(f"basis needs a 4x4 matrix, got {m.shape[0]}x{m.shape[0]}")
    if args.truncate:
        g = bases.to_g_basis(m) if args.to == "g" else density.DensityMatrix(m)
        out, weight = bases.symmetric_truncation(g, renormalize=args.renormalize)
        print(f"singlet_weight={matrixio.fmt_real(weight)}", file=sys.stderr if not args.out else sys.stdout)
    else:
        out = (bases.to_g_basis(m) if args.to == "g" else bases.to_e_basis(m)).mat
    _emit(matrixio.format_matrix(out), args.out)
    return EXIT_OK


def cmd_random(args):
    if args.count < 1:
        raise UsageError("--count must be positive")
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for i in range(args.count):
        rho = density.random_density(args.dim, args.seed + i)
        matrixio.write_matrix(outdir / f"rho_{i:04d}.txt", rho.mat)
    print(f"wrote {args.count} matrices to {outdir}")
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "sweep": cmd_sweep,
    "figure": cmd_figure,
    "basis": cmd_basis,
    "random": cmd_random,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (OSError, MatrixFileError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (DeviationError, DimensionMismatch) as exc:
        print(f"invalid state: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (DomainError, SingletDominant) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
