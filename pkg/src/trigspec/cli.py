"""Command line front end.

Subcommands: gen-signal, dft, spline, response, alias, bounds. All
output is deterministic CSV/JSON (17 significant digits, LF endings, '.'
decimal point); identical invocations produce byte-identical files.

Exit codes: 0 success, 1 a bound or identity check failed, 2 invalid
configuration or input, 3 numerical failure (degenerate kernel,
quadrature non-convergence, unreachable series precision).
"""

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import alias_analysis, filon_oracle, signal_model, spline_kernel, trig_spline
from .errors import NumericalError
from .sampling import discrete_coeffs, make_grid, sample, spectrum_to_csv
from .spline_kernel import FilterVariant, KernelConfig

_FOLD_CHECK_TOL = 1e-10


class _ConfigError(ValueError):
    """Invalid CLI configuration or input document."""


def _presets():
    presets = dict(signal_model.suite_signals())
    presets["constant"] = signal_model.harmonic_sum([(0, 2.0, 0.0)], r=1)
    return presets


def _load_signal(args):
    if getattr(args, "signal", None):
        try:
            with open(args.signal, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise _ConfigError(f"cannot read signal spec: {exc}") from exc
    elif getattr(args, "inline", None):
        try:
            doc = json.loads(args.inline)
        except json.JSONDecodeError as exc:
            raise _ConfigError(f"bad inline JSON: {exc}") from exc
    else:
        raise _ConfigError("a signal is required (--signal PATH or --inline JSON)")
    try:
        return signal_model.signal_from_json(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise _ConfigError(f"bad signal document: {exc}") from exc


def _write_text(path, text):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _fmt(x):
    return format(x, ".17g")


def _parse_variant(text):
    try:
        return FilterVariant.from_string(text)
    except ValueError as exc:
        raise _ConfigError(str(exc)) from exc


def _kernel_config(args, grid):
    if args.r < 1:
        raise _ConfigError("--r must be >= 1")
    if args.tail_tol <= 0:
        raise _ConfigError("--tail-tol must be positive")
    return KernelConfig(
        grid=grid,
        order=args.r,
        variant=_parse_variant(args.variant),
        tail_tol=args.tail_tol,
    )


# -- subcommands -------------------------------------------------------------


def cmd_gen_signal(args):
    presets = _presets()
    if args.preset:
        if args.preset not in presets:
            raise _ConfigError(
                f"unknown preset {args.preset!r}; available: "
                + ", ".join(sorted(presets))
            )
        sig = presets[args.preset]
    elif args.inline:
        sig = _load_signal(args)
    else:
        raise _ConfigError("gen-signal needs --preset NAME or --inline JSON")
    doc = signal_model.signal_to_json(sig)
    _write_text(args.out, json.dumps(doc, sort_keys=True) + "\n")
    return 0


def cmd_dft(args):
    sig = _load_signal(args)
    if args.n < 1:
        raise _ConfigError("--n must be >= 1")
    grid = make_grid(args.n)
    spec = discrete_coeffs(sample(sig, grid))
    if args.format == "json":
        doc = {
            "N": grid.N,
            "a0": spec.a0,
            "a": list(map(float, spec.a)),
            "b": list(map(float, spec.b)),
        }
        _write_text(args.out, json.dumps(doc, sort_keys=True) + "\n")
    else:
        _write_text(args.out, spectrum_to_csv(spec))
    return 0


def cmd_spline(args):
    sig = _load_signal(args)
    if args.n < 1:
        raise _ConfigError("--n must be >= 1")
    if args.out is None:
        raise _ConfigError("spline needs --out STEM for its output files")
    grid = make_grid(args.n)
    config = _kernel_config(args, grid)
    spline = trig_spline.build_spline(sample(sig, grid), config)
    _write_text(
        args.out + ".spline.json",
        json.dumps(trig_spline.spline_to_json(spline), sort_keys=True) + "\n",
    )
    j_max = args.j_max if args.j_max else 4 * grid.N
    rows = trig_spline.unfolded_table(spline, j_max, signal=sig)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["j", "a_hat", "b_hat", "a_true", "b_true", "abs_err_a", "abs_err_b"])
    for r in rows:
        w.writerow(
            [r["j"]]
            + [
                _fmt(r[c])
                for c in ("a_hat", "b_hat", "a_true", "b_true", "abs_err_a", "abs_err_b")
            ]
        )
    _write_text(args.out + ".unfolded.csv", buf.getvalue())
    if args.eval_grid:
        P = args.eval_grid
        if P < 1:
            raise _ConfigError("--eval-grid must be positive")
        t = 2.0 * np.pi * np.arange(P) / P
        sv = trig_spline.values_on_uniform_grid(spline, P)
        fv = np.atleast_1d(signal_model.evaluate(sig, t))
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "spline", "signal", "abs_err"])
        for g in range(P):
            w.writerow([_fmt(t[g]), _fmt(sv[g]), _fmt(fv[g]), _fmt(abs(sv[g] - fv[g]))])
        _write_text(args.out + ".eval.csv", buf.getvalue())
    return 0


def cmd_response(args):
    if args.n < 1:
        raise _ConfigError("--n must be >= 1")
    grid = make_grid(args.n)
    try:
        orders = [int(x) for x in str(args.r).split(",") if x != ""]
    except ValueError as exc:
        raise _ConfigError(f"bad --r list: {exc}") from exc
    if not orders or any(r < 1 for r in orders):
        raise _ConfigError("--r must list integers >= 1")
    j_max = args.j_max if args.j_max else 2 * grid.N
    if j_max < grid.n:
        raise _ConfigError("--j-max must cover the band (>= n)")
    if args.out is None:
        raise _ConfigError("response needs --out STEM for its output files")
    for r in orders:
        config = KernelConfig(
            grid=grid,
            order=r,
            variant=_parse_variant(args.variant),
            tail_tol=args.tail_tol,
        )
        table = spline_kernel.filter_response(config, j_max)
        _write_text(
            f"{args.out}.r{r}.csv", spline_kernel.response_table_to_csv(table)
        )
    return 0


def cmd_alias(args):
    sig = _load_signal(args)
    if args.n < 1:
        raise _ConfigError("--n must be >= 1")
    grid = make_grid(args.n)
    rows = alias_analysis.fold_report_table(sig, grid, args.tail_tol)
    _write_text(args.out, alias_analysis.fold_table_to_csv(rows))
    worst = max(max(r["abs_diff_a"], r["abs_diff_b"]) for r in rows)
    return 1 if worst > _FOLD_CHECK_TOL else 0


def cmd_bounds(args):
    sig = _load_signal(args)
    if args.n < 1:
        raise _ConfigError("--n must be >= 1")
    grid = make_grid(args.n)
    rows = _bound_rows(sig, grid, args)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "measured", "bound", "holds"])
    ok = True
    for k, measured, bound in rows:
        holds = measured <= bound
        ok = ok and holds
        w.writerow([k, _fmt(measured), _fmt(bound), str(holds).lower()])
    _write_text(args.out, buf.getvalue())
    return 0 if ok else 1


def _bound_rows(sig, grid, args):
    family = args.family
    if family == "eq3":
        k_max = args.j_max if args.j_max else 64
        rows = []
        for k in range(1, k_max + 1):
            a, b = signal_model.true_coefficient(sig, k)
            bound = signal_model.coefficient_bound(sig.smoothness, k)
            rows.append((k, max(abs(a), abs(b)), bound))
        return rows
    if family == "eq8":
        spec = discrete_coeffs(sample(sig, grid))
        rows = []
        for k in range(1, grid.n + 1):
            ta, tb = signal_model.true_coefficient(sig, k)
            measured = max(abs(ta - spec.a[k - 1]), abs(tb - spec.b[k - 1]))
            bound = alias_analysis.aliasing_error_bound(
                k, grid, sig.smoothness, args.tail_tol
            )
            rows.append((k, measured, bound))
        return rows
    if family == "eq9":
        if sig.smoothness.r < 1:
            raise _ConfigError("eq9 bound needs smoothness order r >= 1")
        spec = discrete_coeffs(sample(sig, grid))
        t = 2.0 * np.pi * np.arange(4096) / 4096
        fn = np.atleast_1d(alias_analysis.band_component(sig, grid.n, t))
        fstar = spec.reconstruct(t)
        measured = float(np.max(np.abs(fn - fstar)))
        bound = alias_analysis.time_domain_overlay_bound(grid.n, sig.smoothness)
        return [(grid.n, measured, bound)]
    if family == "filon":
        config = _kernel_config(args, grid)
        spline = trig_spline.build_spline(sample(sig, grid), config)
        k_max = args.j_max if args.j_max else 2 * grid.N
        table = filon_oracle.filon_table(sig, spline, k_max)
        return [
            (
                r["k"],
                max(abs(r["a_true"] - r["a_hat"]), abs(r["b_true"] - r["b_hat"])),
                min(r["cnorm_bound"], r["refined_bound"]),
            )
            for r in table
        ]
    raise _ConfigError(f"unknown bound family {family!r}")


# -- parser ------------------------------------------------------------------


def _add_signal_args(p):
    p.add_argument("--signal", help="path to a signal spec JSON")
    p.add_argument("--inline", help="signal spec JSON given inline")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="trigspec",
        description="Trigonometric-spline spectral analysis toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-signal", help="write a signal spec JSON")
    p.add_argument("--preset", help="named preset signal")
    _add_signal_args(p)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(handler=cmd_gen_signal)

    p = sub.add_parser("dft", help="discrete Fourier coefficients of a sampled signal")
    _add_signal_args(p)
    p.add_argument("--n", type=int, required=True, help="band size; N = 2n+1 nodes")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(handler=cmd_dft)

    p = sub.add_parser("spline", help="build the interpolating spline")
    _add_signal_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=3, help="spline order")
    p.add_argument("--variant", default="abs-sinc", help="sinc|abs-sinc|inv-power")
    p.add_argument("--tail-tol", type=float, default=1e-12)
    p.add_argument("--j-max", type=int, default=0, help="unfolded table size (default 4N)")
    p.add_argument("--eval-grid", type=int, default=0, help="dense evaluation CSV size")
    p.add_argument("--out", help="output stem (writes STEM.spline.json etc.)")
    p.set_defaults(handler=cmd_spline)

    p = sub.add_parser("response", help="filter gain tables (plot data)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", default="1,3,10", help="comma list of orders")
    p.add_argument("--variant", default="abs-sinc")
    p.add_argument("--tail-tol", type=float, default=1e-12)
    p.add_argument("--j-max", type=int, default=0, help="table size (default 2N)")
    p.add_argument("--out", help="output stem (writes STEM.r{r}.csv)")
    p.set_defaults(handler=cmd_response)

    p = sub.add_parser("alias", help="fold-identity report")
    _add_signal_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tail-tol", type=float, default=1e-12)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(handler=cmd_alias)

    p = sub.add_parser("bounds", help="bound-verification table")
    _add_signal_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--family", choices=("eq3", "eq8", "eq9", "filon"), default="eq3",
        help="which bound family to verify",
    )
    p.add_argument("--r", type=int, default=3, help="spline order (filon family)")
    p.add_argument("--variant", default="abs-sinc")
    p.add_argument("--tail-tol", type=float, default=1e-12)
    p.add_argument("--j-max", type=int, default=0, help="row count override")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(handler=cmd_bounds)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _ConfigError as exc:
        print(f"trigspec: error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"trigspec: numerical failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"trigspec: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
