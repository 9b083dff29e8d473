"""Command-line surface for the library.

Subcommands: ``bounds``, ``dual``, ``approx-mult``, ``hs-inner``, ``gabor``,
``gabor-experiment``, ``reproduce-paper``.  All matrix files use the shared
CSV format (see :mod:`framehs.matio`); heatmaps are written as binary PGM
with a PNG figure rendered alongside.  Exit codes: 0 success, 2 usage or
input error, 3 numerical failure, 4 failed verification checks.  The
environment variable ``FRAMEHS_PINV_TOL`` overrides the default
pseudoinverse truncation tolerance wherever one is used.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import gabor, reference
from .frames import Frame, canonical_dual, frame_bounds, is_tight
from .hs import HsMethod, hs_inner_table, op_count_formula
from .matio import MatrixFileError, format_entry, load_matrix, save_matrix, save_vector
from .multiplier import best_multiplier_approx
from .reporting import RunReport, save_heatmap_figure, save_panel_figure, write_pgm

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3
EXIT_CHECKS_FAILED = 4


def _env_pinv_tol() -> float | None:
    raw = os.environ.get("FRAMEHS_PINV_TOL")
    if raw is None or raw == "":
        return None
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"FRAMEHS_PINV_TOL must be a float, got {raw!r}") from None


def _resolve_pinv_tol(flag_value: float | None) -> float | None:
    return flag_value if flag_value is not None else _env_pinv_tol()


def _load_frame(path) -> Frame:
    return Frame(load_matrix(path))


def _print_bounds(label: str, frame: Frame) -> dict:
    b = frame_bounds(frame)
    tight = is_tight(frame)
    span = "frame for the whole space" if b.is_frame else "frame sequence (Bessel bound only on the full space)"
    print(f"{label}: d={b.dim} K={b.count}")
    print(f"  A = {b.lower!r}")
    print(f"  B = {b.upper!r}")
    print(f"  rank = {b.rank} of {b.dim} ({span})")
    print(f"  tight = {'yes' if tight else 'no'}")
    return {"A": b.lower, "B": b.upper, "rank": b.rank, "dim": b.dim,
            "count": b.count, "tight": tight}


def cmd_bounds(args) -> RunReport:
    frame = _load_frame(args.frame)
    metrics = _print_bounds("frame", frame)
    return RunReport(command="bounds", inputs={"frame": str(args.frame)}, metrics=metrics)


def cmd_dual(args) -> RunReport:
    frame = _load_frame(args.frame)
    dual = canonical_dual(frame, _resolve_pinv_tol(args.pinv_tol))
    save_matrix(args.out, dual.synthesis)
    metrics = _print_bounds("canonical dual", dual)
    print(f"wrote {args.out}")
    return RunReport(
        command="dual",
        inputs={"frame": str(args.frame)},
        outputs={"dual": str(args.out)},
        metrics=metrics,
    )


def cmd_approx_mult(args) -> RunReport:
    T = load_matrix(args.target)
    gframe = _load_frame(args.frame)
    fframe = _load_frame(args.frame2) if args.frame2 else None
    fit = best_multiplier_approx(T, gframe, fframe, _resolve_pinv_tol(args.pinv_tol))
    save_vector(args.out_symbol, fit.upper_symbol)
    save_matrix(args.out_approx, fit.approximant)
    metrics = {"residual_fro": fit.residual_fro}
    print(f"residual_fro = {fit.residual_fro!r}")
    metrics["analysis_frame"] = _print_bounds("analysis frame", gframe)
    if fframe is not None:
        metrics["synthesis_frame"] = _print_bounds("synthesis frame", fframe)
    else:
        print("synthesis frame = analysis frame (same-frame Gram path)")
    print(f"wrote {args.out_symbol}, {args.out_approx}")
    return RunReport(
        command="approx-mult",
        inputs={
            "target": str(args.target),
            "frame": str(args.frame),
            "frame2": str(args.frame2) if args.frame2 else None,
            "pinv_tol": args.pinv_tol,
        },
        outputs={"symbol": str(args.out_symbol), "approximant": str(args.out_approx)},
        metrics=metrics,
    )


_METHOD_BY_FLAG = {
    "1": HsMethod.VEC_PAIR,
    "2": HsMethod.DIRECT,
    "3": HsMethod.ALL_PAIRS,
    "4": HsMethod.KRON,
}


def _formula_total(method: HsMethod, m, n, K, L) -> int:
    per_pair = method in (HsMethod.VEC_PAIR, HsMethod.DIRECT)
    one = op_count_formula(method, m, n, K, L)
    return one * K * L if per_pair else one


def cmd_hs_inner(args) -> RunReport:
    T = load_matrix(args.target)
    G = _load_frame(args.frame)
    H = _load_frame(args.frame2) if args.frame2 else G
    m, n = T.shape
    K, L = G.count, H.count
    methods = list(_METHOD_BY_FLAG.values()) if args.method == "all" else [_METHOD_BY_FLAG[args.method]]
    metrics = {"m": m, "n": n, "K": K, "L": L}
    reference_table = None
    for method in methods:
        rep = hs_inner_table(T, G, H, method=method)
        table, ops = rep.value, rep.ops
        formula = _formula_total(method, m, n, K, L)
        print(f"method {method.value}: ops = {ops} (formula {formula})")
        if reference_table is None:
            reference_table = table
            for row in table:
                print("  " + "  ".join(format_entry(z) for z in row))
        else:
            dev = float(np.max(np.abs(table - reference_table)))
            print(f"  max deviation from first table: {dev!r}")
        metrics[f"ops_{method.value}"] = ops
        metrics[f"formula_{method.value}"] = formula
    if args.method == "all":
        f3 = _formula_total(HsMethod.ALL_PAIRS, m, n, K, L)
        f4 = _formula_total(HsMethod.KRON, m, n, K, L)
        cheaper = "all-pairs" if f3 <= f4 else "kron"
        print(f"full-table costs: all-pairs {f3} vs kron {f4}; {cheaper} is cheaper "
              "(the sandwich wins except for extreme aspect ratios)")
    return RunReport(
        command="hs-inner",
        inputs={"target": str(args.target), "frame": str(args.frame),
                "frame2": str(args.frame2) if args.frame2 else None,
                "method": args.method},
        metrics=metrics,
    )


def cmd_gabor(args) -> RunReport:
    system = gabor.gabor_frame(gabor.gauss_window(args.n), args.a, args.b)
    print(f"gabor system: n={args.n} a={args.a} b={args.b} "
          f"K={system.frame.count} redundancy={float(system.frame.count / args.n)!r}")
    metrics = _print_bounds("gabor frame", system.frame)
    outputs = {}
    if args.export:
        save_matrix(args.export, system.frame.synthesis)
        outputs["frame"] = str(args.export)
        print(f"wrote {args.export}")
    return RunReport(
        command="gabor",
        inputs={"n": args.n, "a": args.a, "b": args.b},
        outputs=outputs,
        metrics=metrics,
    )


def cmd_gabor_experiment(args) -> RunReport:
    result = gabor.gabor_identity_experiment(
        args.n, args.a, args.b, _resolve_pinv_tol(args.pinv_tol)
    )
    heatmap = Path(args.out_heatmap)
    csv_path = Path(args.out_csv) if args.out_csv else heatmap.with_suffix(".csv")
    fig_path = Path(args.out_figure) if args.out_figure else heatmap.with_suffix(".png")
    write_pgm(heatmap, result.approximant)
    save_matrix(csv_path, result.approximant)
    save_heatmap_figure(
        fig_path, result.approximant,
        title=f"|identity fit|, n={args.n}, a={args.a}, b={args.b}",
    )
    b = result.bounds
    rel = float(result.residual_fro / np.sqrt(args.n))
    print(f"gabor experiment: n={args.n} a={args.a} b={args.b} K={result.system.frame.count}")
    print(f"  residual_fro = {result.residual_fro!r} (relative {rel!r})")
    print(f"  A = {b.lower!r}  B = {b.upper!r}  rank = {b.rank} of {b.dim}")
    print(f"wrote {heatmap}, {csv_path}, {fig_path}")
    return RunReport(
        command="gabor-experiment",
        inputs={"n": args.n, "a": args.a, "b": args.b, "pinv_tol": args.pinv_tol},
        outputs={"heatmap": str(heatmap), "csv": str(csv_path), "figure": str(fig_path)},
        metrics={"residual_fro": result.residual_fro, "A": b.lower, "B": b.upper,
                 "rank": b.rank},
    )


def cmd_reproduce_paper(args) -> RunReport:
    results = reference.run_all_checks()
    for r in results:
        print(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
    failed = [r for r in results if not r.passed]
    outputs = {}
    if args.out_dir:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        panels = []
        for (a, b) in reference.GABOR_BOUNDS:
            result = gabor.gabor_identity_experiment(reference.GABOR_N, a, b)
            stem = out_dir / f"identity_fit_n{reference.GABOR_N}_a{a}_b{b}"
            save_matrix(stem.with_suffix(".csv"), result.approximant)
            write_pgm(stem.with_suffix(".pgm"), result.approximant)
            outputs[f"a{a}_b{b}"] = str(stem.with_suffix(".csv"))
            panels.append((f"a={a}, b={b}", result.approximant))
        fig_path = out_dir / "identity_fit_panels.png"
        save_panel_figure(fig_path, panels)
        outputs["figure"] = str(fig_path)
        print(f"wrote experiment files under {out_dir}")
    if failed:
        print(f"{len(failed)} of {len(results)} checks FAILED")
    else:
        print(f"all {len(results)} checks passed")
    report = RunReport(
        command="reproduce-paper",
        outputs=outputs,
        metrics={r.name: r.passed for r in results},
    )
    if failed:
        raise ChecksFailed(report)
    return report


class ChecksFailed(Exception):
    def __init__(self, report: RunReport):
        super().__init__("verification checks failed")
        self.report = report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framehs",
        description="Finite frames, Hilbert-Schmidt inner products, frame multipliers.",
    )
    parser.add_argument("--json", action="store_true",
                        help="also print a JSON run report")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("bounds", help="sharp frame bounds of a frame file")
    p.add_argument("--frame", required=True, help="CSV synthesis matrix (columns = elements)")
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("dual", help="write the canonical dual frame")
    p.add_argument("--frame", required=True)
    p.add_argument("--out", required=True, help="output CSV for the dual synthesis matrix")
    p.add_argument("--pinv-tol", type=float, default=None)
    p.set_defaults(fn=cmd_dual)

    p = sub.add_parser("approx-mult",
                       help="best multiplier approximation of a target matrix")
    p.add_argument("--target", required=True, help="CSV target matrix (m x n)")
    p.add_argument("--frame", required=True,
                   help="analysis frame in C^n (CSV synthesis matrix)")
    p.add_argument("--frame2", default=None,
                   help="synthesis frame in C^m; defaults to --frame")
    p.add_argument("--pinv-tol", type=float, default=None,
                   help="relative truncation tolerance for the Gram pseudoinverse")
    p.add_argument("--out-symbol", required=True, help="output CSV for the symbol")
    p.add_argument("--out-approx", required=True, help="output CSV for the approximant")
    p.set_defaults(fn=cmd_approx_mult)

    p = sub.add_parser("hs-inner",
                       help="coefficients of a matrix against rank-one frame pairs")
    p.add_argument("--target", required=True, help="CSV target matrix (m x n)")
    p.add_argument("--frame", required=True, help="left frame in C^m")
    p.add_argument("--frame2", default=None, help="right frame in C^n; defaults to --frame")
    p.add_argument("--method", choices=["1", "2", "3", "4", "all"], default="all",
                   help="1 vec-pair, 2 direct, 3 all-pairs sandwich, 4 kron route")
    p.set_defaults(fn=cmd_hs_inner)

    p = sub.add_parser("gabor", help="build a Gabor frame and print its bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--export", default=None, help="optional CSV export of the synthesis matrix")
    p.set_defaults(fn=cmd_gabor)

    p = sub.add_parser("gabor-experiment",
                       help="approximate the identity by a Gabor multiplier")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--out-heatmap", required=True, help="output PGM (P5) heatmap")
    p.add_argument("--out-csv", default=None, help="output CSV (default: heatmap with .csv)")
    p.add_argument("--out-figure", default=None, help="output PNG (default: heatmap with .png)")
    p.add_argument("--pinv-tol", type=float, default=None)
    p.set_defaults(fn=cmd_gabor_experiment)

    p = sub.add_parser("reproduce-paper",
                       help="run the bundled reference checks against their documented values")
    p.add_argument("--out-dir", default=None,
                   help="also write the lattice experiment matrices and figure here")
    p.set_defaults(fn=cmd_reproduce_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        report = args.fn(args)
    except MatrixFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except np.linalg.LinAlgError as exc:
        # LinAlgError subclasses ValueError, so it must be caught first
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ChecksFailed as exc:
        exc.report.wall_time_ms = (time.perf_counter() - t0) * 1000.0
        print(exc.report.to_json() if args.json else
              f"wall_time_ms: {exc.report.wall_time_ms}")
        return EXIT_CHECKS_FAILED
    report.wall_time_ms = (time.perf_counter() - t0) * 1000.0
    if args.json:
        print(report.to_json())
    else:
        print(f"wall_time_ms: {report.wall_time_ms}")
    return EXIT_OK


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
