"""Command-line harness: bound checking, figure data, stress sweeps.

Subcommands::

    check    evaluate selected bounds for one model over a time grid
    figure2  correlation-bound curves and ratio sweeps (fig2a-fig2d CSVs)
    figure3  pulse/step response curves with their bounds (fig3a, fig3b)
    stress   randomized sweep over many models; JSON violation tally
    response pulse or step response sweep for a single model

Exit codes are uniform: 0 all checked ratios within tolerance, 1 at
least one bound violated, 2 input or configuration error. All emitted
reals carry 17 significant digits (round-trip exact for float64), CSV
files start with ``# key: value`` metadata lines, and identical seeds
produce byte-identical output. ``CORRBOUND_THREADS`` caps worker
threads for the sweep commands.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import __version__
from .bounds import (
    BOUND_IDS,
    CSV_HEADER,
    GEODESIC_ATOL,
    RATIO_SLACK,
    BoundReport,
    _ratio,
    bound_derivative,
    bound_eta,
    bound_main,
    bound_multipoint,
    bound_onepoint,
    bound_tangent_tur,
    bound_zero_t,
    fmt17,
)
from .correlation import two_point
from .errors import CorrboundError
from .linear_response import bound_pulse, bound_step, pulse_shift, step_shift
from .markov import (
    RANDOM_MODEL_METADATA,
    ProbVector,
    RateMatrix,
    ScoreVector,
    load_model,
    make_rng,
    random_model,
    steady_state,
    validate_rate_matrix,
)

DEFAULT_CHI = 0.01
DEFAULT_BOUNDS = (
    "MAIN_EQ5",
    "ZERO_T_EQ6",
    "DERIV_EQ7",
    "ETA_EQ8",
    "TANGENT_S29",
    "MULTI_SIN_S40",
    "MULTI_ETA_S39",
    "ONEPOINT_SIN_S42",
    "ONEPOINT_ETA_S41",
    "ONEPOINT_ACTIVITY_S45",
)


def fig2_model() -> tuple[RateMatrix, ProbVector, ScoreVector, ScoreVector]:
    """Two-state chain with a single decay channel at unit rate."""
    W = validate_rate_matrix([[0.0, 1.0], [0.0, -1.0]])
    p0 = ProbVector(np.array([0.0, 1.0]))
    s = ScoreVector(np.array([-1.0, 1.0]))
    return W, p0, s, s


def fig3_model() -> tuple[RateMatrix, ScoreVector, ScoreVector]:
    """Symmetric two-state chain at unit rate (stationary at 1/2, 1/2)."""
    W = validate_rate_matrix([[0.0, 1.0], [1.0, 0.0]])
    s = ScoreVector(np.array([-1.0, 1.0]))
    return W, s, s


@dataclass(frozen=True)
class RunConfig:
    """Inputs for one `check` run."""

    t_grid: np.ndarray
    bounds: tuple = DEFAULT_BOUNDS
    model_path: str | None = None
    gen_states: int | None = None
    seed: int = 0
    cmax_mode: str = "standard"
    output_path: str | None = None
    output_format: str = "csv"
    chi: float = DEFAULT_CHI
    rhs_scale: float = 1.0  # self-test hook: scaled bound sides must fail

    def __post_init__(self):
        grid = np.asarray(self.t_grid, dtype=float)
        if grid.ndim != 1 or grid.size == 0:
            raise CorrboundError("time grid must be a non-empty 1-d array")
        if np.any(np.diff(grid) < 0.0) or grid[0] < 0.0:
            raise CorrboundError("time grid must be sorted and non-negative")
        if not self.bounds:
            raise CorrboundError("at least one bound must be selected")
        unknown = set(self.bounds) - set(BOUND_IDS)
        if unknown:
            raise CorrboundError(f"unknown bound ids: {sorted(unknown)}")
        object.__setattr__(self, "t_grid", grid)
        object.__setattr__(self, "bounds", tuple(self.bounds))


def _threads() -> int:
    raw = os.environ.get("CORRBOUND_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    workers = _threads()
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _json17(obj, indent: int = 0) -> str:
    """Deterministic JSON: sorted keys, floats at 17 significant digits."""
    pad = " " * indent
    if isinstance(obj, dict):
        items = ",\n".join(
            f"{pad}  {json.dumps(str(k))}: {_json17(v, indent + 2).lstrip()}"
            for k, v in sorted(obj.items())
        )
        return f"{pad}{{\n{items}\n{pad}}}" if obj else f"{pad}{{}}"
    if isinstance(obj, (list, tuple)):
        items = ",\n".join(_json17(v, indent + 2) for v in obj)
        return f"{pad}[\n{items}\n{pad}]" if len(obj) else f"{pad}[]"
    if isinstance(obj, bool):
        return pad + ("true" if obj else "false")
    if isinstance(obj, (int, np.integer)):
        return pad + str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return pad + fmt17(float(obj))
    if obj is None:
        return pad + "null"
    return pad + json.dumps(str(obj))


def _meta(**extra) -> dict:
    meta = {
        "artifact": f"corrbound {__version__}",
        "ratio_slack": fmt17(RATIO_SLACK),
        "geodesic_atol": fmt17(GEODESIC_ATOL),
    }
    meta.update({k: v for k, v in extra.items() if v is not None})
    return meta


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _csv_document(header: str, rows: list[str], meta: dict) -> str:
    lines = [f"# {k}: {v}" for k, v in meta.items()]
    lines.append(header)
    lines.extend(rows)
    return "\n".join(lines) + "\n"


def evaluate_bounds(
    W: RateMatrix,
    p0: ProbVector,
    S: ScoreVector,
    T: ScoreVector,
    t_grid: np.ndarray,
    bound_ids,
    mode: str = "standard",
    chi: float = DEFAULT_CHI,
) -> list[BoundReport]:
    """Evaluate the selected bounds at every applicable grid time.

    Two-interval bounds use (t/2, t) per grid point; J-point bounds use
    three probes (S, T, S) at (0, t/2, t). Grid points outside a bound's
    time domain (t = 0 for the derivative and pulse forms) are skipped.
    Pulse/step bounds are evaluated from the stationary state of W.
    """
    reports: list[BoundReport] = []
    need_steady = {"PULSE_EQ11", "STEP_EQ12"} & set(bound_ids)
    pst = steady_state(W) if need_steady else None
    for t in map(float, t_grid):
        for bid in bound_ids:
            if bid == "MAIN_EQ5":
                reports.append(bound_main(W, p0, S, T, t / 2.0, t, mode))
            elif bid == "ZERO_T_EQ6":
                reports.append(bound_zero_t(W, p0, S, T, t, mode))
            elif bid == "DERIV_EQ7":
                if t > 0.0:
                    reports.append(bound_derivative(W, p0, S, T, t, mode))
            elif bid == "ETA_EQ8":
                reports.append(bound_eta(W, p0, S, T, t, mode))
            elif bid == "TANGENT_S29":
                reports.append(bound_tangent_tur(W, p0, S, T, t, mode))
            elif bid == "MULTI_SIN_S40":
                reports.append(
                    bound_multipoint(W, p0, [S, T, S], (0.0, t / 2.0, t), "sin")
                )
            elif bid == "MULTI_ETA_S39":
                reports.append(
                    bound_multipoint(W, p0, [S, T, S], (0.0, t / 2.0, t), "eta")
                )
            elif bid == "ONEPOINT_SIN_S42":
                reports.append(bound_onepoint(W, p0, S, t, "sin"))
            elif bid == "ONEPOINT_ETA_S41":
                reports.append(bound_onepoint(W, p0, S, t, "eta"))
            elif bid == "ONEPOINT_ACTIVITY_S45":
                reports.append(bound_onepoint(W, p0, S, t, "activity"))
            elif bid == "PULSE_EQ11":
                if t > 0.0:
                    reports.append(bound_pulse(W, pst, S, T, chi, t))
            elif bid == "STEP_EQ12":
                reports.append(bound_step(W, pst, S, T, chi, t))
    return reports


def _apply_rhs_scale(reports: list[BoundReport], scale: float) -> list[BoundReport]:
    if scale == 1.0:
        return reports
    return [
        replace(r, rhs=r.rhs * scale, ratio=_ratio(r.lhs, r.rhs * scale))
        for r in reports
    ]


def cmd_check(config: RunConfig) -> int:
    """Evaluate bounds for one model; 0 = all hold, 1 = violation."""
    if config.model_path is not None:
        W, p0, S, T = load_model(config.model_path)
        source = config.model_path
    elif config.gen_states is not None:
        W, p0, S = random_model(config.gen_states, config.seed)
        T = S
        source = f"random(n={config.gen_states}, seed={config.seed})"
    else:
        raise CorrboundError("check needs either a model file or --states")
    reports = evaluate_bounds(
        W, p0, S, T, config.t_grid, config.bounds, config.cmax_mode, config.chi
    )
    reports = _apply_rhs_scale(reports, config.rhs_scale)
    meta = _meta(
        seed=config.seed,
        generator=RANDOM_MODEL_METADATA["generator"],
        model=source,
        cmax_mode=config.cmax_mode,
        rhs_scale=fmt17(config.rhs_scale) if config.rhs_scale != 1.0 else None,
    )
    if config.output_format == "json":
        payload = {"meta": meta, "rows": [r.as_dict() for r in reports]}
        _write_text(config.output_path, _json17(payload) + "\n")
    else:
        doc = _csv_document(CSV_HEADER, [r.csv_row() for r in reports], meta)
        _write_text(config.output_path, doc)
    violations = [r for r in reports if not r.satisfied]
    for v in violations:
        print(
            f"VIOLATION {v.bound_id} t1={fmt17(v.t1)} t2={fmt17(v.t2)} "
            f"lhs={fmt17(v.lhs)} rhs={fmt17(v.rhs)} ratio={fmt17(v.ratio)}",
            file=sys.stderr,
        )
    return 1 if violations else 0


FIG2_CURVE_GRID = np.linspace(0.0, 10.0, 201)
FIG2_RATIO_GRID = np.geomspace(1e-2, 10.0, 20)
FIG3_STEP_GRID = np.linspace(0.0, 5.0, 101)
FIG3_PULSE_GRID = np.linspace(0.05, 5.0, 100)


def _fig2_random_models(n_models: int, seed: int):
    """The randomized sweep protocol: states cycling 2, 3, 4 and per-model
    seeds drawn from one master stream; scores are reused for both probes."""
    master = make_rng(seed)
    sizes = [2 + (i % 3) for i in range(n_models)]
    seeds = [int(s) for s in master.integers(0, 2**63 - 1, size=n_models)]
    return sizes, seeds


def cmd_figure2(out_dir: str, n_random: int = 100, seed: int = 20230) -> int:
    """Write fig2a-fig2d CSVs plus a sidecar with the sweep seeds."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    W, p0, S, T = fig2_model()

    rows_a, rows_b = [], []
    for t in FIG2_CURVE_GRID:
        sin_rep = bound_zero_t(W, p0, S, T, float(t))
        eta_rep = bound_eta(W, p0, S, T, float(t))
        rows_a.append(
            ",".join(
                (
                    fmt17(t),
                    fmt17(sin_rep.lhs),
                    fmt17(sin_rep.rhs),
                    fmt17(eta_rep.rhs),
                    str(sin_rep.in_validity_domain).lower(),
                )
            )
        )
        if t > 0.0:
            der = bound_derivative(W, p0, S, T, float(t))
            rows_b.append(",".join((fmt17(t), fmt17(der.lhs), fmt17(der.rhs))))

    sizes, seeds = _fig2_random_models(n_random, seed)
    models = [(0, fig2_model()[:3])]
    models += [
        (i + 1, random_model(n, s)) for i, (n, s) in enumerate(zip(sizes, seeds))
    ]

    def ratios_for(entry):
        idx, (Wm, p0m, Sm) = entry
        rows_c, rows_d = [], []
        for t in FIG2_RATIO_GRID:
            rep6 = bound_zero_t(Wm, p0m, Sm, Sm, float(t))
            rep7 = bound_derivative(Wm, p0m, Sm, Sm, float(t))
            rows_c.append(
                f"{idx},{fmt17(t)},{fmt17(rep6.ratio)},"
                f"{str(rep6.in_validity_domain).lower()}"
            )
            rows_d.append(f"{idx},{fmt17(t)},{fmt17(rep7.ratio)}")
        return rows_c, rows_d

    per_model = _map_ordered(ratios_for, models)
    rows_c = [r for rc, _ in per_model for r in rc]
    rows_d = [r for _, rd in per_model for r in rd]

    meta = _meta(seed=seed, generator=RANDOM_MODEL_METADATA["generator"])
    try:
        _write_text(
            str(out / "fig2a.csv"),
            _csv_document("t,lhs,rhs_sin,rhs_eta,in_domain", rows_a, meta),
        )
        _write_text(str(out / "fig2b.csv"), _csv_document("t,lhs,rhs", rows_b, meta))
        _write_text(
            str(out / "fig2c.csv"),
            _csv_document("model,t,ratio,in_domain", rows_c, meta),
        )
        _write_text(str(out / "fig2d.csv"), _csv_document("model,t,ratio", rows_d, meta))
        sidecar = {
            "meta": meta,
            "master_seed": seed,
            "model_states": sizes,
            "model_seeds": seeds,
            "distributions": RANDOM_MODEL_METADATA,
        }
        _write_text(str(out / "fig2_models.json"), _json17(sidecar) + "\n")
    except OSError as exc:
        print(f"error: cannot write figure data: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_figure3(out_dir: str, chi: float = DEFAULT_CHI) -> int:
    """Write pulse (fig3a) and step (fig3b) response curves with bounds."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    W, S, T = fig3_model()
    pst = steady_state(W)

    rows_a = []
    for t in FIG3_PULSE_GRID:
        rep = bound_pulse(W, pst, S, T, chi, float(t))
        shift = pulse_shift(W, pst, S, T, chi, float(t))
        rows_a.append(
            f"{fmt17(t)},{fmt17(shift)},{fmt17(rep.rhs)},{fmt17(rep.ratio)},"
            f"{str(rep.in_validity_domain).lower()}"
        )
    rows_b = []
    for t in FIG3_STEP_GRID:
        rep = bound_step(W, pst, S, T, chi, float(t))
        shift = step_shift(W, pst, S, T, chi, float(t))
        rows_b.append(
            f"{fmt17(t)},{fmt17(shift)},{fmt17(rep.rhs)},{fmt17(rep.ratio)},"
            f"{str(rep.in_validity_domain).lower()}"
        )
    meta = _meta(
        seed="none",
        generator=RANDOM_MODEL_METADATA["generator"],
        chi=fmt17(chi),
        model="two-state symmetric, unit rates",
    )
    header = "t,shift,bound_rhs,ratio,in_domain"
    try:
        _write_text(str(out / "fig3a.csv"), _csv_document(header, rows_a, meta))
        _write_text(str(out / "fig3b.csv"), _csv_document(header, rows_b, meta))
    except OSError as exc:
        print(f"error: cannot write figure data: {exc}", file=sys.stderr)
        return 2
    return 0


def cmd_stress(
    n_models: int = 500,
    n_list: tuple = (2, 3, 4),
    seed: int = 31415,
    t_grid: np.ndarray | None = None,
    cmax_mode: str = "standard",
    output_path: str | None = None,
    chi: float = DEFAULT_CHI,
) -> tuple[int, dict]:
    """Run every bound on every random model; tally violations.

    Returns (exit code, tally). The JSON document is byte-identical for
    identical arguments.
    """
    if n_models < 0:
        raise CorrboundError("n_models must be >= 0")
    if t_grid is None:
        t_grid = np.geomspace(1e-2, 10.0, 20)
    master = make_rng(seed)
    sizes = [int(n_list[i % len(n_list)]) for i in range(n_models)]
    seeds = [int(s) for s in master.integers(0, 2**63 - 1, size=n_models)]

    def run_one(args):
        n, model_seed = args
        W, p0, S = random_model(n, model_seed)
        return evaluate_bounds(W, p0, S, S, t_grid, BOUND_IDS, cmax_mode, chi)

    all_reports = _map_ordered(run_one, list(zip(sizes, seeds)))
    tally = {
        bid: {"evaluations": 0, "max_ratio": 0.0, "violations": 0}
        for bid in BOUND_IDS
    }
    for reports in all_reports:
        for r in reports:
            cell = tally[r.bound_id]
            cell["evaluations"] += 1
            cell["max_ratio"] = max(cell["max_ratio"], r.ratio)
            if not r.satisfied:
                cell["violations"] += 1
    total_violations = sum(c["violations"] for c in tally.values())
    payload = {
        "meta": _meta(
            seed=seed,
            generator=RANDOM_MODEL_METADATA["generator"],
            n_models=n_models,
            states=list(n_list),
            cmax_mode=cmax_mode,
            t_grid=[float(t) for t in t_grid],
        ),
        "tally": tally,
    }
    _write_text(output_path, _json17(payload) + "\n")
    return (0 if total_violations == 0 else 1), tally


def cmd_response(
    drive: str,
    model_path: str | None = None,
    chi: float = DEFAULT_CHI,
    t_grid: np.ndarray | None = None,
    output_path: str | None = None,
    output_format: str = "csv",
) -> int:
    """Pulse or step response sweep from the model's stationary state."""
    if model_path is not None:
        W, _, S, T = load_model(model_path)
    else:
        W, S, T = fig3_model()
    pst = steady_state(W)
    if t_grid is None:
        t_grid = FIG3_PULSE_GRID if drive == "pulse" else FIG3_STEP_GRID
    rows, dict_rows = [], []
    violations = 0
    for t in map(float, t_grid):
        if drive == "pulse":
            if t <= 0.0:
                continue
            rep = bound_pulse(W, pst, S, T, chi, t)
            shift = pulse_shift(W, pst, S, T, chi, t)
        elif drive == "step":
            rep = bound_step(W, pst, S, T, chi, t)
            shift = step_shift(W, pst, S, T, chi, t)
        else:
            raise CorrboundError(f"unknown drive {drive!r}")
        violations += 0 if rep.satisfied else 1
        rows.append(
            f"{fmt17(t)},{fmt17(shift)},{fmt17(rep.rhs)},{fmt17(rep.ratio)},"
            f"{str(rep.in_validity_domain).lower()}"
        )
        dict_rows.append(
            {
                "t": t,
                "shift": shift,
                "bound_rhs": rep.rhs,
                "ratio": rep.ratio,
                "in_domain": rep.in_validity_domain,
            }
        )
    meta = _meta(
        seed="none",
        generator=RANDOM_MODEL_METADATA["generator"],
        chi=fmt17(chi),
        drive=drive,
        model=model_path or "built-in symmetric",
    )
    if output_format == "json":
        _write_text(output_path, _json17({"meta": meta, "rows": dict_rows}) + "\n")
    else:
        doc = _csv_document("t,shift,bound_rhs,ratio,in_domain", rows, meta)
        _write_text(output_path, doc)
    return 1 if violations else 0


def _parse_tgrid(spec: str) -> np.ndarray:
    """Grid spec ``start:stop:points:log|lin``."""
    parts = spec.split(":")
    if len(parts) != 4:
        raise CorrboundError(f"bad tgrid spec {spec!r}, want start:stop:points:kind")
    try:
        start, stop, points = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise CorrboundError(f"bad tgrid spec {spec!r}: {exc}") from exc
    if points < 1 or stop < start or start < 0.0:
        raise CorrboundError(f"bad tgrid range in {spec!r}")
    if parts[3] == "lin":
        return np.linspace(start, stop, points)
    if parts[3] == "log":
        if start <= 0.0:
            raise CorrboundError("log grid needs start > 0")
        return np.geomspace(start, stop, points)
    raise CorrboundError(f"tgrid kind must be log or lin, got {parts[3]!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corrbound",
        description="Verify activity-based correlation bounds for Markov jump processes.",
    )
    parser.add_argument("--version", action="version", version=f"corrbound {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="evaluate bounds for one model")
    p_check.add_argument("--model", help="JSON model file")
    p_check.add_argument("--states", type=int, help="generate a random model with N states")
    p_check.add_argument("--seed", type=int, default=0, help="seed for --states")
    p_check.add_argument("--tgrid", default="1e-2:10:20:log", help="start:stop:points:log|lin")
    p_check.add_argument("--bounds", default=",".join(DEFAULT_BOUNDS), help="comma-separated bound ids")
    p_check.add_argument("--cmax", choices=("standard", "tight"), default="standard")
    p_check.add_argument("--chi", type=float, default=DEFAULT_CHI)
    p_check.add_argument("--out", help="output file (default stdout)")
    p_check.add_argument("--format", choices=("csv", "json"), default="csv")
    p_check.add_argument(
        "--rhs-scale", type=float, default=1.0,
        help="self-test hook: scale every bound rhs (0.5 must trigger exit 1)",
    )

    p_f2 = sub.add_parser("figure2", help="correlation-bound figure data")
    p_f2.add_argument("--out", default=".", help="output directory")
    p_f2.add_argument("--models", type=int, default=100, help="random models for the ratio sweep")
    p_f2.add_argument("--seed", type=int, default=20230)

    p_f3 = sub.add_parser("figure3", help="linear-response figure data")
    p_f3.add_argument("--out", default=".", help="output directory")
    p_f3.add_argument("--chi", type=float, default=DEFAULT_CHI)

    p_st = sub.add_parser("stress", help="randomized validity sweep")
    p_st.add_argument("--models", type=int, default=500)
    p_st.add_argument("--states", default="2,3,4", help="comma-separated state counts to cycle")
    p_st.add_argument("--seed", type=int, default=31415)
    p_st.add_argument("--tgrid", default="1e-2:10:20:log")
    p_st.add_argument("--cmax", choices=("standard", "tight"), default="standard")
    p_st.add_argument("--chi", type=float, default=DEFAULT_CHI)
    p_st.add_argument("--out", help="tally JSON file (default stdout)")

    p_re = sub.add_parser("response", help="pulse/step response sweep")
    p_re.add_argument("--drive", choices=("pulse", "step"), required=True)
    p_re.add_argument("--model", help="JSON model file (default: built-in symmetric)")
    p_re.add_argument("--chi", type=float, default=DEFAULT_CHI)
    p_re.add_argument("--tgrid", help="start:stop:points:log|lin")
    p_re.add_argument("--out", help="output file (default stdout)")
    p_re.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "check":
            config = RunConfig(
                t_grid=_parse_tgrid(args.tgrid),
                bounds=tuple(b.strip() for b in args.bounds.split(",") if b.strip()),
                model_path=args.model,
                gen_states=args.states,
                seed=args.seed,
                cmax_mode=args.cmax,
                output_path=args.out,
                output_format=args.format,
                chi=args.chi,
                rhs_scale=args.rhs_scale,
            )
            return cmd_check(config)
        if args.command == "figure2":
            return cmd_figure2(args.out, n_random=args.models, seed=args.seed)
        if args.command == "figure3":
            return cmd_figure3(args.out, chi=args.chi)
        if args.command == "stress":
            states = tuple(int(s) for s in args.states.split(",") if s.strip())
            code, _ = cmd_stress(
                n_models=args.models,
                n_list=states,
                seed=args.seed,
                t_grid=_parse_tgrid(args.tgrid),
                cmax_mode=args.cmax,
                output_path=args.out,
                chi=args.chi,
            )
            return code
        if args.command == "response":
            grid = _parse_tgrid(args.tgrid) if args.tgrid else None
            return cmd_response(
                drive=args.drive,
                model_path=args.model,
                chi=args.chi,
                t_grid=grid,
                output_path=args.out,
                output_format=args.format,
            )
        raise CorrboundError(f"unknown command {args.command!r}")
    except (CorrboundError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
