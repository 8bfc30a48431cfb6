"""Command-line front end and file formats.

Output files are CSV with a JSON metadata header carried in leading
comment lines (17-significant-digit floats, lossless for binary64), or a
single JSON document when the output path ends in ``.json``.  Headers
record the configuration and package versions but no timings, so repeated
runs with the same configuration produce byte-identical files; wall-clock
numbers go to the console log instead.

Exit codes: 0 success, 1 validation failure, 2 non-convergence.  Errors
are emitted as one-line JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__, analysis, dispersion, oracle, solver
from .errors import InsufficientDataError, NotConvergedError, WaveError
from .grid import SpectralGrid, forward_transform, spectrum_columns
from .params import make_parameters, params_to_config, wave_type
from .solver import SolverConfig

_ELEVATION_PAIR = (0.5, 0.8)
_DEPRESSION_PAIR = (0.5, 0.5)
_FIG2_OFFSETS = (0.02, 0.05, 0.10)
_FIG3C_DELTAS = (0.5, 0.55, 0.6, 0.65, 0.8, 0.9, 1.0, 1.1, 1.2)


# ----------------------------------------------------------------------
# file formats


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def write_table(path: Path, meta: dict, columns: dict) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    names = list(columns)
    arrays = [np.asarray(columns[name], dtype=float) for name in names]
    if path.suffix == ".json":
        payload = {"meta": meta, "columns": {n: [float(v) for v in a] for n, a in zip(names, arrays)}}
        path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8")
        return
    lines = [
        "# " + json.dumps(meta, sort_keys=True),
        "# columns: " + ",".join(names),
    ]
    for row in zip(*arrays):
        lines.append(",".join(_fmt(v) for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_table(path: Path) -> tuple[dict, dict]:
    path = Path(path)
    if path.suffix == ".json":
        payload = json.loads(path.read_text(encoding="utf-8"))
        return payload.get("meta", {}), {n: np.asarray(v, dtype=float) for n, v in payload["columns"].items()}
    meta: dict = {}
    names: list[str] = []
    rows: list[list[float]] = []
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("{"):
                meta = json.loads(body)
            elif body.startswith("columns:"):
                names = [n.strip() for n in body[len("columns:"):].split(",")]
            continue
        rows.append([float(tok) for tok in line.split(",")])
    data = np.asarray(rows, dtype=float)
    if not names:
        names = [f"col{i}" for i in range(data.shape[1] if data.size else 0)]
    return meta, {name: data[:, i] for i, name in enumerate(names)}


def write_json(path: Path, payload: dict) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8")


def _meta(command: str, config: dict, extra: dict | None = None) -> dict:
    out = {
        "tool": "tlwaves",
        "version": __version__,
        "numpy": np.__version__,
        "command": command,
        "config": config,
    }
    if extra:
        out.update(extra)
    return out


def _thread_count() -> int:
    raw = os.environ.get("TLWAVES_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_ordered(fn, items):
    workers = _thread_count()
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# ----------------------------------------------------------------------
# configuration plumbing


def _load_config_file(path: str | None) -> dict:
    if not path:
        return {}
    return json.loads(Path(path).read_text(encoding="utf-8"))


def _merged(file_block: dict, **flags) -> dict:
    merged = dict(file_block)
    for key, value in flags.items():
        if value is not None:
            merged[key] = value
    return merged


def _parse_extrapolation(text: str | None) -> int | None:
    if text is None or text == "off":
        return None
    if text == "mpe":
        return 6
    if text.startswith("mpe:"):
        return int(text.split(":", 1)[1])
    raise ValueError(f"unknown extrapolation setting {text!r}; use off or mpe:K")


def _build_run(args) -> tuple:
    """Validate every block of the run configuration up front."""
    filecfg = _load_config_file(getattr(args, "config", None))
    pblock = _merged(filecfg.get("params", {}), gamma=args.gamma, delta=args.delta)
    gblock = _merged(
        filecfg.get("grid", {}),
        half_length=getattr(args, "half_length", None),
        modes=getattr(args, "modes", None),
    )
    sblock = _merged(
        filecfg.get("solver", {}),
        cs=getattr(args, "cs", None),
        tol_residual=getattr(args, "tol", None),
        tol_update=getattr(args, "tol_update", None),
        max_iter=getattr(args, "max_iter", None),
        extrapolation=getattr(args, "extrapolation", None),
        dealias=True if getattr(args, "dealias", False) else None,
        strict=True if getattr(args, "strict", False) else None,
    )
    params = make_parameters(pblock.get("gamma", 0.5), pblock.get("delta", 0.8))
    grid = SpectralGrid(half_length=float(gblock.get("half_length", 128.0)), n=int(gblock.get("modes", 1024)))
    speed = sblock.get("cs")
    if speed is None:
        speed = params.c_crit + 0.05
    config = SolverConfig(
        speed=float(speed),
        tol_residual=float(sblock.get("tol_residual", 1e-10)),
        tol_update=float(sblock.get("tol_update", sblock.get("tol_residual", 1e-10))),
        max_iter=int(sblock.get("max_iter", 500)),
        mpe_cycle=_parse_extrapolation(sblock.get("extrapolation")),
        dealias=bool(sblock.get("dealias", False)),
        strict_domain=bool(sblock.get("strict", False)),
    )
    described = {
        "params": params_to_config(params),
        "grid": {"half_length": grid.half_length, "modes": grid.n},
        "solver": {
            "cs": config.speed,
            "tol_residual": config.tol_residual,
            "tol_update": config.tol_update,
            "max_iter": config.max_iter,
            "extrapolation": "off" if config.mpe_cycle is None else f"mpe:{config.mpe_cycle}",
            "dealias": config.dealias,
            "strict": config.strict_domain,
        },
    }
    return params, grid, config, described


# ----------------------------------------------------------------------
# subcommands


def cmd_solve(args) -> int:
    params, grid, config, described = _build_run(args)
    state, report = solver.solve(grid, params, config)
    meta = _meta("solve", described, {"report": report.to_dict(include_wall_time=False)})
    write_table(Path(args.out), meta, {"x": grid.nodes, "zeta": state.zeta, "v": state.v, "u": state.u})
    if args.spectrum_out:
        spec_cols = spectrum_columns(grid, forward_transform(grid, state.zeta))
        write_table(Path(args.spectrum_out), _meta("solve-spectrum", described), spec_cols)
    print(
        f"solve: {wave_type(params).value} wave at cs={config.speed:.6g}, "
        f"{report.iterations} iterations, residual {report.residual_history[-1]:.3e}, "
        f"{report.wall_time:.2f} s -> {args.out}"
    )
    return 0


def cmd_sweep(args) -> int:
    params, grid, config, described = _build_run(args)
    if args.count < 4:
        raise InsufficientDataError("sweep needs at least 4 speeds for the power fit")
    offsets = np.linspace(args.offset_min, args.offset_max, args.count)
    speeds = params.c_crit + offsets

    def solve_one(speed: float):
        cfg = SolverConfig(
            speed=float(speed),
            tol_residual=config.tol_residual,
            tol_update=config.tol_update,
            max_iter=config.max_iter,
            mpe_cycle=config.mpe_cycle,
            dealias=config.dealias,
        )
        state, _ = solver.solve(grid, params, cfg)
        return analysis.amplitude(state)

    amps = _map_ordered(solve_one, list(speeds))
    zmax = np.array([a[0] for a in amps])
    vmax = np.array([a[1] for a in amps])
    umax = np.array([a[2] for a in amps])

    described["sweep"] = {"offset_min": args.offset_min, "offset_max": args.offset_max, "count": args.count}
    meta = _meta("sweep", described)
    out = Path(args.out)
    write_table(out, meta, {"cs": speeds, "zeta_max": zmax, "v_max": vmax, "u_max": umax})

    fit = analysis.fit_speed_amplitude(list(zip(speeds, np.abs(zmax))))
    fit_path = out.with_suffix(".fit.json")
    write_json(fit_path, {"meta": meta, "fit": fit.to_dict()})
    print(f"sweep: {args.count} speeds -> {out} (fit R^2 = {fit.r_squared:.6f} -> {fit_path})")
    return 0


def cmd_oracle(args) -> int:
    params, _, config, described = _build_run(args)
    problem = oracle.TravelingWaveProblem(params=params, speed=config.speed)
    curve = oracle.potential(problem)
    profile = oracle.integrate_profile(curve, x_max=args.x_max, step=args.step)
    xs = np.arange(0.0, args.x_max + 0.5 * args.dx, args.dx)
    v = profile.sample_v(xs)
    vp = profile.sample_v_prime(xs)
    zeta = oracle.reconstruct_zeta(curve, v)
    u = oracle.reconstruct_u(curve, v)
    described["oracle"] = {"x_max": args.x_max, "step": args.step, "dx": args.dx}
    meta = _meta(
        "oracle",
        described,
        {"turning_point": curve.turning_point, "saddle_rate": curve.saddle_rate, "energy_max": profile.energy_max},
    )
    write_table(Path(args.out), meta, {"x": xs, "v": v, "v_prime": vp, "zeta": zeta, "u": u})
    print(
        f"oracle: turning point {curve.turning_point:.12g}, energy drift {profile.energy_max:.2e} -> {args.out}"
    )
    return 0


def cmd_dispersion(args) -> int:
    params, _, _, described = _build_run(args)
    symbols = dispersion.DispersionSymbols(params)
    ks = np.linspace(args.k_min, args.k_max, args.count)
    described["dispersion"] = {"k_min": args.k_min, "k_max": args.k_max, "count": args.count}
    meta = _meta("dispersion", described)
    write_table(Path(args.out), meta, {"k": ks, "omega": symbols.omega(ks), "sigma": symbols.sigma(ks)})
    print(f"dispersion: {args.count} wavenumbers -> {args.out}")
    return 0


def _grid_from_profile(x: np.ndarray) -> SpectralGrid:
    """Rebuild the periodic grid a solver profile was written on."""
    spacing = float(x[1] - x[0])
    half = spacing * x.size / 2.0
    if x.size % 2 or abs(float(x[0]) + half) > 1e-9 * max(1.0, half):
        raise WaveError("input is not a periodic solver profile (expected nodes -l + j*h)")
    if float(np.max(np.abs(np.diff(x) - spacing))) > 1e-9 * spacing:
        raise WaveError("input grid is not uniformly spaced")
    return SpectralGrid(half_length=half, n=x.size)


def cmd_analyze(args) -> int:
    meta_in, cols = read_table(Path(args.infile))
    out = Path(args.out)
    window = tuple(args.window) if args.window else None

    if args.mode == "phase":
        x = cols["x"]
        v = cols["v"]
        grid = _grid_from_profile(x)
        pairs = analysis.phase_portrait(
            solver.WaveState(grid=grid, zeta=cols.get("zeta", v), v=v, u=cols.get("u", v)), grid
        )
        meta = _meta("analyze-phase", {"input": str(args.infile), "source": meta_in.get("config", {})})
        write_table(out, meta, {"v": pairs[:, 0], "v_prime": pairs[:, 1]})
        print(f"analyze phase: {grid.n} samples -> {out}")
        return 0

    if args.mode == "decay":
        x = cols["x"]
        y = cols["zeta"] if "zeta" in cols else cols[list(cols)[1]]
        keep = x > 0.0
        x, y = x[keep], y[keep]
        if window is None:
            half_length = meta_in.get("config", {}).get("grid", {}).get("half_length", float(np.max(x)))
            window = analysis.default_space_window(x, y, half_length=float(half_length))
        fit = analysis.fit_decay_space(x, y, window)
        label = "analyze-decay"
        tname = "x"
    else:
        x_all = cols["x"]
        y_all = cols["zeta"] if "zeta" in cols else cols[list(cols)[1]]
        grid = _grid_from_profile(x_all)
        kp, mags = analysis.spectrum_magnitudes(grid, y_all)
        if window is None:
            window = analysis.default_spectrum_window(kp, mags)
        fit = analysis.fit_decay_spectrum(kp, mags, window)
        x, y = kp, mags
        label = "analyze-spectrum"
        tname = "k"

    mask = (x >= window[0]) & (x <= window[1])
    a, b, c = fit.coefficients["a"], fit.coefficients["b"], fit.coefficients["c"]
    sign = np.sign(y[mask][0]) if y[mask].size else 1.0
    fitted = sign * a * x[mask] ** b * np.exp(c * x[mask])
    meta = _meta(label, {"input": str(args.infile), "window": list(window), "source": meta_in.get("config", {})})
    write_table(out, meta, {tname: x[mask], "value": y[mask], "fitted": fitted})
    write_json(out.with_suffix(".fit.json"), {"meta": meta, "fit": fit.to_dict()})
    print(f"{label}: c = {c:.6g}, R^2 = {fit.r_squared:.8f} -> {out}")
    return 0


# ----------------------------------------------------------------------
# reproduction targets


def _solve_pair(gamma, delta, offset, half_length, modes, tol, mpe=None):
    params = make_parameters(gamma, delta)
    grid = SpectralGrid(half_length=half_length, n=modes)
    config = SolverConfig(speed=params.c_crit + offset, tol_residual=tol, tol_update=tol, mpe_cycle=mpe)
    state, report = solver.solve(grid, params, config)
    return params, grid, config, state, report


def _repro_profiles(target, gamma, delta, outdir, half_length, modes, tol):
    def one(offset):
        params, grid, config, state, report = _solve_pair(gamma, delta, offset, half_length, modes, tol)
        described = {
            "params": params_to_config(params),
            "grid": {"half_length": grid.half_length, "modes": grid.n},
            "solver": {"cs": config.speed},
        }
        meta = _meta(f"reproduce-{target}", described, {"report": report.to_dict(include_wall_time=False)})
        path = outdir / f"{target}_offset{offset:g}.csv"
        write_table(path, meta, {"x": grid.nodes, "zeta": state.zeta, "v": state.v, "u": state.u})
        return path

    return _map_ordered(one, list(_FIG2_OFFSETS))


def _repro_sweep(outdir, half_length, modes, tol):
    gamma, delta = _ELEVATION_PAIR
    params = make_parameters(gamma, delta)
    grid = SpectralGrid(half_length=half_length, n=modes)
    offsets = np.linspace(0.01, 0.3, 10)

    def one(offset):
        config = SolverConfig(speed=params.c_crit + offset, tol_residual=tol, tol_update=tol)
        state, _ = solver.solve(grid, params, config)
        return analysis.amplitude(state)

    amps = _map_ordered(one, list(offsets))
    speeds = params.c_crit + offsets
    return params, grid, speeds, np.asarray(amps)


def cmd_reproduce(args) -> int:
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    half_length = args.half_length or 128.0
    modes = args.modes or 1024
    tol = args.tol or 1e-10
    targets = {args.target} if args.target != "all" else {
        "fig2a", "fig2b", "fig3a", "fig3b", "fig3c", "fig4", "fig5", "fig6", "table1"
    }
    made: list[Path] = []

    if "fig2a" in targets:
        made += _repro_profiles("fig2a", *_ELEVATION_PAIR, outdir, half_length, modes, tol)
    if "fig2b" in targets:
        made += _repro_profiles("fig2b", *_DEPRESSION_PAIR, outdir, half_length, modes, tol)

    sweep_cache = None
    if targets & {"fig3a", "fig3b"}:
        sweep_cache = _repro_sweep(outdir, half_length, modes, tol)
    if "fig3a" in targets:
        params, grid, speeds, amps = sweep_cache
        meta = _meta("reproduce-fig3a", {"params": params_to_config(params)})
        path = outdir / "fig3a_amplitudes.csv"
        write_table(path, meta, {"cs": speeds, "zeta_max": amps[:, 0], "v_max": amps[:, 1], "u_max": amps[:, 2]})
        made.append(path)
    if "fig3b" in targets:
        params, grid, speeds, amps = sweep_cache
        fit = analysis.fit_speed_amplitude(list(zip(speeds, amps[:, 0])))
        path = outdir / "fig3b_fit.json"
        write_json(path, {"meta": _meta("reproduce-fig3b", {"params": params_to_config(params)}), "fit": fit.to_dict()})
        made.append(path)
    if "fig3c" in targets:
        grid = SpectralGrid(half_length=half_length, n=modes)
        study = analysis.amplitude_vs_k_study(0.5, _FIG3C_DELTAS, 0.05, grid=grid, tol=tol)
        meta = _meta("reproduce-fig3c", {"gamma": 0.5, "deltas": list(_FIG3C_DELTAS), "offset": 0.05},
                     {"skipped": list(study.skipped)})
        path = outdir / "fig3c_amplitude_vs_k.csv"
        write_table(path, meta, {
            "k_coeff": study.k_values(),
            "zeta_max": study.amplitudes(),
            "delta": np.array([p.delta for p in study.points]),
        })
        made.append(path)
    if "fig4" in targets:
        for label, (gamma, delta) in (("elevation", _ELEVATION_PAIR), ("depression", _DEPRESSION_PAIR)):
            params, grid, config, state, _ = _solve_pair(gamma, delta, 0.05, half_length, modes, tol)
            pairs = analysis.phase_portrait(state, grid)
            meta = _meta("reproduce-fig4", {"params": params_to_config(params), "cs": config.speed})
            path = outdir / f"fig4_{label}.csv"
            write_table(path, meta, {"v": pairs[:, 0], "v_prime": pairs[:, 1]})
            made.append(path)

    fits: dict = {}
    if targets & {"fig5", "fig6", "table1"}:
        params, grid, config, state, _ = _solve_pair(*_ELEVATION_PAIR, 0.05, half_length, modes, tol)
        described = {"params": params_to_config(params), "cs": config.speed}
        x = grid.nodes
        kp, mags = analysis.spectrum_magnitudes(grid, state.zeta)
        sw = analysis.default_space_window(x[x > 0], state.zeta[x > 0], grid.half_length)
        kw = analysis.default_spectrum_window(kp, mags)
        space_fit = analysis.fit_decay_space(x[x > 0], state.zeta[x > 0], sw)
        spec_fit = analysis.fit_decay_spectrum(kp, mags, kw)
        fits = {"space": space_fit, "spectrum": spec_fit}
        if "fig5" in targets:
            path = outdir / "fig5a_spectrum.csv"
            write_table(path, _meta("reproduce-fig5a", described), {"k": kp, "magnitude": mags})
            made.append(path)
            mask = (x > 0) & (x >= sw[0]) & (x <= sw[1])
            a, b, c = (space_fit.coefficients[key] for key in ("a", "b", "c"))
            path = outdir / "fig5b_profile_fit.csv"
            write_table(path, _meta("reproduce-fig5b", described, {"fit": space_fit.to_dict()}),
                        {"x": x[mask], "zeta": state.zeta[mask],
                         "fitted": np.sign(params.k_coeff) * a * x[mask] ** b * np.exp(c * x[mask])})
            made.append(path)
        if "fig6" in targets:
            mask = (kp >= kw[0]) & (kp <= kw[1])
            a, b, c = (spec_fit.coefficients[key] for key in ("a", "b", "c"))
            path = outdir / "fig6_spectrum_fit.csv"
            write_table(path, _meta("reproduce-fig6", described, {"fit": spec_fit.to_dict()}),
                        {"k": kp[mask], "magnitude": mags[mask], "fitted": a * kp[mask] ** b * np.exp(c * kp[mask])})
            made.append(path)
        if "table1" in targets:
            path = outdir / "table1.json"
            write_json(path, {
                "meta": _meta("reproduce-table1", described),
                "space_fit": fits["space"].to_dict(),
                "spectrum_fit": fits["spectrum"].to_dict(),
            })
            made.append(path)

    for path in made:
        print(f"reproduce: wrote {path}")
    return 0


# ----------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON config file; flags override its blocks")
    p.add_argument("--gamma", type=float, help="density ratio rho1/rho2")
    p.add_argument("--delta", type=float, help="depth ratio d1/d2")


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cs", type=float, help="traveling-wave speed (default c_crit + 0.05)")
    p.add_argument("--half-length", dest="half_length", type=float, help="domain half-length l")
    p.add_argument("--modes", type=int, help="collocation points N (even)")
    p.add_argument("--tol", type=float, help="residual tolerance (max norm)")
    p.add_argument("--tol-update", dest="tol_update", type=float, help="update tolerance (max norm)")
    p.add_argument("--max-iter", dest="max_iter", type=int, help="iteration cap")
    p.add_argument("--extrapolation", help="off or mpe:K (default off)")
    p.add_argument("--dealias", action="store_true", help="zero-padded quadratic products")
    p.add_argument("--strict", action="store_true", help="escalate the boundary-decay warning to an error")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tlwaves", description="Solitary waves of a two-layer internal wave model")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute one solitary wave profile")
    _add_common(p)
    _add_solver_flags(p)
    p.add_argument("--out", required=True, help="output file (.csv or .json)")
    p.add_argument("--spectrum-out", dest="spectrum_out",
                   help="also write the full (k, k', re, im) spectrum of zeta")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="speed sweep with amplitude extraction and power fit")
    _add_common(p)
    _add_solver_flags(p)
    p.add_argument("--offset-min", type=float, default=0.01)
    p.add_argument("--offset-max", type=float, default=0.3)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="ODE-based solitary profile (independent of the spectral solver)")
    _add_common(p)
    p.add_argument("--cs", type=float, help="traveling-wave speed")
    p.add_argument("--x-max", dest="x_max", type=float, default=60.0)
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--dx", type=float, default=0.25, help="output sampling interval")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("dispersion", help="linear symbols omega(k), sigma(k) over a wavenumber range")
    _add_common(p)
    p.add_argument("--k-min", dest="k_min", type=float, default=0.0)
    p.add_argument("--k-max", dest="k_max", type=float, default=50.0)
    p.add_argument("--count", type=int, default=501)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_dispersion)

    p = sub.add_parser("analyze", help="fits and portraits from profile files")
    p.add_argument("mode", choices=["decay", "spectrum", "phase"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--window", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("reproduce", help="regenerate the reference figure and table data")
    p.add_argument("target", choices=["fig2a", "fig2b", "fig3a", "fig3b", "fig3c", "fig4", "fig5", "fig6",
                                      "table1", "all"])
    p.add_argument("--out-dir", dest="out_dir", default="results")
    p.add_argument("--half-length", dest="half_length", type=float)
    p.add_argument("--modes", type=int)
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotConvergedError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2
    except (WaveError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
