#!/usr/bin/env python3
"""Speed-amplitude study: sweep speeds, print amplitudes, fit the power law.

Example:
    python scripts/speed_amplitude_study.py --gamma 0.5 --delta 0.8 \
        --offset-min 0.01 --offset-max 0.3 --count 10
"""

import argparse

import numpy as np

from tlwaves import analysis, solver
from tlwaves.grid import SpectralGrid
from tlwaves.params import make_parameters, wave_type


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--gamma", type=float, default=0.5)
    ap.add_argument("--delta", type=float, default=0.8)
    ap.add_argument("--offset-min", type=float, default=0.01)
    ap.add_argument("--offset-max", type=float, default=0.3)
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--half-length", type=float, default=128.0)
    ap.add_argument("--modes", type=int, default=1024)
    args = ap.parse_args()

    params = make_parameters(args.gamma, args.delta)
    grid = SpectralGrid(half_length=args.half_length, n=args.modes)
    print(f"{wave_type(params).value} waves: K = {params.k_coeff:.6f}, "
          f"beta = {params.beta:.6f}, c_crit = {params.c_crit:.6f}")

    speeds = params.c_crit + np.linspace(args.offset_min, args.offset_max, args.count)
    rows = []
    print(f"{'c_s':>10} {'zeta_max':>12} {'v_max':>12} {'u_max':>12} {'iters':>6}")
    for speed in speeds:
        state, report = solver.solve(grid, params, solver.SolverConfig(speed=float(speed)))
        z, v, u = analysis.amplitude(state)
        rows.append((float(speed), z))
        print(f"{speed:10.6f} {z:12.6f} {v:12.6f} {u:12.6f} {report.iterations:6d}")

    fit = analysis.fit_speed_amplitude(rows)
    c = fit.coefficients
    print(f"\nzeta_max = A c_s^B + C with A = {c['A']:.4f}, B = {c['B']:.4f}, C = {c['C']:.4f}")
    print(f"SSE = {fit.sse:.4e}, R^2 = {fit.r_squared:.8f}, RMSE = {fit.rmse:.4e}")


if __name__ == "__main__":
    main()
