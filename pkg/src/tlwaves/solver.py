"""Petviashvili iteration for the discrete traveling-wave system.

The pseudospectral discretization of the traveling-wave equations couples
the pair (zeta_h, v_h) through a linear operator that is diagonal per
Fourier mode,

    [[c_s, -1/(delta+gamma)], [gamma-1, c_s (1 + beta k'^2)]],

against the quadratic right-hand side K (zeta_h . v_h, v_h . v_h / 2)
taken pointwise.  Each iteration computes the stabilizing factor

    m = <L x, x> / <N(x), x>        (Euclidean inner product in R^{2N})

and solves  L x_new = m^2 N(x_old)  mode by mode.  At a solution m = 1;
for the quadratic nonlinearity the squared exponent makes the iteration a
contraction near the wave while suppressing the trivial zero attractor.
Optional acceleration restarts the iteration from a minimal-polynomial
extrapolation of the recent iterates.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import oracle
from .errors import (
    DegenerateInnerProductError,
    DomainTooSmallError,
    DomainTooSmallWarning,
    NoSolitaryWaveError,
    NotConvergedError,
    SingularModeError,
)
from .extrapolation import extrapolate
from .grid import SpectralGrid, forward_transform, helmholtz_symbol, padded_product
from .params import ModelParameters


@dataclass
class WaveState:
    """Discrete wave candidate: interface deviation, smoothed and raw velocity.

    ``u`` is derived from ``v`` through the Helmholtz symbol and is
    recomputed whenever ``v`` changes; use :meth:`from_zeta_v`.
    """

    grid: SpectralGrid
    zeta: np.ndarray
    v: np.ndarray
    u: np.ndarray

    @classmethod
    def from_zeta_v(cls, grid: SpectralGrid, params: ModelParameters, zeta: np.ndarray, v: np.ndarray) -> "WaveState":
        zeta = np.asarray(zeta, dtype=float)
        v = np.asarray(v, dtype=float)
        if zeta.shape != (grid.n,) or v.shape != (grid.n,):
            raise ValueError(f"state components must have shape ({grid.n},)")
        u = np.fft.ifft(helmholtz_symbol(grid, params) * np.fft.fft(v)).real
        return cls(grid=grid, zeta=zeta, v=v, u=u)


@dataclass(frozen=True)
class SolverConfig:
    """Iteration controls.

    ``mpe_cycle = None`` runs the plain iteration; an integer K >= 2
    restarts from a minimal-polynomial extrapolation every K + 1 steps.
    ``initial_guess = None`` builds the scaled sech^2 seed from the ODE
    oracle's turning point.
    """

    speed: float
    tol_residual: float = 1e-10
    tol_update: float = 1e-10
    max_iter: int = 500
    mpe_cycle: int | None = None
    initial_guess: WaveState | None = None
    dealias: bool = False
    strict_domain: bool = False
    boundary_decay_tol: float = 1e-10

    def __post_init__(self) -> None:
        if not (self.tol_residual > 0.0 and self.tol_update > 0.0):
            raise ValueError("tolerances must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if self.mpe_cycle is not None and self.mpe_cycle < 2:
            raise ValueError("extrapolation cycle length must be >= 2")


@dataclass
class SolveReport:
    converged: bool = False
    iterations: int = 0
    residual_history: list = field(default_factory=list)
    m_history: list = field(default_factory=list)
    wall_time: float = 0.0
    boundary_ratio: float = 0.0
    warnings: list = field(default_factory=list)

    @property
    def m_final(self) -> float:
        return self.m_history[-1] if self.m_history else float("nan")

    def to_dict(self, include_wall_time: bool = True) -> dict:
        out = {
            "converged": self.converged,
            "iterations": self.iterations,
            "residual_final": self.residual_history[-1] if self.residual_history else None,
            "m_final": self.m_final if self.m_history else None,
            "boundary_ratio": self.boundary_ratio,
            "warnings": list(self.warnings),
        }
        if include_wall_time:
            out["wall_time"] = self.wall_time
        return out


def mode_determinants(grid: SpectralGrid, params: ModelParameters, speed: float) -> np.ndarray:
    """det(k) = c_s^2 (1 + beta k'^2) - c_crit^2 per mode; positive iff supersonic."""
    return speed**2 * helmholtz_symbol(grid, params) - params.c_crit**2


def _checked_determinants(grid: SpectralGrid, params: ModelParameters, speed: float) -> np.ndarray:
    det = mode_determinants(grid, params, speed)
    worst = np.min(np.abs(det))
    if worst < 1e-14:
        k_bad = grid.mode_numbers[int(np.argmin(np.abs(det)))]
        raise SingularModeError(f"mode k = {k_bad} is singular (|det| = {worst:.3e}) at speed {speed}")
    return det


def apply_linear_lhs(
    grid: SpectralGrid, params: ModelParameters, speed: float, state: WaveState
) -> tuple[np.ndarray, np.ndarray]:
    """Spectra of the linear operator applied to (zeta, v)."""
    _checked_determinants(grid, params, speed)
    sym = helmholtz_symbol(grid, params)
    zh = forward_transform(grid, state.zeta)
    vh = forward_transform(grid, state.v)
    row1 = speed * zh - vh / (params.delta + params.gamma)
    row2 = (params.gamma - 1.0) * zh + speed * sym * vh
    return row1, row2


def nonlinear_rhs(
    params: ModelParameters, state: WaveState, dealias: bool = False
) -> tuple[np.ndarray, np.ndarray]:
    """Quadratic right-hand side K (zeta v, v^2 / 2) as grid functions."""
    if dealias:
        zv = padded_product(state.grid, state.zeta, state.v)
        vv = padded_product(state.grid, state.v, state.v)
    else:
        zv = state.zeta * state.v
        vv = state.v * state.v
    return params.k_coeff * zv, 0.5 * params.k_coeff * vv


def _lhs_physical(grid, params, speed, state):
    sym = helmholtz_symbol(grid, params)
    u = np.fft.ifft(sym * np.fft.fft(state.v)).real
    row1 = speed * state.zeta - state.v / (params.delta + params.gamma)
    row2 = (params.gamma - 1.0) * state.zeta + speed * u
    return row1, row2


def residual_norm(grid: SpectralGrid, params: ModelParameters, speed: float, state: WaveState,
                  dealias: bool = False) -> float:
    """Max norm of L x - N(x) over both rows, in physical space."""
    l1, l2 = _lhs_physical(grid, params, speed, state)
    n1, n2 = nonlinear_rhs(params, state, dealias=dealias)
    return max(float(np.max(np.abs(l1 - n1))), float(np.max(np.abs(l2 - n2))))


def stabilizing_factor(grid: SpectralGrid, params: ModelParameters, speed: float, state: WaveState,
                       dealias: bool = False) -> float:
    """m = <L x, x> / <N(x), x> on the stacked real 2N-vector."""
    l1, l2 = _lhs_physical(grid, params, speed, state)
    n1, n2 = nonlinear_rhs(params, state, dealias=dealias)
    num = float(l1 @ state.zeta + l2 @ state.v)
    den = float(n1 @ state.zeta + n2 @ state.v)
    scale = float(np.max(np.abs(state.zeta)) + np.max(np.abs(state.v)))
    if abs(den) < 1e-300 * max(1.0, scale):
        raise DegenerateInnerProductError("nonlinearity inner product has collapsed to zero")
    return num / den


def petviashvili_step(
    grid: SpectralGrid, params: ModelParameters, config: SolverConfig, state: WaveState
) -> tuple[WaveState, float]:
    """One update of the stabilized fixed-point iteration."""
    speed = config.speed
    det = _checked_determinants(grid, params, speed)
    m = stabilizing_factor(grid, params, speed, state, dealias=config.dealias)
    n1, n2 = nonlinear_rhs(params, state, dealias=config.dealias)
    r1 = m * m * np.fft.fft(n1)
    r2 = m * m * np.fft.fft(n2)
    sym = helmholtz_symbol(grid, params)
    # closed-form 2x2 inverse per mode
    zh = (speed * sym * r1 + r2 / (params.delta + params.gamma)) / det
    vh = ((1.0 - params.gamma) * r1 + speed * r2) / det
    zeta = np.fft.ifft(zh).real
    v = np.fft.ifft(vh).real
    return WaveState.from_zeta_v(grid, params, zeta, v), m


def auto_initial_guess(grid: SpectralGrid, params: ModelParameters, speed: float) -> WaveState:
    """sech^2 seed scaled from the ODE oracle's turning point.

    Amplitude |zeta_s(v*)|, width 1/lambda from the saddle rate, and the
    long-wave proportionality v = c_s (gamma + delta) zeta.
    """
    problem = oracle.TravelingWaveProblem(params=params, speed=speed)
    curve = oracle.potential(problem)
    amp = abs(oracle.reconstruct_zeta(curve, curve.turning_point))
    lam = curve.saddle_rate
    # sech^2 via exp to avoid cosh overflow on wide domains
    e = np.exp(-np.abs(grid.nodes) * lam)
    sech2 = (2.0 * e / (1.0 + e * e)) ** 2
    zeta = np.sign(params.k_coeff) * amp * sech2
    v = speed * (params.gamma + params.delta) * zeta
    return WaveState.from_zeta_v(grid, params, zeta, v)


def solve(grid: SpectralGrid, params: ModelParameters, config: SolverConfig) -> tuple[WaveState, SolveReport]:
    """Run the iteration to the dual residual/update tolerance.

    Raises
    ------
    NoSolitaryWaveError
        If c_s^2 <= c_crit^2 or the nonlinearity coefficient is zero.
    NotConvergedError
        If max_iter is reached; the partial report rides on the exception.
    DomainTooSmallError
        Under ``strict_domain`` when the converged profile does not decay
        below ``boundary_decay_tol`` (relative) at the boundary.
    """
    speed = config.speed
    if params.k_coeff == 0.0:
        raise NoSolitaryWaveError("nonlinearity coefficient is zero (delta^2 == gamma)")
    if not speed**2 > params.c_crit**2:
        raise NoSolitaryWaveError(
            f"speed {speed} is not supersonic: c_s^2 <= c_crit^2 = {params.c_crit ** 2:.6g}"
        )
    if speed < 0.0:
        raise ValueError(
            "solver computes right-moving waves; map the result with oracle.negative_speed_map for c_s < 0"
        )

    started = time.perf_counter()
    state = config.initial_guess
    if state is None:
        state = auto_initial_guess(grid, params, speed)

    report = SolveReport()
    history = [np.concatenate([state.zeta, state.v])]
    cycle = config.mpe_cycle

    converged = False
    for _ in range(config.max_iter):
        new_state, m = petviashvili_step(grid, params, config, state)
        report.iterations += 1
        res = residual_norm(grid, params, speed, new_state, dealias=config.dealias)
        upd = max(
            float(np.max(np.abs(new_state.zeta - state.zeta))),
            float(np.max(np.abs(new_state.v - state.v))),
        )
        report.residual_history.append(res)
        report.m_history.append(m)
        state = new_state
        if res <= config.tol_residual and upd <= config.tol_update:
            converged = True
            break
        if cycle is not None:
            history.append(np.concatenate([state.zeta, state.v]))
            if len(history) == cycle + 2:
                stacked = extrapolate(history, cycle)
                state = WaveState.from_zeta_v(grid, params, stacked[: grid.n], stacked[grid.n:])
                history = [np.concatenate([state.zeta, state.v])]

    report.wall_time = time.perf_counter() - started
    report.converged = converged
    peak = float(np.max(np.abs(state.zeta)))
    edge = float(np.abs(state.zeta[0]))
    report.boundary_ratio = edge / peak if peak > 0 else 0.0

    if not converged:
        raise NotConvergedError(
            f"no convergence in {config.max_iter} iterations "
            f"(residual {report.residual_history[-1]:.3e})",
            report=report,
        )

    if report.boundary_ratio > config.boundary_decay_tol:
        msg = (
            f"profile decays only to {report.boundary_ratio:.3e} of its peak at the boundary; "
            f"the domain half-length {grid.half_length} is too small"
        )
        if config.strict_domain:
            raise DomainTooSmallError(msg)
        report.warnings.append(msg)
        warnings.warn(msg, DomainTooSmallWarning)

    return state, report
