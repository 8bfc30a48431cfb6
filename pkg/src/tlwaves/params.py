"""Physical parameters of the two-layer internal wave model.

The model is posed in nondimensional variables on the density ratio
``gamma = rho_1/rho_2`` and depth ratio ``delta = d_1/d_2`` of the two
fluid layers.  Every derived constant used elsewhere in the package is
computed here once:

* ``beta``    dispersion coefficient, (1 + gamma*delta) / (3*delta*(gamma + delta))
* ``k_coeff`` quadratic nonlinearity coefficient, (delta^2 - gamma) / (delta + gamma)^2
* ``c_crit``  critical wave speed, sqrt((1 - gamma) / (delta + gamma))

Solitary waves exist only for speeds with ``c_s^2 > c_crit^2``, and their
polarity (elevation vs. depression) is the sign of ``k_coeff``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Mapping

from .errors import ParameterDomainError


class WaveType(enum.Enum):
    ELEVATION = "elevation"
    DEPRESSION = "depression"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class ModelParameters:
    """Immutable bundle of the two ratios and all derived constants.

    Use :func:`make_parameters` instead of constructing directly; it
    validates the regime and fills in the derived fields.
    """

    gamma: float
    delta: float
    beta: float
    k_coeff: float
    c_crit: float


def make_parameters(gamma: float, delta: float) -> ModelParameters:
    """Validate (gamma, delta) and compute the derived constants.

    gamma = 0 is accepted as the surface-wave limit (single active layer);
    gamma >= 1 would invert the stable stratification and is rejected.

    Raises
    ------
    ParameterDomainError
        If gamma is outside [0, 1) or delta <= 0.
    """
    gamma = float(gamma)
    delta = float(delta)
    if not (0.0 <= gamma < 1.0) or not math.isfinite(gamma):
        raise ParameterDomainError(f"density ratio gamma must lie in [0, 1), got {gamma}")
    if not (delta > 0.0) or not math.isfinite(delta):
        raise ParameterDomainError(f"depth ratio delta must be positive, got {delta}")

    beta = (1.0 + gamma * delta) / (3.0 * delta * (gamma + delta))
    k_coeff = (delta * delta - gamma) / (delta + gamma) ** 2
    c_crit = math.sqrt((1.0 - gamma) / (delta + gamma))
    return ModelParameters(gamma=gamma, delta=delta, beta=beta, k_coeff=k_coeff, c_crit=c_crit)


def wave_type(params: ModelParameters) -> WaveType:
    """Polarity of the solitary wave carried by these parameters.

    Elevation for k_coeff > 0, depression for k_coeff < 0.  The degenerate
    case delta^2 == gamma (exact comparison) kills the quadratic
    nonlinearity entirely, so no solitary wave exists there.
    """
    if params.k_coeff > 0.0:
        return WaveType.ELEVATION
    if params.k_coeff < 0.0:
        return WaveType.DEPRESSION
    return WaveType.DEGENERATE


def params_to_config(params: ModelParameters) -> dict:
    """JSON-ready config block. Derived fields are never serialized."""
    return {"gamma": params.gamma, "delta": params.delta}


def params_from_config(config: Mapping) -> ModelParameters:
    """Rebuild parameters from a config block, recomputing derived fields."""
    try:
        gamma = config["gamma"]
        delta = config["delta"]
    except KeyError as exc:
        raise ParameterDomainError(f"config block missing key {exc}") from exc
    return make_parameters(gamma, delta)
