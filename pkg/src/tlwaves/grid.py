"""Periodic Fourier collocation grid on (-l, l).

DFT normalization convention used throughout the package: unnormalized
forward transform (numpy's ``fft``), ``1/N`` inverse.  Parseval then reads
``sum |f_j|^2 == (1/N) * sum |fhat_k|^2``.  All per-mode symbol operations
(differentiation, Helmholtz) are normalization-invariant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .params import ModelParameters


@dataclass(frozen=True)
class SpectralGrid:
    """Uniform collocation grid with precomputed wavenumbers.

    Parameters
    ----------
    half_length : float
        Half-width l of the periodic interval (-l, l).
    n : int
        Number of collocation points, even and >= 8.

    Attributes
    ----------
    nodes : (n,) array
        x_j = -l + j*h with h = 2l/n, j = 0..n-1.
    mode_numbers : (n,) int array
        Signed integer mode indices in FFT layout: 0..n/2-1, -n/2..-1.
    wavenumbers : (n,) array
        Scaled wavenumbers k' = pi*k/l in the same layout.
    """

    half_length: float
    n: int
    nodes: np.ndarray = field(init=False, repr=False, compare=False)
    mode_numbers: np.ndarray = field(init=False, repr=False, compare=False)
    wavenumbers: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.half_length > 0.0:
            raise ValueError(f"half_length must be positive, got {self.half_length}")
        if self.n % 2 != 0 or self.n < 8:
            raise ValueError(f"mode count n must be even and >= 8, got {self.n}")
        h = 2.0 * self.half_length / self.n
        nodes = -self.half_length + h * np.arange(self.n)
        modes = np.fft.fftfreq(self.n, d=1.0 / self.n).astype(np.int64)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "mode_numbers", modes)
        object.__setattr__(self, "wavenumbers", np.pi * modes / self.half_length)

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_length / self.n


def _check_size(grid: SpectralGrid, values: np.ndarray) -> np.ndarray:
    values = np.asarray(values)
    if values.shape != (grid.n,):
        raise ValueError(f"grid function must have shape ({grid.n},), got {values.shape}")
    return values


def forward_transform(grid: SpectralGrid, values: np.ndarray) -> np.ndarray:
    """Discrete Fourier coefficients of a grid function (unnormalized)."""
    return np.fft.fft(_check_size(grid, values))


def inverse_transform(grid: SpectralGrid, spectrum: np.ndarray) -> np.ndarray:
    """Inverse DFT with the 1/N factor. Returns the complex samples."""
    return np.fft.ifft(_check_size(grid, spectrum))


def differentiate(grid: SpectralGrid, values: np.ndarray, order: int = 1) -> np.ndarray:
    """Pseudospectral derivative of the given order.

    Multiplies mode k by (i k')^order.  For odd orders the unmatched
    Nyquist mode k = -n/2 is zeroed so real input stays real.
    """
    if order < 1:
        raise ValueError(f"derivative order must be >= 1, got {order}")
    spectrum = forward_transform(grid, values)
    factor = (1j * grid.wavenumbers) ** order
    if order % 2 == 1:
        factor = factor.copy()
        factor[grid.n // 2] = 0.0
    return np.fft.ifft(factor * spectrum).real


def helmholtz_symbol(grid: SpectralGrid, params: ModelParameters) -> np.ndarray:
    """Per-mode symbol 1 + beta*k'^2 of the operator 1 - beta*d_xx.

    Strictly >= 1 for beta > 0, so the inverse never divides by a small
    number.
    """
    return 1.0 + params.beta * grid.wavenumbers**2


def helmholtz_apply(grid: SpectralGrid, params: ModelParameters, values: np.ndarray) -> np.ndarray:
    """Apply 1 - beta*d_xx, i.e. recover u from the smoothed velocity v."""
    spectrum = forward_transform(grid, values)
    return np.fft.ifft(helmholtz_symbol(grid, params) * spectrum).real


def helmholtz_solve(grid: SpectralGrid, params: ModelParameters, values: np.ndarray) -> np.ndarray:
    """Invert 1 - beta*d_xx, i.e. smooth u into v."""
    spectrum = forward_transform(grid, values)
    return np.fft.ifft(spectrum / helmholtz_symbol(grid, params)).real


def grid_function_columns(grid: SpectralGrid, values: np.ndarray) -> dict:
    """(x_j, value) columns for CSV serialization."""
    return {"x": grid.nodes.copy(), "value": _check_size(grid, values).astype(float).copy()}


def spectrum_columns(grid: SpectralGrid, spectrum: np.ndarray) -> dict:
    """(k, k', re, im) columns for CSV serialization of a full spectrum."""
    spectrum = _check_size(grid, spectrum)
    return {
        "k": grid.mode_numbers.astype(float),
        "kp": grid.wavenumbers.copy(),
        "re": np.real(spectrum).astype(float),
        "im": np.imag(spectrum).astype(float),
    }


def padded_product(grid: SpectralGrid, f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Pointwise product with 3/2-rule zero padding (alias-free quadratics).

    Optional alternative to the plain Hadamard product in the solver's
    nonlinearity; off by default since the profiles of interest decay far
    below round-off in spectrum before the Nyquist mode.
    """
    f = _check_size(grid, f)
    g = _check_size(grid, g)
    n = grid.n
    m = 3 * n // 2
    half = n // 2
    fpad = np.zeros(m, dtype=complex)
    gpad = np.zeros(m, dtype=complex)
    fh = np.fft.fft(f)
    gh = np.fft.fft(g)
    fpad[:half] = fh[:half]
    fpad[-half:] = fh[-half:]
    gpad[:half] = gh[:half]
    gpad[-half:] = gh[-half:]
    # m/n rescale keeps physical values on the fine grid, n/m undoes it
    prod = np.fft.ifft(fpad) * np.fft.ifft(gpad) * (m / n) ** 2
    ph = np.fft.fft(prod)
    out = np.empty(n, dtype=complex)
    out[:half] = ph[:half]
    out[-half:] = ph[-half:]
    return np.fft.ifft(out).real * (n / m)
