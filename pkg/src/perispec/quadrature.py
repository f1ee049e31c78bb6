"""Integration rules and the FFT-based kernel cosine transform.

Three rules back the two assembly paths: the periodic trapezoid for Fourier
inner products, the interior-node Gauss-Chebyshev rule for the weighted
Chebyshev inner products, and an FFT evaluation of the kernel moments
gamma_h = int C(y) cos(h y) dy shared by the Fourier assembly and the
cross-route identity checks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .kernels import Micromodulus

__all__ = [
    "MeshKind",
    "Mesh",
    "uniform_mesh",
    "gcl_mesh",
    "trapezoid_periodic",
    "gauss_chebyshev_nodes",
    "gauss_chebyshev",
    "cosine_transform_kernel",
]


class MeshKind(enum.Enum):
    UNIFORM_PERIODIC = "uniform_periodic"
    GAUSS_CHEBYSHEV_LOBATTO = "gauss_chebyshev_lobatto"


@dataclass(frozen=True)
class Mesh:
    nodes: np.ndarray
    kind: MeshKind

    def __len__(self):
        return len(self.nodes)


def uniform_mesh(a: float, b: float, n: int) -> Mesh:
    """Uniform periodic mesh x_j = a + (b-a) j/n, j = 0..n (n even, >= 2)."""
    if n < 2 or n % 2 != 0:
        raise ValueError(f"uniform_mesh needs an even n >= 2, got {n}")
    if not a < b:
        raise ValueError(f"need a < b, got [{a}, {b}]")
    nodes = a + (b - a) * np.arange(n + 1) / n
    return Mesh(nodes=nodes, kind=MeshKind.UNIFORM_PERIODIC)


def gcl_mesh(n: int) -> Mesh:
    """Gauss-Chebyshev-Lobatto mesh x_j = pi + pi(-cos(pi j/n)) on [0, 2pi]."""
    if n < 2:
        raise ValueError(f"gcl_mesh needs n >= 2, got {n}")
    nodes = np.pi + np.pi * (-np.cos(np.pi * np.arange(n + 1) / n))
    return Mesh(nodes=nodes, kind=MeshKind.GAUSS_CHEBYSHEV_LOBATTO)


def trapezoid_periodic(values, period: float) -> float:
    """(period/N) * sum(values) for one period of uniform samples.

    ``values`` must cover exactly one period with the duplicated endpoint
    omitted; spectrally accurate for smooth periodic integrands.
    """
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise ValueError("trapezoid_periodic got an empty sample list")
    return float(period / values.size * np.sum(values))


def gauss_chebyshev_nodes(n: int) -> np.ndarray:
    """Interior Chebyshev points mapped to [0, 2pi]: x_j = pi + pi s_j."""
    if n <= 0:
        raise ValueError(f"gauss_chebyshev needs n > 0, got {n}")
    j = np.arange(n)
    return np.pi + np.pi * np.cos((2 * j + 1) * np.pi / (2 * n))


def gauss_chebyshev(fvals_at_nodes, n: int) -> float:
    """int_0^{2pi} f(x) w(x) dx with w the shifted Chebyshev weight.

    Samples must sit at ``gauss_chebyshev_nodes(n)``; the rule is
    pi * (pi/n) * sum(f), exact for f polynomial in (x-pi)/pi of degree < 2n.
    """
    if n <= 0:
        raise ValueError(f"gauss_chebyshev needs n > 0, got {n}")
    fvals = np.asarray(fvals_at_nodes, dtype=float)
    if fvals.size != n:
        raise ValueError(f"expected {n} samples, got {fvals.size}")
    return float(np.pi * (np.pi / n) * np.sum(fvals))


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)

# Aliasing of the raw sampled transform decays too slowly (the kernel is not
# band-limited), so the grid never drops below this floor regardless of max_h.
_GRID_FLOOR = 4096


def _sliver(kernel, lo, hi, freqs):
    """Exact-quadrature contribution of a sub-cell [lo, hi] to all gamma_h."""
    if hi - lo <= 0.0:
        return 0.0
    mid, hw = 0.5 * (lo + hi), 0.5 * (hi - lo)
    y = mid + hw * _GL_NODES
    return hw * (_GL_WEIGHTS * kernel.evaluate(y)) @ np.cos(np.outer(y, freqs))


def cosine_transform_kernel(kernel: Micromodulus, max_h: int,
                            oversample: int = 8) -> np.ndarray:
    """gamma_h = int_{-delta}^{delta} C(y) cos(h y) dy for h = 0..max_h.

    The bulk of the integral is a node-aligned composite trapezoid on a
    power-of-two periodic grid over [-pi, pi), evaluated for all h at once by
    a real FFT; the partial cells at +/-delta (where the hard cutoff would
    otherwise break the trapezoid's second-order endpoint cancellation) are
    integrated by Gauss-Legendre.  Accumulating grid indices modulo the grid
    size periodizes the kernel by wrap-around when delta >= pi, which is
    exact for integer h.
    """
    if max_h < 0:
        raise ValueError(f"max_h must be >= 0, got {max_h}")
    if oversample < 1:
        raise ValueError(f"oversample must be >= 1, got {oversample}")
    m = 1 << int(np.ceil(np.log2(max(oversample * max(max_h, 1), _GRID_FLOOR))))
    dx = 2 * np.pi / m
    d = kernel.delta
    freqs = np.arange(max_h + 1)

    jlo = int(np.ceil(-d / dx))
    jhi = int(np.floor(d / dx))
    acc = np.zeros(m)
    if jhi >= jlo:
        js = np.arange(jlo, jhi + 1)
        wts = np.ones(js.size)
        wts[0] = 0.5
        wts[-1] = 0.5
        np.add.at(acc, js % m, kernel.evaluate(js * dx) * wts)
        gamma = np.fft.rfft(acc).real[: max_h + 1] * dx
        gamma = gamma + _sliver(kernel, -d, jlo * dx, freqs)
        gamma = gamma + _sliver(kernel, jhi * dx, d, freqs)
    else:
        # horizon narrower than one grid cell: the slivers are the integral
        gamma = np.zeros(max_h + 1) + _sliver(kernel, -d, d, freqs)
    return gamma
