"""Micromodulus kernel models, the zeroth moment, and the multiplier oracle.

The micromodulus C is an even, nonnegative kernel supported on the horizon
interval [-delta, delta].  Its zeroth moment beta = int C and the frequency
response lambda(nu) = int C(y) (1 - cos(nu y)) dy are the exact reference
quantities every discrete spectrum in this package is validated against, so
both are computed with adaptive quadrature at tolerances far below anything
the Galerkin solvers can resolve.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad

__all__ = [
    "Micromodulus",
    "MultiplierSample",
    "beta",
    "fourier_multiplier",
    "multiplier_curve",
    "parse_kernel_spec",
]

_QUAD_TOL = 1e-12
_TABLE_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class Micromodulus:
    """Kernel descriptor: family + parameters + horizon ``delta``.

    ``kind`` is one of ``"gaussian"`` (params: amplitude, width),
    ``"tophat"`` (params: height) or ``"table"`` (params: offsets, values,
    linearly interpolated).  Evaluation is hard-truncated to ``|y| <= delta``.
    """

    kind: str
    delta: float
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.delta > 0:
            raise ValueError(f"horizon delta must be positive, got {self.delta}")
        if self.kind == "gaussian":
            if self.params["width"] <= 0 or self.params["amplitude"] < 0:
                raise ValueError("gaussian kernel needs width > 0, amplitude >= 0")
        elif self.kind == "tophat":
            if self.params["height"] < 0:
                raise ValueError("tophat height must be nonnegative")
        elif self.kind == "table":
            self._validate_table()
        else:
            raise ValueError(f"unknown kernel kind {self.kind!r}")

    def _validate_table(self):
        offsets = np.asarray(self.params["offsets"], dtype=float)
        values = np.asarray(self.params["values"], dtype=float)
        if offsets.ndim != 1 or offsets.shape != values.shape or len(offsets) < 2:
            raise ValueError("tabulated kernel needs two equal-length columns")
        if np.any(np.diff(offsets) <= 0):
            raise ValueError("tabulated offsets must be strictly increasing")
        if np.any(values < 0):
            raise ValueError("tabulated kernel values must be nonnegative")
        # symmetric grid: offsets must come in +/- pairs and values must agree
        if np.max(np.abs(offsets + offsets[::-1])) > _TABLE_SYMMETRY_TOL:
            raise ValueError("tabulated kernel grid must be symmetric about 0")
        if np.max(np.abs(values - values[::-1])) > _TABLE_SYMMETRY_TOL:
            raise ValueError("tabulated kernel must be even: C(y) == C(-y)")

    @classmethod
    def gaussian(cls, amplitude, width, delta):
        return cls("gaussian", float(delta),
                   {"amplitude": float(amplitude), "width": float(width)})

    @classmethod
    def tophat(cls, height, delta):
        return cls("tophat", float(delta), {"height": float(height)})

    @classmethod
    def tabulated(cls, samples, delta):
        samples = sorted((float(o), float(v)) for o, v in samples)
        offsets = np.array([s[0] for s in samples])
        values = np.array([s[1] for s in samples])
        return cls("table", float(delta), {"offsets": offsets, "values": values})

    def evaluate(self, y):
        """C(y), vectorized; zero outside the horizon."""
        y = np.asarray(y, dtype=float)
        inside = np.abs(y) <= self.delta
        if self.kind == "gaussian":
            p = self.params
            vals = p["amplitude"] * np.exp(-((y / p["width"]) ** 2))
        elif self.kind == "tophat":
            vals = np.full_like(y, self.params["height"], dtype=float)
        else:
            vals = np.interp(y, self.params["offsets"], self.params["values"],
                             left=0.0, right=0.0)
        out = np.where(inside, vals, 0.0)
        return out if out.ndim else float(out)

    def __call__(self, y):
        return self.evaluate(y)

    def _quad_breakpoints(self):
        if self.kind != "table":
            return None
        off = self.params["offsets"]
        pts = off[np.abs(off) < self.delta]
        return list(pts) if len(pts) else None


def beta(kernel: Micromodulus) -> float:
    """Zeroth moment int_{-delta}^{delta} C(y) dy by adaptive quadrature."""
    val, _ = quad(kernel.evaluate, -kernel.delta, kernel.delta,
                  epsabs=_QUAD_TOL, epsrel=_QUAD_TOL, limit=500,
                  points=kernel._quad_breakpoints())
    return val


@dataclass(frozen=True)
class MultiplierSample:
    """One point (nu, lambda(nu)) on the exact frequency-response curve."""

    nu: float
    lam: float


def fourier_multiplier(kernel: Micromodulus, nu: float) -> MultiplierSample:
    """lambda(nu) = int_{-delta}^{delta} C(y) (1 - cos(nu y)) dy.

    This is the closed-form eigenvalue of the periodic nonlocal operator at
    frequency nu, and serves as the independent oracle for the Galerkin
    spectra.  Result is clamped into [0, 2*beta] against roundoff.
    """
    d = kernel.delta
    # scale subinterval count with the oscillation count of cos(nu y)
    limit = max(200, int(20 * abs(nu) * d / np.pi) + 50)
    val, _ = quad(lambda y: kernel.evaluate(y) * (1.0 - np.cos(nu * y)),
                  -d, d, epsabs=_QUAD_TOL, epsrel=_QUAD_TOL, limit=limit,
                  points=kernel._quad_breakpoints())
    return MultiplierSample(nu=float(nu), lam=max(0.0, val))


def multiplier_curve(kernel: Micromodulus, nu_min: float, nu_max: float,
                     count: int) -> list[MultiplierSample]:
    """Equispaced multiplier samples on [nu_min, nu_max], endpoints included."""
    if count < 2:
        raise ValueError(f"multiplier_curve needs count >= 2, got {count}")
    if not nu_min < nu_max:
        raise ValueError(f"need nu_min < nu_max, got [{nu_min}, {nu_max}]")
    nus = np.linspace(nu_min, nu_max, count)
    return [fourier_multiplier(kernel, nu) for nu in nus]


def parse_kernel_spec(spec: str, delta: float) -> Micromodulus:
    """Build a kernel from the CLI string form.

    ``gaussian:<amplitude>:<width>``, ``tophat:<height>`` or
    ``table:<path-to-two-column-CSV>``.
    """
    parts = spec.split(":")
    kind = parts[0].lower()
    try:
        if kind == "gaussian":
            amplitude, width = float(parts[1]), float(parts[2])
            return Micromodulus.gaussian(amplitude, width, delta)
        if kind == "tophat":
            return Micromodulus.tophat(float(parts[1]), delta)
        if kind == "table":
            path = ":".join(parts[1:])
            data = np.loadtxt(path, delimiter=",", comments="#")
            if data.ndim != 2 or data.shape[1] != 2:
                raise ValueError(f"kernel table {path!r} must have two columns")
            return Micromodulus.tabulated(data, delta)
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad kernel spec {spec!r}: {exc}") from exc
    raise ValueError(f"unknown kernel family in spec {spec!r}")
