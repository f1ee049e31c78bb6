"""Dense generalized eigensolver for A w = lambda M w with diagonal M.

The Fourier assembly produces a symmetric (indeed diagonal) A; the weighted
Chebyshev assembly produces a structurally nonsymmetric A whose spectrum is
real.  Both reduce against the diagonal mass matrix: the symmetric path goes
through D^{-1/2} A D^{-1/2} and returns an M-orthonormal eigenbasis, the
nonsymmetric path solves M^{-1} A directly and M-normalizes each eigenvector
individually.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

__all__ = ["AssembledSystem", "EigenDecomposition", "MalformedSystemError", "solve"]

_SYMMETRY_RTOL = 1e-10
_IMAG_RTOL = 1e-5


class MalformedSystemError(ValueError):
    pass


@dataclass(frozen=True)
class AssembledSystem:
    """Stiffness matrix, diagonal mass entries, and basis metadata."""

    a: np.ndarray
    m_diag: np.ndarray
    basis_labels: list
    symmetric: bool
    basis_kind: str       # "fourier" | "chebyshev"
    domain: tuple

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float)
        m = np.asarray(self.m_diag, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise MalformedSystemError(f"A must be square, got {a.shape}")
        if m.shape != (a.shape[0],):
            raise MalformedSystemError("m_diag length must match A")
        if len(self.basis_labels) != a.shape[0]:
            raise MalformedSystemError("basis_labels length must match A")


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues with M-normalized coefficient vectors (columns)."""

    values: np.ndarray
    vectors: np.ndarray
    basis_labels: list
    basis_kind: str
    domain: tuple

    def __len__(self):
        return len(self.values)


def _fix_signs(vectors):
    for k in range(vectors.shape[1]):
        idx = int(np.argmax(np.abs(vectors[:, k])))
        if vectors[idx, k] < 0:
            vectors[:, k] = -vectors[:, k]
    return vectors


def solve(system: AssembledSystem, zero_tol: float = 0.0) -> EigenDecomposition:
    """Full sorted spectrum of A w = lambda M w.

    Eigenvalues with |lambda| <= zero_tol are clamped to exactly 0 (the zero
    mode is exact for the periodic operator and the modal dynamics
    special-case it).  Deterministic for identical input: stable sort and a
    largest-coefficient-positive sign convention.
    """
    a = np.asarray(system.a, dtype=float)
    m = np.asarray(system.m_diag, dtype=float)
    if np.any(m <= 0):
        raise MalformedSystemError("mass diagonal must be strictly positive")

    if system.symmetric:
        scale = np.linalg.norm(a)
        if scale > 0 and np.linalg.norm(a - a.T) > _SYMMETRY_RTOL * scale:
            raise MalformedSystemError("system flagged symmetric but A is not")
        dinv = 1.0 / np.sqrt(m)
        b = dinv[:, None] * a * dinv[None, :]
        b = 0.5 * (b + b.T)
        values, vecs = scipy.linalg.eigh(b)
        vectors = dinv[:, None] * vecs          # w^T M w = I by construction
    else:
        values, vecs = scipy.linalg.eig(a / m[:, None])
        vmax = max(1.0, np.max(np.abs(values.real)))
        if np.max(np.abs(values.imag)) > _IMAG_RTOL * vmax:
            raise MalformedSystemError(
                "nonsymmetric system produced significantly complex eigenvalues")
        values = values.real
        vectors = vecs.real
        order = np.argsort(values, kind="stable")
        values = values[order]
        vectors = vectors[:, order]
        norms = np.sqrt(np.einsum("ik,i,ik->k", vectors, m, vectors))
        vectors = vectors / norms[None, :]

    values = values.copy()
    values[np.abs(values) <= zero_tol] = 0.0
    vectors = _fix_signs(np.ascontiguousarray(vectors))
    return EigenDecomposition(values=values, vectors=vectors,
                              basis_labels=list(system.basis_labels),
                              basis_kind=system.basis_kind,
                              domain=system.domain)
