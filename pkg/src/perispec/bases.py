"""Labeled basis functions shared by the two spectral methods.

Basis elements are identified by short string labels ("const", "cos3",
"sin3" for the real trigonometric family; "T0", "T1", ... for the shifted
Chebyshev family) so that eigenvector coefficient lists stay meaningful in
serialized output and eigenfunctions can be re-evaluated anywhere.
"""

from __future__ import annotations

import numpy as np

__all__ = ["fourier_labels", "chebyshev_labels", "basis_matrix",
           "evaluate_eigenfunction"]


def fourier_labels(n: int) -> list:
    labels = ["const"]
    for h in range(1, n // 2 + 1):
        labels.append(f"cos{h}")
        labels.append(f"sin{h}")
    return labels


def chebyshev_labels(degrees) -> list:
    return [f"T{k}" for k in degrees]


def _fourier_column(label, x):
    if label == "const":
        return np.ones_like(x)
    h = int(label[3:])
    return np.cos(h * x) if label.startswith("cos") else np.sin(h * x)


def _chebyshev_column(label, x, domain):
    k = int(label[1:])
    a, b = domain
    c, r = 0.5 * (a + b), 0.5 * (b - a)
    s = np.clip((x - c) / r, -1.0, 1.0)
    return np.cos(k * np.arccos(s))


def basis_matrix(labels, basis_kind, domain, x) -> np.ndarray:
    """Matrix B[i, j] = (j-th basis function)(x_i)."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    cols = []
    for label in labels:
        if basis_kind == "fourier":
            cols.append(_fourier_column(label, x))
        elif basis_kind == "chebyshev":
            cols.append(_chebyshev_column(label, x, domain))
        else:
            raise ValueError(f"unknown basis kind {basis_kind!r}")
    return np.column_stack(cols)


def evaluate_eigenfunction(decomp, k: int, x):
    """Value(s) of the k-th eigenfunction at x from its stored coefficients."""
    if not 0 <= k < len(decomp.values):
        raise ValueError(f"eigenfunction index {k} out of range "
                         f"[0, {len(decomp.values)})")
    xarr = np.atleast_1d(np.asarray(x, dtype=float))
    vals = basis_matrix(decomp.basis_labels, decomp.basis_kind,
                        decomp.domain, xarr) @ decomp.vectors[:, k]
    return float(vals[0]) if np.isscalar(x) or np.ndim(x) == 0 else vals
