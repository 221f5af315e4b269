"""Hermitian eigenproblems and entropy functionals.

Everything here operates on plain ``numpy`` arrays.  Structured wrappers
(density matrices, Bloch vectors, observables) live in :mod:`blochmon.bloch`;
they validate on construction and hand their raw arrays to these routines.

All entropies are in nats.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BlochmonError, NotAStateError, NotHermitianError

# Numerical guards, shared across the package.
HERMITICITY_TOL = 1e-10     # max elementwise |M - M^dag|
EIGENVALUE_FLOOR = -1e-10   # anything below this is not a state
ZERO_EIGENVALUE = 1e-14     # weights below this count as exactly zero
SUPPORT_WEIGHT = 1e-12      # population threshold for the +inf rule


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    ``eigenvectors[:, k]`` is the unit eigenvector for ``eigenvalues[k]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _require_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise BlochmonError(f"expected a square matrix, got shape {m.shape}")
    return m


def require_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Return ``m`` if it is Hermitian within ``tol``, else raise."""
    m = _require_square(m)
    dev = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if dev > tol:
        raise NotHermitianError(f"matrix deviates from Hermiticity by {dev:.3e}")
    return m


def eigh(m: np.ndarray) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    m:
        Square matrix, Hermitian within ``HERMITICITY_TOL``.

    Returns
    -------
    Spectrum
        Real eigenvalues in descending order with matching orthonormal
        eigenvector columns, so ``V @ diag(w) @ V.conj().T`` reconstructs
        the input.
    """
    m = require_hermitian(m)
    w, v = np.linalg.eigh(m)
    w = np.ascontiguousarray(w[::-1])
    v = np.ascontiguousarray(v[:, ::-1])
    w.flags.writeable = False
    v.flags.writeable = False
    return Spectrum(eigenvalues=w, eigenvectors=v)


def _state_eigenvalues(rho: np.ndarray) -> np.ndarray:
    """Eigenvalues of a density matrix, validated and clipped.

    Rejects non-Hermitian input, trace away from 1, or an eigenvalue below
    ``EIGENVALUE_FLOOR``.  Small negatives in ``[EIGENVALUE_FLOOR, 0)`` are
    rounding debris and are clipped to zero.
    """
    rho = require_hermitian(rho)
    tr = float(np.real(np.trace(rho)))
    if abs(tr - 1.0) > 1e-8:
        raise NotAStateError(f"trace {tr!r} is not 1")
    w = np.linalg.eigvalsh(rho)
    if w.min() < EIGENVALUE_FLOOR:
        raise NotAStateError(f"eigenvalue {w.min():.3e} below {EIGENVALUE_FLOOR}")
    return np.clip(w, 0.0, None)


def von_neumann_entropy(rho: np.ndarray) -> float:
    """S(rho) = -Tr rho ln rho in nats.

    Eigenvalues below ``ZERO_EIGENVALUE`` contribute nothing (0 ln 0 = 0).
    Rounding can leave a pure state's top eigenvalue a hair above 1 and the
    sum a hair negative; such slivers are clamped to zero.
    """
    w = _state_eigenvalues(rho)
    w = w[w >= ZERO_EIGENVALUE]
    value = float(-np.sum(w * np.log(w)))
    if value < 0.0:
        if value < -1e-10:
            raise BlochmonError(f"entropy {value:.3e} violates positivity")
        value = 0.0
    return value


def relative_entropy(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Umegaki relative entropy S(rho || sigma) in nats.

    Returns ``inf`` when ``sigma`` lacks support (eigenvalue below
    ``ZERO_EIGENVALUE``) in a direction where ``rho`` carries population
    above ``SUPPORT_WEIGHT``.  Tiny negative results from rounding are
    clamped to zero.
    """
    p = _state_eigenvalues(rho)
    sig = eigh(np.asarray(sigma))
    q, v = sig.eigenvalues, sig.eigenvectors
    if abs(float(np.sum(q)) - 1.0) > 1e-8 or q.min() < EIGENVALUE_FLOOR:
        raise NotAStateError("second argument is not a density matrix")

    # population of rho along each eigenvector of sigma
    overlap = np.real(np.einsum("ij,ij->j", v.conj(), np.asarray(rho) @ v))
    dead = q < ZERO_EIGENVALUE
    if np.any(overlap[dead] > SUPPORT_WEIGHT):
        return float("inf")

    term_rho = float(-von_neumann_entropy(rho))           # Tr rho ln rho
    live = ~dead
    term_sigma = float(np.sum(overlap[live] * np.log(np.clip(q[live], ZERO_EIGENVALUE, None))))
    value = term_rho - term_sigma
    if value < 0.0:
        if value < -1e-10:
            raise BlochmonError(f"relative entropy {value:.3e} violates positivity")
        value = 0.0
    return value


def schatten_norm(m: np.ndarray, p: int) -> float:
    """Schatten p-norm for p in {1, 2}: trace norm or Frobenius norm."""
    m = _require_square(np.asarray(m))
    if p == 1:
        return float(np.sum(np.linalg.svd(m, compute_uv=False)))
    if p == 2:
        return float(np.linalg.norm(m, "fro"))
    raise BlochmonError(f"unsupported Schatten order {p!r}")


def binary_entropy(t: float) -> float:
    """H_bin(t) = -t ln t - (1-t) ln(1-t), defined on [0, 1]."""
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise BlochmonError(f"binary entropy argument {t!r} outside [0, 1]")
    if t < ZERO_EIGENVALUE or 1.0 - t < ZERO_EIGENVALUE:
        return 0.0
    return float(-t * np.log(t) - (1.0 - t) * np.log(1.0 - t))
