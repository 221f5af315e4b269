"""Generalized Bloch representation for d-level systems.

A density matrix is written as

    rho = (1/d) (I + c_d * r . L)

where ``L`` is the orthogonal generator basis built by :func:`gellmann_basis`
(``Tr L_i L_j = 2 delta_ij``) and ``c_d = sqrt(d (d - 1) / 2)`` scales the
coordinate vector ``r`` so that pure states sit on the unit shell for d = 2
and all states satisfy ``||r|| <= 1`` for every d.

A nondegenerate observable enters through the Bloch images of its rank-1
eigenprojectors.  Those d unit vectors form a regular simplex centered at
the origin; outcome probabilities are affine in ``r`` along them.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionError, NotAStateError, ObservableError
from .linalg import eigh, require_hermitian

# Reject eigenvalue gaps below this: the simplex needs d distinct outcomes.
DEGENERACY_TOL = 1e-9
STATE_EIG_FLOOR = -1e-10
NORM_SLACK = 1e-12


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class GellMannBasis:
    """Generator basis for dimension ``dim``.

    ``matrices`` has shape ``(dim**2 - 1, dim, dim)``: symmetric pair
    generators first (lexicographic index pairs), then antisymmetric pairs
    in the same order, then the diagonal ladder.  ``bloch_scale`` is
    ``sqrt(dim (dim - 1) / 2)``.
    """

    dim: int
    matrices: np.ndarray
    bloch_scale: float


@dataclass(frozen=True, eq=False)
class BlochVector:
    """Real coordinate vector of a state, ``dim**2 - 1`` components."""

    dim: int
    vec: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.vec, dtype=float)
        k = self.dim * self.dim - 1
        if self.dim < 2:
            raise DimensionError(f"dimension {self.dim} below 2")
        if v.shape != (k,):
            raise DimensionError(f"expected {k} components for dim {self.dim}, got shape {v.shape}")
        n = float(np.linalg.norm(v))
        if n > 1.0 + NORM_SLACK:
            raise NotAStateError(f"Bloch norm {n!r} exceeds 1")
        object.__setattr__(self, "vec", _frozen(v))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.vec))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated density operator: Hermitian, unit trace, positive."""

    dim: int
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        if self.dim < 2:
            raise DimensionError(f"dimension {self.dim} below 2")
        if m.shape != (self.dim, self.dim):
            raise DimensionError(f"expected shape {(self.dim, self.dim)}, got {m.shape}")
        require_hermitian(m)
        tr = float(np.real(np.trace(m)))
        if abs(tr - 1.0) > 1e-10:
            raise NotAStateError(f"trace {tr!r} is not 1")
        low = float(np.linalg.eigvalsh(m).min())
        if low < STATE_EIG_FLOOR:
            raise NotAStateError(f"eigenvalue {low:.3e} below {STATE_EIG_FLOOR}")
        object.__setattr__(self, "matrix", _frozen(m))


@dataclass(frozen=True, eq=False)
class ProjectiveObservable:
    """Nondegenerate observable with its simplex geometry.

    ``eigenvalues`` are strictly descending; ``projectors[i]`` is the rank-1
    eigenprojector for ``eigenvalues[i]``; ``vertices[i]`` is its Bloch
    image, a unit vector.  The vertices sum to zero and have pairwise dot
    products ``-1 / (dim - 1)``.
    """

    dim: int
    eigenvalues: np.ndarray
    projectors: np.ndarray
    vertices: np.ndarray

    def matrix(self) -> np.ndarray:
        """Reassembled Hermitian operator sum_i a_i P_i."""
        return np.einsum("i,ijk->jk", self.eigenvalues, self.projectors)


@lru_cache(maxsize=32)
def gellmann_basis(d: int) -> GellMannBasis:
    """Build the generator basis for dimension ``d`` (cached, immutable).

    Ordering: symmetric ``|j><k| + |k><j|`` over index pairs j < k in
    lexicographic order, then ``-i|j><k| + i|k><j|`` over the same pairs,
    then diagonal ``sqrt(2/(l(l+1))) (sum_{i<l} |i><i| - l |l><l|)`` for
    l = 1 .. d-1.  For d = 2 this is exactly (sigma_x, sigma_y, sigma_z).

    Every generator is traceless Hermitian with ``Tr L_i L_j = 2 delta_ij``.
    """
    if d < 2:
        raise DimensionError(f"dimension {d} below 2")
    mats: list[np.ndarray] = []
    for j in range(d):
        for k in range(j + 1, d):
            m = np.zeros((d, d), dtype=complex)
            m[j, k] = 1.0
            m[k, j] = 1.0
            mats.append(m)
    for j in range(d):
        for k in range(j + 1, d):
            m = np.zeros((d, d), dtype=complex)
            m[j, k] = -1.0j
            m[k, j] = 1.0j
            mats.append(m)
    for l in range(1, d):
        m = np.zeros((d, d), dtype=complex)
        for i in range(l):
            m[i, i] = 1.0
        m[l, l] = -float(l)
        mats.append(np.sqrt(2.0 / (l * (l + 1))) * m)
    stack = _frozen(np.stack(mats))
    return GellMannBasis(dim=d, matrices=stack, bloch_scale=float(np.sqrt(d * (d - 1) / 2.0)))


def _bloch_coords(m: np.ndarray, basis: GellMannBasis) -> np.ndarray:
    """Coordinates d Tr(m L_j) / (2 c_d) of a unit-trace Hermitian matrix."""
    d = basis.dim
    coords = np.einsum("kij,ji->k", basis.matrices, m)
    return np.real(coords) * (d / (2.0 * basis.bloch_scale))


def to_bloch(rho: DensityMatrix, basis: GellMannBasis) -> BlochVector:
    """Coordinate vector of ``rho`` in ``basis``."""
    if rho.dim != basis.dim:
        raise DimensionError(f"state dim {rho.dim} does not match basis dim {basis.dim}")
    return BlochVector(dim=basis.dim, vec=_bloch_coords(rho.matrix, basis))


def from_bloch(r: BlochVector, basis: GellMannBasis) -> DensityMatrix:
    """State with coordinates ``r``; raises ``NotAStateError`` if unphysical.

    For d > 2 the physical region is a proper subset of the unit ball, so a
    norm below 1 does not by itself guarantee positivity; the eigenvalue
    check in ``DensityMatrix`` is what decides.
    """
    if r.dim != basis.dim:
        raise DimensionError(f"vector dim {r.dim} does not match basis dim {basis.dim}")
    d = basis.dim
    m = np.tensordot(r.vec, basis.matrices, axes=(0, 0))
    m = (np.eye(d, dtype=complex) + basis.bloch_scale * m) / d
    return DensityMatrix(dim=d, matrix=m)


def observable_simplex(a: np.ndarray, basis: GellMannBasis) -> ProjectiveObservable:
    """Spectral data and simplex vertices of a Hermitian matrix.

    Parameters
    ----------
    a:
        Hermitian matrix of shape ``(d, d)`` with d distinct eigenvalues.

    Raises
    ------
    ObservableError
        If any consecutive eigenvalue gap is below ``DEGENERACY_TOL``:
        a degenerate spectrum does not pin down d rank-1 projectors.
    """
    d = basis.dim
    a = np.asarray(a)
    if a.shape != (d, d):
        raise DimensionError(f"expected shape {(d, d)}, got {a.shape}")
    spec = eigh(a)
    gaps = spec.eigenvalues[:-1] - spec.eigenvalues[1:]
    if d > 1 and float(gaps.min()) < DEGENERACY_TOL:
        raise ObservableError(f"eigenvalue gap {float(gaps.min()):.3e} below {DEGENERACY_TOL}")
    projectors = np.einsum("ik,jk->kij", spec.eigenvectors, spec.eigenvectors.conj())
    vertices = np.stack([_bloch_coords(p, basis) for p in projectors])
    return ProjectiveObservable(
        dim=d,
        eigenvalues=_frozen(spec.eigenvalues),
        projectors=_frozen(projectors),
        vertices=_frozen(vertices),
    )


def outcome_probability(vertex: np.ndarray, r: BlochVector) -> float:
    """Born probability (1/d) (1 + (d-1) vertex . r) for one outcome."""
    d = r.dim
    return float((1.0 + (d - 1) * float(np.dot(vertex, r.vec))) / d)


def outcome_probabilities(obs: ProjectiveObservable, r: BlochVector) -> np.ndarray:
    """All d outcome probabilities; they are nonnegative and sum to 1."""
    if obs.dim != r.dim:
        raise DimensionError(f"observable dim {obs.dim} does not match vector dim {r.dim}")
    d = obs.dim
    return (1.0 + (d - 1) * (obs.vertices @ r.vec)) / d
