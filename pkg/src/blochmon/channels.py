"""Nonselective projective measurement as a channel, in both pictures.

In the Hilbert-space picture a measurement of ``X`` with rank-1 projectors
``X_i`` sends ``rho`` to ``sum_i X_i rho X_i``.  In Bloch coordinates the
same map is a linear orthogonal projection of the coordinate vector onto
the span of the observable's simplex vertices; :func:`simplex_projector`
returns that matrix.  Repeating two such measurements in alternation is a
single linear map per cycle, which :func:`monitor` iterates.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bloch import BlochVector, DensityMatrix, ProjectiveObservable
from .errors import BlochmonError, DimensionError
from .linalg import require_hermitian

# Below this the direction of a Bloch vector is numerically meaningless.
NORM_FLOOR = 1e-14


@dataclass(frozen=True, eq=False)
class SimplexProjector:
    """Bloch-space image of a nonselective measurement.

    ``matrix`` is the real symmetric idempotent ((d-1)/d) sum_i a_i a_i^T
    over the observable's vertices; its range (dimension d - 1) is exactly
    the set of coordinate vectors invariant under the measurement.
    """

    dim: int
    matrix: np.ndarray

    def apply(self, r: BlochVector) -> BlochVector:
        if r.dim != self.dim:
            raise DimensionError(f"vector dim {r.dim} does not match projector dim {self.dim}")
        return BlochVector(dim=self.dim, vec=self.matrix @ r.vec)


@dataclass(frozen=True, eq=False)
class TrajectoryStep:
    """One cycle of the monitoring sequence.

    ``epsilon`` is the norm ratio ||r_n|| / ||r_{n-1}||.  When the previous
    norm is below ``NORM_FLOOR`` the ratio is meaningless; it is reported
    as 0.0 with ``epsilon_valid`` False.
    """

    n: int
    r: BlochVector
    norm: float
    epsilon: float
    epsilon_valid: bool


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Monitoring record: the initial vector and one step per cycle."""

    r0: BlochVector
    steps: tuple[TrajectoryStep, ...]


def dephase(rho: DensityMatrix, x: ProjectiveObservable) -> DensityMatrix:
    """Nonselective measurement of ``x``: sum_i X_i rho X_i.

    Idempotent, trace preserving, and leaves exactly the states commuting
    with ``x`` fixed.
    """
    if rho.dim != x.dim:
        raise DimensionError(f"state dim {rho.dim} does not match observable dim {x.dim}")
    m = np.zeros_like(rho.matrix)
    for p in x.projectors:
        m = m + p @ rho.matrix @ p
    return DensityMatrix(dim=rho.dim, matrix=m)


def dephase_with_projectors(rho: DensityMatrix, projectors: Sequence[np.ndarray]) -> DensityMatrix:
    """Same channel from an explicit complete orthogonal projector family.

    Accepts projectors of any rank, so degenerate spectra can be handled by
    grouping.  The family is validated: each member Hermitian and
    idempotent, mutually orthogonal, summing to the identity.
    """
    d = rho.dim
    fam = [np.asarray(p, dtype=complex) for p in projectors]
    total = np.zeros((d, d), dtype=complex)
    for p in fam:
        require_hermitian(p)
        if np.max(np.abs(p @ p - p)) > 1e-10:
            raise BlochmonError("projector family member is not idempotent")
        total += p
    if np.max(np.abs(total - np.eye(d))) > 1e-10:
        raise BlochmonError("projector family does not sum to the identity")
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            if np.max(np.abs(fam[i] @ fam[j])) > 1e-10:
                raise BlochmonError("projector family members are not orthogonal")
    m = np.zeros((d, d), dtype=complex)
    for p in fam:
        m = m + p @ rho.matrix @ p
    return DensityMatrix(dim=d, matrix=m)


def simplex_projector(x: ProjectiveObservable) -> SimplexProjector:
    """Dense Bloch-space projection matrix of the measurement of ``x``."""
    d = x.dim
    mat = (d - 1) / d * (x.vertices.T @ x.vertices)
    mat = np.ascontiguousarray(mat)
    mat.flags.writeable = False
    return SimplexProjector(dim=d, matrix=mat)


def pairwise_step(r: BlochVector, pa: SimplexProjector, pb: SimplexProjector) -> BlochVector:
    """One measurement cycle in Bloch coordinates: r -> P_B P_A r."""
    return pb.apply(pa.apply(r))


def monitor(
    r0: BlochVector,
    pa: SimplexProjector,
    pb: SimplexProjector,
    n: int,
) -> Trajectory:
    """Iterate the cycle map n times from ``r0``.

    Norm ratios are clipped at 1: both factors are orthogonal projections,
    so any excess is rounding.
    """
    if n < 1:
        raise BlochmonError(f"step count {n} below 1")
    if not (r0.dim == pa.dim == pb.dim):
        raise DimensionError("dimension mismatch between vector and projectors")
    cycle = pb.matrix @ pa.matrix
    steps: list[TrajectoryStep] = []
    v = r0.vec
    prev = float(np.linalg.norm(v))
    for k in range(1, n + 1):
        v = cycle @ v
        norm = float(np.linalg.norm(v))
        valid = prev > NORM_FLOOR
        eps = min(norm / prev, 1.0) if valid else 0.0
        steps.append(
            TrajectoryStep(
                n=k,
                r=BlochVector(dim=r0.dim, vec=v),
                norm=norm,
                epsilon=eps,
                epsilon_valid=valid,
            )
        )
        prev = norm
    return Trajectory(r0=r0, steps=tuple(steps))


def stinespring_deviation(rho: DensityMatrix, x: ProjectiveObservable) -> float:
    """Max deviation between the dilation route and the direct channel.

    Builds the isometry V = sum_i X_i (x) |i>, evolves rho into the
    system-probe space, traces out the probe, and compares with
    :func:`dephase`.  V^dag V = 1 is checked along the way.
    """
    d = rho.dim
    if x.dim != d:
        raise DimensionError(f"state dim {d} does not match observable dim {x.dim}")
    v = np.zeros((d * d, d), dtype=complex)
    for i, p in enumerate(x.projectors):
        e = np.zeros((d, 1), dtype=complex)
        e[i, 0] = 1.0
        v += np.kron(p, e)
    if np.max(np.abs(v.conj().T @ v - np.eye(d))) > 1e-10:
        raise BlochmonError("dilation map is not an isometry")
    w = (v @ rho.matrix @ v.conj().T).reshape(d, d, d, d)
    reduced = np.einsum("iaja->ij", w)
    direct = dephase(rho, x).matrix
    return float(np.max(np.abs(reduced - direct)))
