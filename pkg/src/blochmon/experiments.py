"""Reference experiments: the spin-1 sweep, closed-form qubit runs, random draws.

The centerpiece is :func:`qutrit_sweep`: a spin-1 system starts in the
lowest S_z eigenstate, the pair (A, B) = (S_z cos phi + S_x sin phi, S_z)
is measured nonselectively in alternation, and the grid records the
max-irreality ln 3 - S(rho_n) after each cycle.  The sweep runs in the
Hilbert-space picture and cross-checks a sample of cells against the
Bloch-space route, so the two formulations guard each other.
"""
from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass

import numpy as np

from .bloch import (
    BlochVector,
    DensityMatrix,
    GellMannBasis,
    ProjectiveObservable,
    from_bloch,
    gellmann_basis,
    observable_simplex,
    to_bloch,
)
from .channels import simplex_projector
from .errors import BlochmonError, DimensionError
from .linalg import von_neumann_entropy

DEFAULT_PHI_POINTS = 64
DEFAULT_N_MAX = 10
CSV_HEADER = "phi_rad,n,max_irreality_nats,bloch_norm"
CROSS_CHECK_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class SweepGrid:
    """Rectangular sweep result: rows indexed by phi, columns by n."""

    phi_values: np.ndarray
    n_values: np.ndarray
    max_irreality: np.ndarray
    bloch_norm: np.ndarray

    def __post_init__(self) -> None:
        shape = (len(self.phi_values), len(self.n_values))
        if self.max_irreality.shape != shape or self.bloch_norm.shape != shape:
            raise DimensionError("grid arrays do not match the axis lengths")


def spin1_operators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Spin-1 matrices (S_x, S_y, S_z), each with spectrum {1, 0, -1}."""
    s = 1.0 / math.sqrt(2.0)
    sx = s * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=complex)
    sy = s * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=complex)
    sz = np.diag([1.0, 0.0, -1.0]).astype(complex)
    return sx, sy, sz


def tilted_spin_observable(phi: float, basis: GellMannBasis) -> ProjectiveObservable:
    """S_z cos phi + S_x sin phi as a simplex observable (always spectrum {1,0,-1})."""
    if basis.dim != 3:
        raise DimensionError("tilted spin observable is a spin-1 construction")
    sx, _, sz = spin1_operators()
    return observable_simplex(math.cos(phi) * sz + math.sin(phi) * sx, basis)


def fourier_observable(d: int, basis: GellMannBasis) -> ProjectiveObservable:
    """Observable whose eigenbasis is the discrete Fourier basis.

    Mutually unbiased with the computational basis: every overlap squared
    is 1/d, so its simplex is Bloch-orthogonal to the computational one.
    """
    if basis.dim != d:
        raise DimensionError(f"basis dim {basis.dim} does not match d {d}")
    j = np.arange(d)
    f = np.exp(2j * np.pi * np.outer(j, j) / d) / math.sqrt(d)
    w = np.arange(d, 0, -1).astype(float)
    return observable_simplex((f * w) @ f.conj().T, basis)


def _sandwich(projectors: np.ndarray, rho: np.ndarray) -> np.ndarray:
    out = np.zeros_like(rho)
    for p in projectors:
        out += p @ rho @ p
    return out


def _qutrit_initial_state() -> np.ndarray:
    # lowest S_z eigenstate |m = -1>
    return np.diag([0.0, 0.0, 1.0]).astype(complex)


def qutrit_sweep(
    phi_values: np.ndarray | None = None,
    n_values: np.ndarray | None = None,
    cross_checks: int = 8,
) -> SweepGrid:
    """Max-irreality grid of the alternating spin-1 measurement sequence.

    Parameters
    ----------
    phi_values:
        Tilt angles in radians; default 64 points uniform on [0, pi/2].
    n_values:
        Cycle counts to record, strictly increasing positive integers;
        default 1 .. 10.
    cross_checks:
        Number of cells recomputed through the Bloch route; any deviation
        beyond ``CROSS_CHECK_TOL`` raises.
    """
    if phi_values is None:
        phi_values = np.linspace(0.0, math.pi / 2.0, DEFAULT_PHI_POINTS)
    if n_values is None:
        n_values = np.arange(1, DEFAULT_N_MAX + 1)
    phi_values = np.asarray(phi_values, dtype=float)
    n_values = np.asarray(n_values, dtype=int)
    if phi_values.ndim != 1 or len(phi_values) == 0:
        raise BlochmonError("phi_values must be a nonempty 1-d array")
    if n_values.ndim != 1 or len(n_values) == 0 or n_values[0] < 1 or np.any(np.diff(n_values) <= 0):
        raise BlochmonError("n_values must be strictly increasing positive integers")

    basis = gellmann_basis(3)
    _, _, sz = spin1_operators()
    b_obs = observable_simplex(sz, basis)
    rho0 = _qutrit_initial_state()
    ln3 = math.log(3.0)

    n_max = int(n_values[-1])
    values = np.empty((len(phi_values), len(n_values)))
    norms = np.empty_like(values)
    for ip, phi in enumerate(phi_values):
        a_obs = tilted_spin_observable(float(phi), basis)
        rho = rho0
        col = 0
        for n in range(1, n_max + 1):
            rho = _sandwich(b_obs.projectors, _sandwich(a_obs.projectors, rho))
            if col < len(n_values) and n == n_values[col]:
                values[ip, col] = ln3 - von_neumann_entropy(rho)
                coords = to_bloch(DensityMatrix(dim=3, matrix=rho), basis)
                norms[ip, col] = coords.norm
                col += 1

    _cross_check_cells(phi_values, n_values, basis, b_obs, rho0, cross_checks)
    return SweepGrid(
        phi_values=phi_values, n_values=n_values, max_irreality=values, bloch_norm=norms
    )


def _cross_check_cells(
    phi_values: np.ndarray,
    n_values: np.ndarray,
    basis: GellMannBasis,
    b_obs: ProjectiveObservable,
    rho0: np.ndarray,
    count: int,
) -> None:
    """Recompute sampled cells via Bloch projections and compare states."""
    if count <= 0:
        return
    total = len(phi_values) * len(n_values)
    picks = np.unique(np.linspace(0, total - 1, min(count, total)).round().astype(int))
    pb = simplex_projector(b_obs)
    r0 = to_bloch(DensityMatrix(dim=3, matrix=rho0), basis)
    for flat in picks:
        ip, col = divmod(int(flat), len(n_values))
        phi = float(phi_values[ip])
        n = int(n_values[col])
        a_obs = tilted_spin_observable(phi, basis)
        cycle = pb.matrix @ simplex_projector(a_obs).matrix

        v = r0.vec
        rho = rho0
        for _ in range(n):
            v = cycle @ v
            rho = _sandwich(b_obs.projectors, _sandwich(a_obs.projectors, rho))
        m_bloch = from_bloch(BlochVector(dim=3, vec=v), basis).matrix
        dev = float(np.max(np.abs(m_bloch - rho)))
        if dev > CROSS_CHECK_TOL:
            raise BlochmonError(
                f"route mismatch {dev:.3e} at phi={phi!r}, n={n} exceeds {CROSS_CHECK_TOL}"
            )


def qubit_closed_form(
    a_hat: np.ndarray, b_hat: np.ndarray, r0: np.ndarray, n: int
) -> np.ndarray:
    """Coordinate vector after n qubit cycles: (a.b)^(2n-1) (a.r0) b_hat."""
    a, b, r = (np.asarray(v, dtype=float) for v in (a_hat, b_hat, r0))
    for name, v in (("a_hat", a), ("b_hat", b)):
        if v.shape != (3,) or abs(float(np.linalg.norm(v)) - 1.0) > 1e-8:
            raise BlochmonError(f"{name} must be a unit 3-vector")
    if r.shape != (3,):
        raise DimensionError("r0 must be a 3-vector")
    if n < 1:
        raise BlochmonError(f"cycle count {n} below 1")
    ab = float(a @ b)
    return ab ** (2 * n - 1) * float(a @ r) * b


def random_instance(
    d: int, rng: np.random.Generator
) -> tuple[DensityMatrix, ProjectiveObservable, ProjectiveObservable]:
    """A Ginibre-induced state and two Haar-eigenbasis observables.

    Observable eigenvalues are drawn uniformly on [-1, 1] and redrawn until
    all gaps are at least 1e-6, keeping the simplex construction stable.
    """
    if not 2 <= d <= 16:
        raise DimensionError(f"dimension {d} outside [2, 16]")
    basis = gellmann_basis(d)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ g.conj().T
    rho = DensityMatrix(dim=d, matrix=m / float(np.real(np.trace(m))))
    return rho, _haar_observable(d, rng, basis), _haar_observable(d, rng, basis)


def _haar_observable(
    d: int, rng: np.random.Generator, basis: GellMannBasis
) -> ProjectiveObservable:
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    phases = np.diagonal(r).copy()
    phases /= np.abs(phases)
    q = q * phases  # unbiased over the unitary group
    while True:
        w = np.sort(rng.uniform(-1.0, 1.0, size=d))[::-1]
        if d < 2 or float(np.min(w[:-1] - w[1:])) >= 1e-6:
            break
    return observable_simplex((q * w) @ q.conj().T, basis)


def sweep_csv_text(grid: SweepGrid) -> str:
    """Serialize a grid row-major (phi outer, n inner), 12 significant digits."""
    lines = [CSV_HEADER]
    for ip, phi in enumerate(grid.phi_values):
        for col, n in enumerate(grid.n_values):
            lines.append(
                f"{float(phi):.12g},{int(n)},"
                f"{float(grid.max_irreality[ip, col]):.12g},"
                f"{float(grid.bloch_norm[ip, col]):.12g}"
            )
    return "\n".join(lines) + "\n"


def atomic_write_text(path: str, text: str) -> None:
    """Write via a sibling temp file and rename, so failures leave no partial file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit_sweep_csv(grid: SweepGrid, path: str) -> None:
    """Write the grid to ``path`` in the sweep CSV schema (UTF-8, LF)."""
    atomic_write_text(path, sweep_csv_text(grid))
