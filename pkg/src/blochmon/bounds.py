"""Irreality functionals and the monitoring decay budget.

Irreality of an observable ``X`` in a state ``rho`` is the entropy cost of
measuring ``X`` nonselectively, S(Phi_X(rho)) - S(rho); it equals the
relative entropy between the state and its dephased image.  The key
estimate bounds it by Bloch-space geometry alone:

    irreality <= g(d) sqrt(||(1 - P_X) r_hat||) sqrt(||r||)

with ``g(d)`` a dimension factor.  Because every monitoring cycle contracts
the coordinate norm by the step ratio epsilon_k, that estimate turns a
target irreality ``delta`` into a minimal number of cycles; this module
computes the fractional solution and a rigorous integer plan.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bloch import (
    BlochVector,
    DensityMatrix,
    GellMannBasis,
    ProjectiveObservable,
    from_bloch,
)
from .channels import (
    NORM_FLOOR,
    SimplexProjector,
    Trajectory,
    dephase,
    monitor,
    simplex_projector,
)
from .errors import BlochmonError, DimensionError
from .linalg import binary_entropy, von_neumann_entropy

# Probe schedule for the adaptive planner.
PROBE_START = 8
PROBE_CAP = 2 ** 14


@dataclass(frozen=True)
class BoundReport:
    """Outcome of a monitoring plan against a target irreality ``delta``.

    ``n_min`` is the fractional solution of the decay budget (0.0 when the
    budget is met before any cycle, ``inf`` when the contraction ratio is 1
    and the target is out of reach).  ``steps_run`` is the integer plan
    actually executed; ``irreality`` and ``bound_rhs`` describe the state
    after those cycles.
    """

    delta: float
    dim_factor: float
    eps_max: float
    n_min: float
    steps_run: int
    irreality: float
    bound_rhs: float


def irreality(x: ProjectiveObservable, rho: DensityMatrix) -> float:
    """Entropy generated by nonselectively measuring ``x`` in ``rho``."""
    value = von_neumann_entropy(dephase(rho, x).matrix) - von_neumann_entropy(rho.matrix)
    if value < 0.0:
        if value < -1e-10:
            raise BlochmonError(f"irreality {value:.3e} violates positivity")
        value = 0.0
    return value


def max_irreality(rho: DensityMatrix) -> float:
    """ln d - S(rho): the largest irreality any observable can have in rho."""
    value = math.log(rho.dim) - von_neumann_entropy(rho.matrix)
    return max(value, 0.0)


def dimension_factor(d: int) -> float:
    """g(d) = (d-1)^(1/4) (1 + ln(d-1)/sqrt(2)); g(2) = 1, increasing in d."""
    if d < 2:
        raise DimensionError(f"dimension {d} below 2")
    return float((d - 1) ** 0.25 * (1.0 + math.log(d - 1) / math.sqrt(2.0)))


def irreality_bound(r: BlochVector, px: SimplexProjector) -> float:
    """Geometric bound g(d) sqrt(||(1-P_X) r_hat||) sqrt(||r||).

    At the ball center (norm below the floor) the state is maximally mixed
    and every irreality vanishes, so the bound is 0 there.
    """
    if r.dim != px.dim:
        raise DimensionError(f"vector dim {r.dim} does not match projector dim {px.dim}")
    norm = r.norm
    if norm <= NORM_FLOOR:
        return 0.0
    residual = float(np.linalg.norm(r.vec - px.matrix @ r.vec)) / norm
    return dimension_factor(r.dim) * math.sqrt(residual) * math.sqrt(norm)


def max_epsilon(traj: Trajectory) -> float:
    """Largest step ratio over the trajectory's valid steps.

    A single uniform ratio must dominate every step for the decay budget,
    so the max is the only safe summary.
    """
    best = None
    for step in traj.steps:
        if step.epsilon_valid:
            best = step.epsilon if best is None else max(best, step.epsilon)
    if best is None:
        raise BlochmonError("no step with a usable previous norm")
    return best


def min_monitoring_steps(
    delta: float,
    dim_factor_value: float,
    eps_max: float,
    r0_norm: float,
    residual: float,
) -> float:
    """Fractional cycle count n with g sqrt(residual) sqrt(eps^n ||r0||) <= delta.

    Returns 0.0 when the budget holds with no cycles, 1.0 when the ratio is
    0 (one cycle annihilates the coordinate vector), ``inf`` when the ratio
    is 1 and the budget is unmet.  Callers round up and clamp to >= 1 to
    get an executable plan.
    """
    if delta <= 0.0:
        raise BlochmonError(f"target {delta!r} must be positive")
    if eps_max < 0.0 or eps_max > 1.0 + 1e-12:
        raise BlochmonError(f"step ratio {eps_max!r} outside [0, 1]")
    base = dim_factor_value * math.sqrt(max(r0_norm, 0.0) * max(residual, 0.0))
    if base <= delta:
        return 0.0
    if eps_max <= 0.0:
        return 1.0
    if eps_max >= 1.0 - 1e-12:
        return float("inf")
    return 2.0 * math.log(delta / base) / math.log(eps_max)


def qubit_irreality_bound(
    a_hat: np.ndarray,
    b_hat: np.ndarray,
    x_hat: np.ndarray,
    r0: np.ndarray,
    n: int,
) -> float:
    """Closed-form d=2 bound after n cycles, in nats.

    (a.r0)^2 (a.b)^(2(2n-1)) (1 - (x.b)^4) ln 2: the binary-entropy gap
    estimate evaluated on the closed-form qubit trajectory, where the state
    after any cycle lies along ``b_hat``.
    """
    a, b, x, r = (np.asarray(v, dtype=float) for v in (a_hat, b_hat, x_hat, r0))
    for name, v in (("a_hat", a), ("b_hat", b), ("x_hat", x)):
        if v.shape != (3,):
            raise DimensionError(f"{name} must be a 3-vector")
        if abs(float(np.linalg.norm(v)) - 1.0) > 1e-8:
            raise BlochmonError(f"{name} is not a unit vector")
    if r.shape != (3,) or float(np.linalg.norm(r)) > 1.0 + 1e-12:
        raise BlochmonError("r0 must be a 3-vector inside the unit ball")
    if n < 1:
        raise BlochmonError(f"cycle count {n} below 1")
    ab = float(a @ b)
    lam_sq = float(a @ r) ** 2 * ab ** (2 * (2 * n - 1))
    mu = float(x @ b)
    return lam_sq * (1.0 - mu ** 4) * math.log(2.0)


def binary_entropy_gap_bound(lam: float, mu: float) -> tuple[float, float]:
    """Both sides of the gap estimate at (lam, mu).

    Returns ``(lhs, rhs)`` with
    lhs = H_bin((1 + mu lam)/2) - H_bin((1 + lam)/2) and
    rhs = lam^2 (1 - mu^4) ln 2.  The claim lhs <= rhs holds on almost all
    of the domain but fails in a thin sliver near lam = 1, |mu| ~ 0.98
    (counterexample: lam = 1, mu = 0.98); callers comparing the two must
    expect that region.
    """
    lam = float(lam)
    mu = float(mu)
    if not 0.0 <= lam <= 1.0:
        raise BlochmonError(f"lam {lam!r} outside [0, 1]")
    if not -1.0 <= mu <= 1.0:
        raise BlochmonError(f"mu {mu!r} outside [-1, 1]")
    t1 = min(max((1.0 + mu * lam) / 2.0, 0.0), 1.0)
    t2 = min(max((1.0 + lam) / 2.0, 0.0), 1.0)
    lhs = binary_entropy(t1) - binary_entropy(t2)
    rhs = lam * lam * (1.0 - mu ** 4) * math.log(2.0)
    return lhs, rhs


def _window_stats(traj: Trajectory, px: SimplexProjector) -> tuple[float, float]:
    """Max step ratio and max residual fraction over a probe window."""
    eps_max = 0.0
    residual = 0.0
    seen_direction = False
    for step in traj.steps:
        if step.epsilon_valid:
            eps_max = max(eps_max, step.epsilon)
        if step.norm > NORM_FLOOR:
            seen_direction = True
            res = float(np.linalg.norm(step.r.vec - px.matrix @ step.r.vec)) / step.norm
            residual = max(residual, min(res, 1.0))
    if not seen_direction:
        residual = 1.0  # nothing survives the window; 1 is always safe
    return eps_max, residual


def plan_monitoring(
    r0: BlochVector,
    a: ProjectiveObservable,
    b: ProjectiveObservable,
    x: ProjectiveObservable,
    delta: float,
    basis: GellMannBasis,
) -> BoundReport:
    """Plan and execute enough cycles to push the bound on X's irreality below delta.

    Probes the trajectory to measure the worst step ratio and worst
    residual, doubling the probe window until it covers the candidate plan
    (the window maxima dominate every step inside it, which makes the plan
    rigorous rather than heuristic).  If the window hits ``PROBE_CAP`` the
    spectral norm of the cycle map replaces the measured ratio; it bounds
    every possible step ratio.
    """
    if delta <= 0.0:
        raise BlochmonError(f"target {delta!r} must be positive")
    pa = simplex_projector(a)
    pb = simplex_projector(b)
    px = simplex_projector(x)
    g = dimension_factor(r0.dim)
    r0_norm = r0.norm

    if r0_norm <= NORM_FLOOR:
        rho0 = from_bloch(r0, basis)
        return BoundReport(
            delta=delta, dim_factor=g, eps_max=0.0, n_min=0.0, steps_run=0,
            irreality=irreality(x, rho0), bound_rhs=0.0,
        )

    # The window maxima only dominate steps >= 1; folding in the initial
    # vector's own residual makes the no-cycles verdict rigorous as well.
    residual0 = min(float(np.linalg.norm(r0.vec - px.matrix @ r0.vec)) / r0_norm, 1.0)

    probe_len = PROBE_START
    use_fallback = False
    while True:
        traj = monitor(r0, pa, pb, probe_len)
        eps_max, residual = _window_stats(traj, px)
        residual = max(residual, residual0)
        n_est = min_monitoring_steps(delta, g, eps_max, r0_norm, residual)
        if n_est == 0.0 or (math.isfinite(n_est) and math.ceil(n_est) <= probe_len):
            break
        if probe_len >= PROBE_CAP:
            use_fallback = True
            break
        probe_len = min(probe_len * 2, PROBE_CAP)

    if use_fallback:
        sigma = float(np.linalg.norm(pb.matrix @ pa.matrix, 2))
        eps_max = min(sigma, 1.0)
        residual = 1.0
        n_est = min_monitoring_steps(delta, g, eps_max, r0_norm, residual)

    if math.isinf(n_est):
        rho0 = from_bloch(r0, basis)
        return BoundReport(
            delta=delta, dim_factor=g, eps_max=eps_max, n_min=n_est, steps_run=0,
            irreality=irreality(x, rho0), bound_rhs=irreality_bound(r0, px),
        )

    steps_run = 0 if n_est == 0.0 else max(1, math.ceil(n_est))
    if steps_run == 0:
        r_final = r0
    else:
        r_final = monitor(r0, pa, pb, steps_run).steps[-1].r
    rho_final = from_bloch(r_final, basis)
    return BoundReport(
        delta=delta,
        dim_factor=g,
        eps_max=eps_max,
        n_min=n_est,
        steps_run=steps_run,
        irreality=irreality(x, rho_final),
        bound_rhs=irreality_bound(r_final, px),
    )
