"""Seeded oracle-equivalence and inequality suites.

Each suite draws random instances, checks one contract through two
independent routes (or against a proven inequality), and reports the worst
deviation it saw.  The CLI ``validate`` command runs all of them; the
acceptance tests reuse them where the parameters line up.

Every suite takes ``(rng, trials, tol, dims)``.  ``dims`` narrows the
dimensions exercised; a suite that supports none of the requested
dimensions falls back to its own defaults rather than silently running
nothing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .bloch import (
    BlochVector,
    from_bloch,
    gellmann_basis,
    observable_simplex,
    outcome_probabilities,
    to_bloch,
)
from .bounds import (
    dimension_factor,
    irreality,
    irreality_bound,
    min_monitoring_steps,
    plan_monitoring,
    qubit_irreality_bound,
)
from .channels import dephase, monitor, simplex_projector, stinespring_deviation
from .errors import BlochmonError
from .experiments import fourier_observable, qubit_closed_form, random_instance
from .linalg import binary_entropy, schatten_norm, von_neumann_entropy


@dataclass(frozen=True)
class SuiteResult:
    name: str
    trials: int
    failures: int
    worst: float
    detail: str

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _pick_dims(requested: Sequence[int] | None, supported: tuple[int, ...]) -> tuple[int, ...]:
    if requested is None:
        return supported
    chosen = tuple(d for d in supported if d in requested)
    return chosen or supported


def suite_roundtrip(
    rng: np.random.Generator,
    trials: int,
    tol: float = 1e-10,
    dims: Sequence[int] | None = None,
) -> SuiteResult:
    """State -> coordinates -> state is the identity; coordinates stay in the ball."""
    failures = 0
    worst = 0.0
    detail = ""
    count = 0
    for d in _pick_dims(dims, (2, 3, 4)):
        basis = gellmann_basis(d)
        for _ in range(trials):
            rho, _, _ = random_instance(d, rng)
            r = to_bloch(rho, basis)
            back = from_bloch(r, basis)
            dev = float(np.max(np.abs(back.matrix - rho.matrix)))
            worst = max(worst, dev)
            count += 1
            if dev > tol or r.norm > 1.0 + 1e-12:
                failures += 1
                if not detail:
                    detail = f"d={d} deviation {dev:.3e} norm {r.norm!r}"
    return SuiteResult("roundtrip", count, failures, worst, detail)


def suite_commuting_diagram(
    rng: np.random.Generator,
    trials: int,
    tol: float = 1e-10,
    dims: Sequence[int] | None = None,
) -> SuiteResult:
    """Bloch projections and matrix dephasing compute the same channel."""
    failures = 0
    worst = 0.0
    detail = ""
    count = 0
    for d in _pick_dims(dims, (2, 3)):
        basis = gellmann_basis(d)
        for _ in range(trials):
            rho, a, b = random_instance(d, rng)
            r = to_bloch(rho, basis)
            pa, pb = simplex_projector(a), simplex_projector(b)
            via_bloch = from_bloch(
                BlochVector(dim=d, vec=pb.matrix @ (pa.matrix @ r.vec)), basis
            )
            via_matrix = dephase(dephase(rho, a), b)
            dev = float(np.max(np.abs(via_bloch.matrix - via_matrix.matrix)))
            worst = max(worst, dev)
            count += 1
            if dev > tol:
                failures += 1
                if not detail:
                    detail = f"d={d} route deviation {dev:.3e}"
    return SuiteResult("commuting-diagram", count, failures, worst, detail)


def suite_probability_law(
    rng: np.random.Generator,
    trials: int,
    tol: float = 1e-10,
    dims: Sequence[int] | None = None,
) -> SuiteResult:
    """Affine outcome formula against direct Tr(P_i rho)."""
    failures = 0
    worst = 0.0
    detail = ""
    count = 0
    for d in _pick_dims(dims, (2, 3, 4)):
        basis = gellmann_basis(d)
        for _ in range(trials):
            rho, a, _ = random_instance(d, rng)
            r = to_bloch(rho, basis)
            via_simplex = outcome_probabilities(a, r)
            direct = np.array(
                [float(np.real(np.trace(p @ rho.matrix))) for p in a.projectors]
            )
            dev = float(np.max(np.abs(via_simplex - direct)))
            bad = dev > tol or abs(float(np.sum(via_simplex)) - 1.0) > tol
            bad = bad or float(np.min(via_simplex)) < -tol
            worst = max(worst, dev)
            count += 1
            if bad:
                failures += 1
                if not detail:
                    detail = f"d={d} probability deviation {dev:.3e}"
    return SuiteResult("probability-law", count, failures, worst, detail)


def suite_theorem_bound(
    rng: np.random.Generator,
    trials: int,
    tol: float = 1e-10,
    dims: Sequence[int] | None = None,
) -> SuiteResult:
    """Irreality never exceeds the geometric bound along random trajectories."""
    failures = 0
    worst = -math.inf
    detail = ""
    count = 0
    for d in _pick_dims(dims, (2, 3)):
        basis = gellmann_basis(d)
        for _ in range(trials):
            rho, a, b = random_instance(d, rng)
            px = simplex_projector(b)
            traj = monitor(to_bloch(rho, basis), simplex_projector(a), px, 5)
            for step in traj.steps:
                value = irreality(b, from_bloch(step.r, basis))
                bound = irreality_bound(step.r, px)
                margin = value - bound
                worst = max(worst, margin)
                count += 1
                if margin > tol:
                    failures += 1
                    if not detail:
                        detail = f"d={d} n={step.n} irreality {value:.6e} > bound {bound:.6e}"
    return SuiteResult("theorem-bound", count, failures, worst, detail)


def suite_entropy_continuity(
    rng: np.random.Generator,
    trials: int,
    tol: float = 1e-10,
    dims: Sequence[int] | None = None,
) -> SuiteResult:
    """|S(rho) - S(sigma)| <= T ln(d-1) + H_bin(T) with T the trace distance.

    Also checks the weakened square-root form the geometric bound rests on:
    T ln(d-1) + H_bin(T) <= sqrt(T) ln(d-1) + sqrt(2 T).
    """
    failures = 0
    worst = -math.inf
    detail = ""
    count = 0
    for d in _pick_dims(dims, (3, 4)):
        for _ in range(trials):
            rho, _, _ = random_instance(d, rng)
            sigma, _, _ = random_instance(d, rng)
            big_t = min(0.5 * schatten_norm(rho.matrix - sigma.matrix, 1), 1.0)
            gap = abs(von_neumann_entropy(rho.matrix) - von_neumann_entropy(sigma.matrix))
            tight = big_t * math.log(d - 1) + binary_entropy(big_t)
            loose = math.sqrt(big_t) * math.log(d - 1) + math.sqrt(2.0 * big_t)
            margin = max(gap - tight, tight - loose)
            worst = max(worst, margin)
            count += 1
            if margin > tol:
                failures += 1
                if not detail:
                    detail = f"d={d} gap {gap:.6e} tight {tight:.6e} loose {loose:.6e}"
    return SuiteResult("entropy-continuity", count, failures, worst, detail)


def suite_monitoring_plan(
    rng: np.random.Generator,
    trials: int,
    tol: float = 1e-10,
    dims: Sequence[int] | None = None,
) -> SuiteResult:
    """plan_monitoring hits its target: achieved irreality <= delta when finite."""
    failures = 0
    worst = -math.inf
    detail = ""
    count = 0
    for d in _pick_dims(dims, (2, 3)):
        basis = gellmann_basis(d)
        for _ in range(trials):
            rho, a, b = random_instance(d, rng)
            delta = float(10.0 ** rng.uniform(-4.0, -0.5))
            report = plan_monitoring(to_bloch(rho, basis), a, b, b, delta, basis)
            if math.isinf(report.n_min):
                continue  # unreachable targets carry no achievement claim
            margin = report.irreality - delta
            worst = max(worst, margin)
            count += 1
            if margin > 0.0:
                failures += 1
                if not detail:
                    detail = (
                        f"d={d} delta {delta:.3e} achieved {report.irreality:.3e} "
                        f"steps {report.steps_run}"
                    )
    return SuiteResult("monitoring-plan", count, failures, worst, detail)


def suite_qubit_closed_form(
    rng: np.random.Generator,
    trials: int,
    tol: float = 1e-10,
    dims: Sequence[int] | None = None,
) -> SuiteResult:
    """Iterated qubit cycles match the closed form; the closed-form bound holds."""
    del dims  # the closed form only exists for d = 2
    basis = gellmann_basis(2)
    failures = 0
    worst = -math.inf
    detail = ""
    count = 0
    for _ in range(trials):
        rho, a, b = random_instance(2, rng)
        r0 = to_bloch(rho, basis)
        a_hat, b_hat = a.vertices[0], b.vertices[0]
        traj = monitor(r0, simplex_projector(a), simplex_projector(b), 4)
        for step in traj.steps:
            predicted = qubit_closed_form(a_hat, b_hat, r0.vec, step.n)
            dev = float(np.linalg.norm(step.r.vec - predicted))
            value = irreality(a, from_bloch(step.r, basis))
            cap = qubit_irreality_bound(a_hat, b_hat, a_hat, r0.vec, step.n)
            margin = max(dev - tol, value - cap - tol)
            worst = max(worst, margin)
            count += 1
            if margin > 0.0:
                failures += 1
                if not detail:
                    detail = f"n={step.n} deviation {dev:.3e} irreality {value:.3e} cap {cap:.3e}"
    return SuiteResult("qubit-closed-form", count, failures, worst, detail)


def suite_unbiased_pair(
    rng: np.random.Generator,
    trials: int,
    tol: float = 1e-10,
    dims: Sequence[int] | None = None,
) -> SuiteResult:
    """Mutually unbiased pairs erase the coordinate vector in one cycle."""
    del tol  # one-cycle erasure is checked at fixed 1e-12
    failures = 0
    worst = 0.0
    detail = ""
    count = 0
    for d in _pick_dims(dims, (2, 3)):
        basis = gellmann_basis(d)
        if d == 2:
            a = observable_simplex(np.diag([1.0, -1.0]), basis)
            b = observable_simplex(np.array([[0.0, 1.0], [1.0, 0.0]]), basis)
        else:
            a = observable_simplex(np.diag([1.0, 0.0, -1.0]), basis)
            b = fourier_observable(3, basis)
        cross = float(np.max(np.abs(a.vertices @ b.vertices.T)))
        for _ in range(trials):
            rho, _, _ = random_instance(d, rng)
            traj = monitor(to_bloch(rho, basis), simplex_projector(a), simplex_projector(b), 1)
            norm1 = traj.steps[0].norm
            worst = max(worst, norm1, cross)
            count += 1
            if norm1 > 1e-12 or cross > 1e-12:
                failures += 1
                if not detail:
                    detail = f"d={d} ||r_1|| {norm1:.3e} cross {cross:.3e}"
    return SuiteResult("unbiased-pair", count, failures, worst, detail)


def suite_dilation(
    rng: np.random.Generator,
    trials: int,
    tol: float = 1e-10,
    dims: Sequence[int] | None = None,
) -> SuiteResult:
    """Partial trace of the isometric dilation reproduces the channel."""
    failures = 0
    worst = 0.0
    detail = ""
    count = 0
    for d in _pick_dims(dims, (2, 3, 4)):
        for _ in range(trials):
            rho, a, _ = random_instance(d, rng)
            dev = stinespring_deviation(rho, a)
            worst = max(worst, dev)
            count += 1
            if dev > tol:
                failures += 1
                if not detail:
                    detail = f"d={d} dilation deviation {dev:.3e}"
    return SuiteResult("dilation", count, failures, worst, detail)


def suite_plan_arithmetic(
    rng: np.random.Generator,
    trials: int,
    tol: float = 1e-10,
    dims: Sequence[int] | None = None,
) -> SuiteResult:
    """Pure decay-budget arithmetic: the fractional solution meets the budget."""
    del tol, dims  # scalar identity, dimension enters only through g(d)
    failures = 0
    worst = -math.inf
    detail = ""
    count = 0
    for _ in range(trials):
        d = int(rng.integers(2, 9))
        g = dimension_factor(d)
        r0_norm = float(rng.uniform(0.05, 1.0))
        residual = float(rng.uniform(0.0, 1.0))
        eps = float(rng.uniform(0.0, 0.999))
        delta = float(10.0 ** rng.uniform(-6.0, 0.0))
        n = min_monitoring_steps(delta, g, eps, r0_norm, residual)
        count += 1
        if math.isinf(n):
            failures += 1
            detail = detail or f"unexpected inf at eps {eps!r}"
            continue
        if n == 0.0:
            achieved = g * math.sqrt(r0_norm * residual)
        else:
            achieved = g * math.sqrt(residual) * math.sqrt(eps ** n * r0_norm)
        margin = achieved - delta * (1.0 + 1e-9)
        worst = max(worst, margin)
        if margin > 0.0:
            failures += 1
            if not detail:
                detail = f"delta {delta:.3e} achieved {achieved:.3e} n {n!r}"
    return SuiteResult("plan-arithmetic", count, failures, worst, detail)


Suite = Callable[..., SuiteResult]

ALL_SUITES: tuple[Suite, ...] = (
    suite_roundtrip,
    suite_commuting_diagram,
    suite_probability_law,
    suite_theorem_bound,
    suite_entropy_continuity,
    suite_monitoring_plan,
    suite_qubit_closed_form,
    suite_unbiased_pair,
    suite_dilation,
    suite_plan_arithmetic,
)


def run_all(
    seed: int = 1234,
    trials: int = 60,
    tol: float = 1e-10,
    dims: Sequence[int] | None = None,
) -> list[SuiteResult]:
    """Run every suite with independent deterministic streams."""
    if trials < 1:
        raise BlochmonError(f"trials {trials} below 1")
    results = []
    for offset, suite in enumerate(ALL_SUITES):
        rng = np.random.default_rng(seed + 1000 * offset)
        results.append(suite(rng, trials, tol, dims))
    return results
