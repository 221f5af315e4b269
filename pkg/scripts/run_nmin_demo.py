"""Show the monitoring-step planner on a qubit and a qutrit instance.

For each target delta the planner measures the per-cycle contraction and
the probe observable's residual, turns them into a step budget, runs that
many cycles, and reports the irreality actually reached.
"""
from __future__ import annotations

import math
import sys

import numpy as np

from blochmon.bloch import (
    BlochVector,
    DensityMatrix,
    gellmann_basis,
    observable_simplex,
    to_bloch,
)
from blochmon.bounds import plan_monitoring
from blochmon.experiments import tilted_spin_observable


def qubit_case(delta: float) -> None:
    basis = gellmann_basis(2)
    phi = math.acos(0.7)
    sx = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    sz = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
    a = observable_simplex(sz, basis)
    b = observable_simplex(math.cos(phi) * sz + math.sin(phi) * sx, basis)
    r0 = BlochVector(dim=2, vec=np.array([0.0, 0.0, 1.0]))
    report = plan_monitoring(r0, a, b, a, delta, basis)
    print(f"  qubit, axes {math.degrees(phi):.1f} deg apart, delta={delta}:")
    print(f"    eps_max={report.eps_max:.6f}  n_min={report.n_min:.2f}  "
          f"steps_run={report.steps_run}  reached {report.irreality:.3e} nats")


def qutrit_case(delta: float) -> None:
    basis = gellmann_basis(3)
    a = tilted_spin_observable(math.pi / 4, basis)
    b = tilted_spin_observable(0.0, basis)
    rho0 = np.diag([0.0, 0.0, 1.0]).astype(complex)
    r0 = to_bloch(DensityMatrix(dim=3, matrix=rho0), basis)
    report = plan_monitoring(r0, a, b, a, delta, basis)
    print(f"  qutrit, tilt pi/4, delta={delta}:")
    print(f"    eps_max={report.eps_max:.6f}  n_min={report.n_min:.2f}  "
          f"steps_run={report.steps_run}  reached {report.irreality:.3e} nats")


def main() -> int:
    for delta in (0.1, 0.01, 0.001):
        qubit_case(delta)
        qutrit_case(delta)
    return 0


if __name__ == "__main__":
    sys.exit(main())
