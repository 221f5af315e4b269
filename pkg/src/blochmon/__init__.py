"""Bloch-space dynamics of repeated nonselective qudit measurements.

The package models a d-level system through its generalized Bloch
coordinates, applies alternating nonselective measurements of two
noncommuting observables as linear projections of the coordinate vector,
and quantifies how fast the irreality of a third observable decays, with a
rigorous geometric bound and a cycle-count prescription for a target.
"""
from .bloch import (
    BlochVector,
    DensityMatrix,
    GellMannBasis,
    ProjectiveObservable,
    from_bloch,
    gellmann_basis,
    observable_simplex,
    outcome_probabilities,
    outcome_probability,
    to_bloch,
)
from .bounds import (
    BoundReport,
    binary_entropy_gap_bound,
    dimension_factor,
    irreality,
    irreality_bound,
    max_epsilon,
    max_irreality,
    min_monitoring_steps,
    plan_monitoring,
    qubit_irreality_bound,
)
from .channels import (
    SimplexProjector,
    Trajectory,
    TrajectoryStep,
    dephase,
    dephase_with_projectors,
    monitor,
    pairwise_step,
    simplex_projector,
    stinespring_deviation,
)
from .errors import (
    BlochmonError,
    DimensionError,
    NotAStateError,
    NotHermitianError,
    ObservableError,
)
from .experiments import (
    SweepGrid,
    emit_sweep_csv,
    fourier_observable,
    qubit_closed_form,
    qutrit_sweep,
    random_instance,
    spin1_operators,
    sweep_csv_text,
    tilted_spin_observable,
)
from .linalg import (
    Spectrum,
    binary_entropy,
    eigh,
    relative_entropy,
    schatten_norm,
    von_neumann_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "BlochVector",
    "BlochmonError",
    "BoundReport",
    "DensityMatrix",
    "DimensionError",
    "GellMannBasis",
    "NotAStateError",
    "NotHermitianError",
    "ObservableError",
    "ProjectiveObservable",
    "SimplexProjector",
    "Spectrum",
    "SweepGrid",
    "Trajectory",
    "TrajectoryStep",
    "binary_entropy",
    "binary_entropy_gap_bound",
    "dephase",
    "dephase_with_projectors",
    "dimension_factor",
    "eigh",
    "emit_sweep_csv",
    "fourier_observable",
    "from_bloch",
    "gellmann_basis",
    "irreality",
    "irreality_bound",
    "max_epsilon",
    "max_irreality",
    "min_monitoring_steps",
    "monitor",
    "observable_simplex",
    "outcome_probabilities",
    "outcome_probability",
    "pairwise_step",
    "plan_monitoring",
    "qubit_closed_form",
    "qubit_irreality_bound",
    "qutrit_sweep",
    "random_instance",
    "relative_entropy",
    "schatten_norm",
    "simplex_projector",
    "spin1_operators",
    "stinespring_deviation",
    "sweep_csv_text",
    "tilted_spin_observable",
    "to_bloch",
    "von_neumann_entropy",
    "__version__",
]
