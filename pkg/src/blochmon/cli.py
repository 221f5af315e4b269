"""Command line front end.

Four subcommands: ``sweep`` writes the spin-1 irreality grid, ``evolve``
emits per-cycle trajectory rows, ``nmin`` prints the monitoring plan for a
target irreality as one JSON line, ``validate`` runs the seeded property
suites.  Identical flags and seed give byte-identical output; files are
written through a temp-and-rename so failures leave nothing partial.

Exit codes: 0 success, 1 runtime or validation failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Sequence

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
from .bounds import irreality, irreality_bound, plan_monitoring
from .channels import monitor, simplex_projector
from .errors import BlochmonError
from .experiments import (
    atomic_write_text,
    qutrit_sweep,
    spin1_operators,
    sweep_csv_text,
    tilted_spin_observable,
)
from .validate import run_all

EVOLVE_HEADER = "n,bloch_norm,epsilon,epsilon_valid,irreality_nats,bound_nats"
SWEEP_REFERENCE = 0.015  # reported (phi = pi/2, n = 1) cell value, for the summary line


@dataclass(frozen=True)
class RunConfig:
    """Validated knobs shared by the subcommands."""

    command: str
    d: int
    phi: float | None
    x_phi: float | None
    phi_points: int
    n_max: int
    delta: float
    seed: int
    trials: int
    tolerance: float
    output: str | None
    fmt: str
    a_hat: np.ndarray | None
    b_hat: np.ndarray | None
    x_hat: np.ndarray | None
    r0: np.ndarray | None


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"{text!r} is not a positive number")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} is not a positive integer")
    return value


def _vector(text: str) -> np.ndarray:
    try:
        return np.array([float(tok) for tok in text.split(",")], dtype=float)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated vector") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blochmon",
        description="Bloch-space monitoring of qudits under alternating measurements",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="spin-1 irreality grid over (phi, n)")
    sweep.add_argument("--phi-points", type=_positive_int, default=64)
    sweep.add_argument("--n-max", type=_positive_int, default=10)
    sweep.set_defaults(handler=cmd_sweep)

    evolve = sub.add_parser("evolve", help="per-cycle trajectory rows")
    evolve.add_argument("--d", type=int, choices=(2, 3), default=2)
    evolve.add_argument("--n-max", type=_positive_int, default=10)
    evolve.set_defaults(handler=cmd_evolve)

    nmin = sub.add_parser("nmin", help="plan cycles for a target irreality")
    nmin.add_argument("--d", type=int, choices=(2, 3), default=2)
    nmin.add_argument("--delta", type=_positive_float, required=True)
    nmin.set_defaults(handler=cmd_nmin)

    validate = sub.add_parser("validate", help="run the seeded property suites")
    validate.add_argument("--d", type=int, choices=range(2, 17), default=None)
    validate.add_argument("--trials", type=_positive_int, default=60)
    validate.add_argument("--tolerance", type=_positive_float, default=1e-10)
    validate.set_defaults(handler=cmd_validate)

    for cmd in (evolve, nmin):
        cmd.add_argument("--phi", type=float, default=None, help="angle between the two axes")
        cmd.add_argument("--x-phi", type=float, default=None, help="tilt of the probed observable (d=3)")
        cmd.add_argument("--a-hat", type=_vector, default=None, help="first axis, d=2 only")
        cmd.add_argument("--b-hat", type=_vector, default=None, help="second axis, d=2 only")
        cmd.add_argument("--x-hat", type=_vector, default=None, help="probed axis, d=2 only")
        cmd.add_argument("--r0", type=_vector, default=None, help="initial coordinate vector")
    for cmd in (sweep, evolve, nmin, validate):
        cmd.add_argument("--degrees", action="store_true", help="read angle flags in degrees")
        cmd.add_argument("--seed", type=int, default=1234)
        cmd.add_argument("-o", "--output", default=None)
        cmd.add_argument("--format", dest="fmt", choices=("csv", "jsonl"), default="csv")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    to_rad = math.pi / 180.0 if args.degrees else 1.0
    phi = getattr(args, "phi", None)
    x_phi = getattr(args, "x_phi", None)
    return RunConfig(
        command=args.command,
        d=getattr(args, "d", 3) or 3,
        phi=None if phi is None else phi * to_rad,
        x_phi=None if x_phi is None else x_phi * to_rad,
        phi_points=getattr(args, "phi_points", 64),
        n_max=getattr(args, "n_max", 10),
        delta=getattr(args, "delta", 1e-2),
        seed=args.seed,
        trials=getattr(args, "trials", 60),
        tolerance=getattr(args, "tolerance", 1e-10),
        output=args.output,
        fmt=args.fmt,
        a_hat=getattr(args, "a_hat", None),
        b_hat=getattr(args, "b_hat", None),
        x_hat=getattr(args, "x_hat", None),
        r0=getattr(args, "r0", None),
    )


def _unit(v: np.ndarray, name: str) -> np.ndarray:
    if v.shape != (3,):
        raise BlochmonError(f"{name} must have 3 components")
    norm = float(np.linalg.norm(v))
    if norm <= 0.0:
        raise BlochmonError(f"{name} must be a nonzero vector")
    return v / norm


def _axis_observable(axis: np.ndarray, basis: GellMannBasis) -> ProjectiveObservable:
    return observable_simplex(np.tensordot(axis, basis.matrices, axes=(0, 0)), basis)


def _geometry(
    cfg: RunConfig,
) -> tuple[BlochVector, ProjectiveObservable, ProjectiveObservable, ProjectiveObservable, GellMannBasis]:
    """Resolve flags into (r0, A, B, X, basis) for d = 2 or 3."""
    basis = gellmann_basis(cfg.d)
    if cfg.d == 2:
        a_hat = _unit(cfg.a_hat if cfg.a_hat is not None else np.array([0.0, 0.0, 1.0]), "a-hat")
        if cfg.b_hat is not None:
            b_hat = _unit(cfg.b_hat, "b-hat")
        elif cfg.phi is not None:
            b_hat = np.array([math.sin(cfg.phi), 0.0, math.cos(cfg.phi)])
        else:
            b_hat = np.array([1.0, 0.0, 0.0])
        # default probe: the first-measured axis (states land on b_hat, where
        # every cycle leaves X = B trivially real)
        x_hat = _unit(cfg.x_hat, "x-hat") if cfg.x_hat is not None else a_hat
        r0_vec = cfg.r0 if cfg.r0 is not None else np.array([0.0, 0.0, 1.0])
        r0 = BlochVector(dim=2, vec=r0_vec)
        return (
            r0,
            _axis_observable(a_hat, basis),
            _axis_observable(b_hat, basis),
            _axis_observable(x_hat, basis),
            basis,
        )
    phi = cfg.phi if cfg.phi is not None else math.pi / 4.0
    if cfg.a_hat is not None or cfg.b_hat is not None or cfg.x_hat is not None:
        raise BlochmonError("axis flags are for d=2; use --phi and --x-phi for d=3")
    a = tilted_spin_observable(phi, basis)
    _, _, sz = spin1_operators()
    b = observable_simplex(sz, basis)
    x = tilted_spin_observable(cfg.x_phi, basis) if cfg.x_phi is not None else a
    if cfg.r0 is not None:
        r0 = BlochVector(dim=3, vec=cfg.r0)
        from_bloch(r0, basis)  # reject unphysical coordinates up front
    else:
        r0 = to_bloch(DensityMatrix(dim=3, matrix=np.diag([0.0, 0.0, 1.0]).astype(complex)), basis)
    return r0, a, b, x, basis


def _deliver(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        atomic_write_text(output, text)


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _config(args)
    phi_values = np.linspace(0.0, math.pi / 2.0, cfg.phi_points)
    grid = qutrit_sweep(phi_values, np.arange(1, cfg.n_max + 1))
    if cfg.fmt == "csv":
        text = sweep_csv_text(grid)
    else:
        rows = []
        for ip, phi in enumerate(grid.phi_values):
            for col, n in enumerate(grid.n_values):
                rows.append(json.dumps({
                    "phi_rad": float(phi),
                    "n": int(n),
                    "max_irreality_nats": float(grid.max_irreality[ip, col]),
                    "bloch_norm": float(grid.bloch_norm[ip, col]),
                }, sort_keys=True))
        text = "\n".join(rows) + "\n"
    _deliver(text, cfg.output)

    summary = None
    half_pi = np.where(np.abs(grid.phi_values - math.pi / 2.0) < 1e-9)[0]
    if len(half_pi) and int(grid.n_values[0]) == 1:
        cell = float(grid.max_irreality[int(half_pi[0]), 0])
        summary = (
            f"I(phi=pi/2, n=1) = {cell:.12g} nats "
            f"(deviation from {SWEEP_REFERENCE}: {cell - SWEEP_REFERENCE:+.3e})"
        )
    if summary:
        # keep stdout parseable when the grid itself goes there
        print(summary, file=sys.stdout if cfg.output else sys.stderr)
    return 0


def cmd_evolve(args: argparse.Namespace) -> int:
    cfg = _config(args)
    r0, a, b, x, basis = _geometry(cfg)
    traj = monitor(r0, simplex_projector(a), simplex_projector(b), cfg.n_max)
    px = simplex_projector(x)
    lines = [] if cfg.fmt == "jsonl" else [EVOLVE_HEADER]
    for step in traj.steps:
        irr = irreality(x, from_bloch(step.r, basis))
        cap = irreality_bound(step.r, px)
        if cfg.fmt == "csv":
            lines.append(
                f"{step.n},{step.norm:.12g},{step.epsilon:.12g},"
                f"{int(step.epsilon_valid)},{irr:.12g},{cap:.12g}"
            )
        else:
            lines.append(json.dumps({
                "n": step.n,
                "bloch_norm": step.norm,
                "epsilon": step.epsilon,
                "epsilon_valid": step.epsilon_valid,
                "irreality_nats": irr,
                "bound_nats": cap,
            }, sort_keys=True))
    _deliver("\n".join(lines) + "\n", cfg.output)
    return 0


def cmd_nmin(args: argparse.Namespace) -> int:
    cfg = _config(args)
    r0, a, b, x, basis = _geometry(cfg)
    report = plan_monitoring(r0, a, b, x, cfg.delta, basis)
    record = {
        "delta": report.delta,
        "dimension_factor": report.dim_factor,
        "eps_max": report.eps_max,
        "n_min": "infinity" if math.isinf(report.n_min) else report.n_min,
        "steps_run": report.steps_run,
        "irreality_nats": report.irreality,
        "bound_nats": report.bound_rhs,
    }
    if math.isinf(report.n_min):
        record["note"] = (
            "the cycle map does not contract this trajectory; "
            "no finite number of cycles reaches the target"
        )
    _deliver(json.dumps(record, sort_keys=True) + "\n", cfg.output)
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    cfg = _config(args)
    dims = (args.d,) if args.d is not None else None
    results = run_all(seed=cfg.seed, trials=cfg.trials, tol=cfg.tolerance, dims=dims)
    lines = []
    all_ok = True
    for res in results:
        if res.passed:
            lines.append(f"PASS {res.name} (trials={res.trials}, worst={res.worst:.3e})")
        else:
            all_ok = False
            lines.append(f"FAIL {res.name} ({res.failures}/{res.trials}): {res.detail}")
    text = "\n".join(lines) + "\n"
    _deliver(text, cfg.output)
    return 0 if all_ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (BlochmonError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
