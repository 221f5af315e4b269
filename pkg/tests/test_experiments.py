"""Sweep, closed form, random draws, CSV emission.

Grid values are pinned against an independent reimplementation (plain
eigendecomposition and projector sandwiches, no package code) that was run
separately; the constants below are copied from its output.
"""
import math
import os

import numpy as np
import pytest

from blochmon.bloch import BlochVector, gellmann_basis, to_bloch
from blochmon.channels import monitor, simplex_projector
from blochmon.errors import BlochmonError, DimensionError
from blochmon.experiments import (
    CSV_HEADER,
    atomic_write_text,
    emit_sweep_csv,
    fourier_observable,
    qubit_closed_form,
    qutrit_sweep,
    random_instance,
    spin1_operators,
    sweep_csv_text,
    tilted_spin_observable,
)

# max-irreality at phi = pi/2 for n = 1..4, independent oracle output
HALF_PI_COLUMN = (
    0.016416758629342665,
    0.0009872274779023638,
    6.119597933529342e-05,
    3.81718808295517e-06,
)
# same at phi = pi/4
QUARTER_PI_COLUMN = (
    0.203689773371732,
    0.04794589685095718,
    0.011786957559565714,
    0.0029339718011118787,
)
# first grid row (phi index) where the value drops below ln(3)/2, per n,
# on the default 64-point grid; nonincreasing = the decay front steepens
STEEPENING_INDICES = [20, 14, 12, 10, 9, 8, 8, 7, 7, 7]


class TestSpinOperators:
    def test_commutators_cyclic(self):
        sx, sy, sz = spin1_operators()
        assert np.max(np.abs(sx @ sy - sy @ sx - 1j * sz)) < 1e-14
        assert np.max(np.abs(sy @ sz - sz @ sy - 1j * sx)) < 1e-14
        assert np.max(np.abs(sz @ sx - sx @ sz - 1j * sy)) < 1e-14

    def test_spectra(self):
        for s in spin1_operators():
            w = np.sort(np.linalg.eigvalsh(s))
            assert np.max(np.abs(w - np.array([-1.0, 0.0, 1.0]))) < 1e-12

    def test_tilted_observable_spectrum_stable(self):
        basis = gellmann_basis(3)
        for phi in (0.0, 0.3, math.pi / 4, 1.2, math.pi / 2):
            obs = tilted_spin_observable(phi, basis)
            assert np.max(np.abs(obs.eigenvalues - np.array([1.0, 0.0, -1.0]))) < 1e-12


class TestFourierObservable:
    def test_unbiased_against_computational(self):
        basis = gellmann_basis(3)
        from blochmon.bloch import observable_simplex
        comp = observable_simplex(np.diag([1.0, 0.0, -1.0]), basis)
        four = fourier_observable(3, basis)
        assert np.max(np.abs(comp.vertices @ four.vertices.T)) < 1e-12

    def test_overlaps_uniform(self):
        basis = gellmann_basis(4)
        four = fourier_observable(4, basis)
        for p in four.projectors:
            assert np.max(np.abs(np.diag(p).real - 0.25)) < 1e-12


class TestQutritSweep:
    def test_default_shape(self):
        grid = qutrit_sweep()
        assert grid.max_irreality.shape == (64, 10)
        assert grid.bloch_norm.shape == (64, 10)
        assert grid.phi_values[0] == 0.0
        assert grid.phi_values[-1] == pytest.approx(math.pi / 2, abs=1e-15)

    def test_pinned_half_pi_column(self):
        grid = qutrit_sweep(np.array([math.pi / 2]), np.arange(1, 5))
        for col, want in enumerate(HALF_PI_COLUMN):
            assert grid.max_irreality[0, col] == pytest.approx(want, abs=1e-12)

    def test_pinned_quarter_pi_column(self):
        grid = qutrit_sweep(np.array([math.pi / 4]), np.arange(1, 5))
        for col, want in enumerate(QUARTER_PI_COLUMN):
            assert grid.max_irreality[0, col] == pytest.approx(want, abs=1e-12)

    def test_commuting_column_stays_maximal(self):
        grid = qutrit_sweep(np.array([0.0]), np.arange(1, 11))
        assert np.max(np.abs(grid.max_irreality[0] - math.log(3.0))) < 1e-12
        assert np.max(np.abs(grid.bloch_norm[0] - 1.0)) < 1e-12

    def test_values_decrease_in_n(self):
        grid = qutrit_sweep(np.array([0.4, math.pi / 4, 1.2]), np.arange(1, 11))
        for row in grid.max_irreality:
            diffs = np.diff(row)
            assert np.all(diffs <= 0.0)
            # strict until the value underflows to the float floor
            live = row[:-1] > 1e-13
            assert np.all(diffs[live] < 0.0)

    def test_decay_front_steepens(self):
        grid = qutrit_sweep()
        threshold = 0.5 * math.log(3.0)
        indices = [int(np.argmax(grid.max_irreality[:, j] < threshold)) for j in range(10)]
        assert indices == STEEPENING_INDICES
        assert all(b <= a for a, b in zip(indices, indices[1:]))

    def test_rejects_bad_axes(self):
        with pytest.raises(BlochmonError):
            qutrit_sweep(np.array([0.1]), np.array([2, 1]))
        with pytest.raises(BlochmonError):
            qutrit_sweep(np.array([0.1]), np.array([0, 1]))
        with pytest.raises(BlochmonError):
            qutrit_sweep(np.array([]), np.array([1]))

    def test_cross_check_can_be_disabled(self):
        grid = qutrit_sweep(np.array([0.7]), np.array([1, 2]), cross_checks=0)
        assert grid.max_irreality.shape == (1, 2)


class TestQubitClosedForm:
    def test_matches_monitoring(self):
        rng = np.random.default_rng(500)
        basis = gellmann_basis(2)
        for _ in range(20):
            rho, a, b = random_instance(2, rng)
            r0 = to_bloch(rho, basis)
            traj = monitor(r0, simplex_projector(a), simplex_projector(b), 4)
            for step in traj.steps:
                want = qubit_closed_form(a.vertices[0], b.vertices[0], r0.vec, step.n)
                assert np.max(np.abs(step.r.vec - want)) < 1e-12

    def test_validation(self):
        e = np.array([0.0, 0.0, 1.0])
        with pytest.raises(BlochmonError):
            qubit_closed_form(2 * e, e, e, 1)
        with pytest.raises(BlochmonError):
            qubit_closed_form(e, e, e, 0)
        with pytest.raises(DimensionError):
            qubit_closed_form(e, e, np.zeros(4), 1)


class TestRandomInstance:
    def test_states_valid_and_observables_nondegenerate(self):
        rng = np.random.default_rng(501)
        for d in (2, 3, 5):
            for _ in range(20):
                rho, a, b = random_instance(d, rng)
                assert abs(float(np.real(np.trace(rho.matrix))) - 1.0) < 1e-10
                assert float(np.linalg.eigvalsh(rho.matrix).min()) > -1e-12
                for obs in (a, b):
                    gaps = obs.eigenvalues[:-1] - obs.eigenvalues[1:]
                    assert float(gaps.min()) >= 1e-6

    def test_deterministic_under_seed(self):
        r1 = random_instance(3, np.random.default_rng(42))
        r2 = random_instance(3, np.random.default_rng(42))
        assert np.array_equal(r1[0].matrix, r2[0].matrix)
        assert np.array_equal(r1[1].projectors, r2[1].projectors)

    def test_rejects_out_of_range_dimension(self):
        rng = np.random.default_rng(502)
        with pytest.raises(DimensionError):
            random_instance(1, rng)
        with pytest.raises(DimensionError):
            random_instance(17, rng)


class TestCsvEmission:
    def test_schema_and_row_count(self):
        grid = qutrit_sweep(np.linspace(0, math.pi / 2, 4), np.arange(1, 4))
        text = sweep_csv_text(grid)
        lines = text.splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 1 + 4 * 3
        assert text.endswith("\n")
        assert "\r" not in text

    def test_round_trips_at_twelve_digits(self):
        grid = qutrit_sweep(np.linspace(0, math.pi / 2, 4), np.arange(1, 4))
        rows = sweep_csv_text(grid).splitlines()[1:]
        k = 0
        for ip in range(4):
            for col in range(3):
                phi_s, n_s, val_s, norm_s = rows[k].split(",")
                assert float(phi_s) == pytest.approx(float(grid.phi_values[ip]), rel=1e-11)
                assert int(n_s) == int(grid.n_values[col])
                assert float(val_s) == pytest.approx(
                    float(grid.max_irreality[ip, col]), rel=1e-11, abs=1e-15
                )
                assert float(norm_s) == pytest.approx(
                    float(grid.bloch_norm[ip, col]), rel=1e-11, abs=1e-15
                )
                k += 1

    def test_emit_is_deterministic(self, tmp_path):
        grid = qutrit_sweep(np.linspace(0, math.pi / 2, 3), np.arange(1, 3))
        p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
        emit_sweep_csv(grid, str(p1))
        emit_sweep_csv(grid, str(p2))
        assert p1.read_bytes() == p2.read_bytes()

    def test_atomic_write_leaves_no_partial_file(self, tmp_path):
        target = tmp_path / "missing" / "out.csv"
        with pytest.raises(OSError):
            atomic_write_text(str(target), "data")
        assert not target.exists()
        assert os.listdir(tmp_path) == []
