"""Generator basis, coordinate maps, and simplex geometry.

The positivity-boundary oracle: along the last diagonal generator
direction the lowest eigenvalue of the reconstructed state is
(1 - (d-1) t) / d, so coordinates of length t are physical iff
t <= 1/(d-1).  Derived by hand from the generator's diagonal entries.
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blochmon.bloch import (
    BlochVector,
    DensityMatrix,
    from_bloch,
    gellmann_basis,
    observable_simplex,
    outcome_probabilities,
    outcome_probability,
    to_bloch,
)
from blochmon.errors import (
    DimensionError,
    NotAStateError,
    ObservableError,
)
from blochmon.experiments import random_instance

PAULIS = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


class TestGellmannBasis:
    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
    def test_count_hermitian_traceless(self, d):
        basis = gellmann_basis(d)
        assert basis.matrices.shape == (d * d - 1, d, d)
        for m in basis.matrices:
            assert np.max(np.abs(m - m.conj().T)) < 1e-15
            assert abs(np.trace(m)) < 1e-15

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
    def test_orthonormality(self, d):
        basis = gellmann_basis(d)
        k = d * d - 1
        gram = np.einsum("aij,bji->ab", basis.matrices, basis.matrices).real
        assert np.max(np.abs(gram - 2.0 * np.eye(k))) < 1e-12

    def test_qubit_basis_is_pauli(self):
        basis = gellmann_basis(2)
        for got, want in zip(basis.matrices, (PAULIS["x"], PAULIS["y"], PAULIS["z"])):
            assert np.max(np.abs(got - want)) == 0.0

    @pytest.mark.parametrize("d,scale", [(2, 1.0), (3, math.sqrt(3.0)), (4, math.sqrt(6.0))])
    def test_scale_constant(self, d, scale):
        assert gellmann_basis(d).bloch_scale == pytest.approx(scale, abs=1e-14)

    def test_cached_and_immutable(self):
        basis = gellmann_basis(3)
        assert basis is gellmann_basis(3)
        with pytest.raises(ValueError):
            basis.matrices[0, 0, 0] = 9.0

    def test_rejects_dimension_below_two(self):
        with pytest.raises(DimensionError):
            gellmann_basis(1)


class TestCoordinateMaps:
    def test_roundtrip_random_states(self):
        rng = np.random.default_rng(200)
        for d in (2, 3, 4):
            basis = gellmann_basis(d)
            for _ in range(50):
                rho, _, _ = random_instance(d, rng)
                r = to_bloch(rho, basis)
                assert r.norm <= 1.0 + 1e-12
                back = from_bloch(r, basis)
                assert np.max(np.abs(back.matrix - rho.matrix)) < 1e-11

    def test_maximally_mixed_is_origin(self):
        for d in (2, 3, 4):
            basis = gellmann_basis(d)
            r = to_bloch(DensityMatrix(dim=d, matrix=np.eye(d) / d), basis)
            assert r.norm < 1e-14

    def test_qubit_ground_state_coordinates(self):
        basis = gellmann_basis(2)
        r = to_bloch(DensityMatrix(dim=2, matrix=np.diag([1.0, 0.0]).astype(complex)), basis)
        assert np.max(np.abs(r.vec - np.array([0.0, 0.0, 1.0]))) < 1e-14

    def test_pure_state_norm_is_one(self):
        rng = np.random.default_rng(201)
        for d in (2, 3, 4):
            basis = gellmann_basis(d)
            psi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            psi /= np.linalg.norm(psi)
            rho = DensityMatrix(dim=d, matrix=np.outer(psi, psi.conj()))
            assert to_bloch(rho, basis).norm == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_positivity_boundary_scan(self, d):
        # physical iff t <= 1/(d-1) along the last diagonal direction
        basis = gellmann_basis(d)
        k = d * d - 1
        star = 1.0 / (d - 1)
        for t, physical in ((star - 1e-2, True), (star + 1e-2, False), (1.0, d == 2)):
            vec = np.zeros(k)
            vec[-1] = t
            if physical:
                state = from_bloch(BlochVector(dim=d, vec=vec), basis)
                assert float(np.linalg.eigvalsh(state.matrix).min()) >= -1e-10
            else:
                # for d=2 the shell itself is the boundary, so the overshoot
                # may already fail norm validation at construction
                with pytest.raises(NotAStateError):
                    from_bloch(BlochVector(dim=d, vec=vec), basis)

    def test_dimension_mismatch_rejected(self):
        basis2, basis3 = gellmann_basis(2), gellmann_basis(3)
        rho = DensityMatrix(dim=2, matrix=np.eye(2) / 2)
        with pytest.raises(DimensionError):
            to_bloch(rho, basis3)
        with pytest.raises(DimensionError):
            from_bloch(BlochVector(dim=2, vec=np.zeros(3)), basis3)

    @given(st.integers(min_value=0, max_value=2**31))
    @settings(max_examples=30, deadline=None)
    def test_roundtrip_property(self, seed):
        rng = np.random.default_rng(seed)
        d = int(rng.integers(2, 5))
        basis = gellmann_basis(d)
        rho, _, _ = random_instance(d, rng)
        back = from_bloch(to_bloch(rho, basis), basis)
        assert np.max(np.abs(back.matrix - rho.matrix)) < 1e-10


class TestBlochVectorValidation:
    def test_rejects_wrong_length(self):
        with pytest.raises(DimensionError):
            BlochVector(dim=2, vec=np.zeros(4))

    def test_rejects_norm_beyond_ball(self):
        with pytest.raises(NotAStateError):
            BlochVector(dim=2, vec=np.array([1.1, 0.0, 0.0]))

    def test_vector_read_only(self):
        r = BlochVector(dim=2, vec=np.array([0.0, 0.0, 0.5]))
        with pytest.raises(ValueError):
            r.vec[0] = 1.0


class TestDensityMatrixValidation:
    def test_rejects_non_hermitian(self):
        from blochmon.errors import NotHermitianError
        with pytest.raises(NotHermitianError):
            DensityMatrix(dim=2, matrix=np.array([[0.5, 0.5], [0.0, 0.5]]))

    def test_rejects_trace_away_from_one(self):
        with pytest.raises(NotAStateError):
            DensityMatrix(dim=2, matrix=np.eye(2))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(NotAStateError):
            DensityMatrix(dim=2, matrix=np.diag([1.5, -0.5]))


class TestObservableSimplex:
    def test_pauli_z_vertices(self):
        basis = gellmann_basis(2)
        obs = observable_simplex(PAULIS["z"], basis)
        assert np.all(np.diff(obs.eigenvalues) < 0)
        assert np.max(np.abs(obs.vertices[0] - np.array([0, 0, 1.0]))) < 1e-14
        assert np.max(np.abs(obs.vertices[1] - np.array([0, 0, -1.0]))) < 1e-14

    def test_vertex_geometry_random(self):
        rng = np.random.default_rng(202)
        for d in (2, 3, 4):
            basis = gellmann_basis(d)
            for _ in range(20):
                _, obs, _ = random_instance(d, rng)
                norms = np.linalg.norm(obs.vertices, axis=1)
                assert np.max(np.abs(norms - 1.0)) < 1e-10
                assert np.max(np.abs(obs.vertices.sum(axis=0))) < 1e-10
                gram = obs.vertices @ obs.vertices.T
                want = (np.eye(d) * d - 1.0) / (d - 1)
                assert np.max(np.abs(gram - want)) < 1e-10

    def test_projectors_complete_and_rank_one(self):
        rng = np.random.default_rng(203)
        _, obs, _ = random_instance(4, rng)
        total = obs.projectors.sum(axis=0)
        assert np.max(np.abs(total - np.eye(4))) < 1e-10
        for p in obs.projectors:
            assert np.linalg.matrix_rank(p, tol=1e-8) == 1
            assert np.max(np.abs(p @ p - p)) < 1e-10

    def test_matrix_reassembles(self):
        rng = np.random.default_rng(204)
        basis = gellmann_basis(3)
        z = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        h = (z + z.conj().T) / 2
        obs = observable_simplex(h, basis)
        assert np.max(np.abs(obs.matrix() - h)) < 1e-10

    def test_rejects_degenerate_spectrum(self):
        basis = gellmann_basis(3)
        with pytest.raises(ObservableError):
            observable_simplex(np.diag([1.0, 1.0, 0.0]), basis)
        with pytest.raises(ObservableError):
            observable_simplex(np.eye(3), basis)

    def test_rejects_near_degenerate_spectrum(self):
        basis = gellmann_basis(2)
        with pytest.raises(ObservableError):
            observable_simplex(np.diag([1.0, 1.0 - 1e-10]), basis)

    def test_rejects_wrong_shape(self):
        with pytest.raises(DimensionError):
            observable_simplex(np.eye(3), gellmann_basis(2))


class TestOutcomeProbabilities:
    def test_against_trace_rule(self):
        rng = np.random.default_rng(205)
        for d in (2, 3, 4):
            basis = gellmann_basis(d)
            for _ in range(25):
                rho, obs, _ = random_instance(d, rng)
                r = to_bloch(rho, basis)
                got = outcome_probabilities(obs, r)
                want = np.array(
                    [float(np.real(np.trace(p @ rho.matrix))) for p in obs.projectors]
                )
                assert np.max(np.abs(got - want)) < 1e-10

    def test_normalization_and_positivity(self):
        rng = np.random.default_rng(206)
        basis = gellmann_basis(3)
        for _ in range(25):
            rho, obs, _ = random_instance(3, rng)
            p = outcome_probabilities(obs, to_bloch(rho, basis))
            assert float(np.sum(p)) == pytest.approx(1.0, abs=1e-10)
            assert float(np.min(p)) >= -1e-10

    def test_eigenstate_is_certain(self):
        basis = gellmann_basis(3)
        obs = observable_simplex(np.diag([2.0, 1.0, 0.0]), basis)
        r = BlochVector(dim=3, vec=obs.vertices[0])
        assert outcome_probability(obs.vertices[0], r) == pytest.approx(1.0, abs=1e-12)
        assert outcome_probabilities(obs, r)[1] == pytest.approx(0.0, abs=1e-12)

    def test_center_is_uniform(self):
        basis = gellmann_basis(4)
        rng = np.random.default_rng(207)
        _, obs, _ = random_instance(4, rng)
        p = outcome_probabilities(obs, BlochVector(dim=4, vec=np.zeros(15)))
        assert np.max(np.abs(p - 0.25)) < 1e-14

    def test_dimension_mismatch_rejected(self):
        rng = np.random.default_rng(208)
        _, obs, _ = random_instance(3, rng)
        with pytest.raises(DimensionError):
            outcome_probabilities(obs, BlochVector(dim=2, vec=np.zeros(3)))
