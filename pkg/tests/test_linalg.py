"""Eigenproblem and entropy contracts.

Frozen scalars come from an independent hand evaluation of the formulas,
not from the module under test.
"""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blochmon.errors import BlochmonError, NotAStateError, NotHermitianError
from blochmon.linalg import (
    Spectrum,
    binary_entropy,
    eigh,
    relative_entropy,
    schatten_norm,
    von_neumann_entropy,
)

# -ln(3/4)*3/4 - ln(1/4)/4, evaluated independently
ENTROPY_3_4 = 0.5623351446188083


def _random_hermitian(rng: np.random.Generator, d: int) -> np.ndarray:
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (z + z.conj().T) / 2.0


def _random_state(rng: np.random.Generator, d: int) -> np.ndarray:
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ g.conj().T
    return m / np.real(np.trace(m))


class TestEigh:
    def test_descending_order_and_reconstruction(self):
        rng = np.random.default_rng(100)
        for d in (2, 3, 5, 8):
            for _ in range(20):
                m = _random_hermitian(rng, d)
                spec = eigh(m)
                assert isinstance(spec, Spectrum)
                assert np.all(np.diff(spec.eigenvalues) <= 0)
                rebuilt = spec.eigenvectors @ np.diag(spec.eigenvalues) @ spec.eigenvectors.conj().T
                assert np.max(np.abs(rebuilt - m)) < 1e-10

    def test_eigenvectors_unitary(self):
        rng = np.random.default_rng(101)
        spec = eigh(_random_hermitian(rng, 6))
        gram = spec.eigenvectors.conj().T @ spec.eigenvectors
        assert np.max(np.abs(gram - np.eye(6))) < 1e-10

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_rejects_non_square(self):
        with pytest.raises(BlochmonError):
            eigh(np.zeros((2, 3)))

    def test_results_read_only(self):
        spec = eigh(np.diag([2.0, 1.0]))
        with pytest.raises(ValueError):
            spec.eigenvalues[0] = 5.0

    @given(st.integers(min_value=0, max_value=2**31))
    @settings(max_examples=25, deadline=None)
    def test_reconstruction_property(self, seed):
        rng = np.random.default_rng(seed)
        d = int(rng.integers(2, 7))
        m = _random_hermitian(rng, d)
        spec = eigh(m)
        rebuilt = spec.eigenvectors @ np.diag(spec.eigenvalues) @ spec.eigenvectors.conj().T
        assert np.max(np.abs(rebuilt - m)) < 1e-10


class TestVonNeumannEntropy:
    def test_pure_state_zero(self):
        assert von_neumann_entropy(np.diag([1.0, 0.0, 0.0])) <= 1e-12

    def test_maximally_mixed(self):
        for d in (2, 3, 5):
            s = von_neumann_entropy(np.eye(d) / d)
            assert abs(s - math.log(d)) < 1e-12

    def test_frozen_two_level_value(self):
        assert von_neumann_entropy(np.diag([0.75, 0.25])) == pytest.approx(
            ENTROPY_3_4, abs=1e-12
        )

    def test_unitary_invariance(self):
        rng = np.random.default_rng(102)
        rho = _random_state(rng, 4)
        q, _ = np.linalg.qr(rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
        assert von_neumann_entropy(q @ rho @ q.conj().T) == pytest.approx(
            von_neumann_entropy(rho), abs=1e-10
        )

    def test_rejects_wrong_trace(self):
        with pytest.raises(NotAStateError):
            von_neumann_entropy(np.diag([0.75, 0.75]))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(NotAStateError):
            von_neumann_entropy(np.diag([1.0 + 1e-6, -1e-6]))

    def test_clips_rounding_negatives(self):
        s = von_neumann_entropy(np.diag([1.0 + 5e-11, -5e-11]))
        assert 0.0 <= s <= 1e-9


class TestRelativeEntropy:
    def test_self_is_zero(self):
        rng = np.random.default_rng(103)
        rho = _random_state(rng, 3)
        assert relative_entropy(rho, rho) <= 1e-10

    def test_nonnegative(self):
        rng = np.random.default_rng(104)
        for _ in range(30):
            d = int(rng.integers(2, 5))
            assert relative_entropy(_random_state(rng, d), _random_state(rng, d)) >= 0.0

    def test_dephasing_identity(self):
        # S(rho || diag(rho)) must equal S(diag(rho)) - S(rho)
        rng = np.random.default_rng(105)
        for d in (2, 3, 4):
            for _ in range(25):
                rho = _random_state(rng, d)
                diag = np.diag(np.diag(rho))
                lhs = relative_entropy(rho, diag)
                rhs = von_neumann_entropy(diag) - von_neumann_entropy(rho)
                assert lhs == pytest.approx(rhs, abs=1e-10)

    def test_disjoint_support_infinite(self):
        rho = np.diag([1.0, 0.0])
        sigma = np.diag([0.0, 1.0])
        assert relative_entropy(rho, sigma) == math.inf

    def test_frozen_diagonal_value(self):
        # sum p (ln p - ln q) for p=(3/4,1/4), q=(1/2,1/2), by hand
        rho = np.diag([0.75, 0.25])
        sigma = np.diag([0.5, 0.5])
        expected = 0.75 * math.log(1.5) + 0.25 * math.log(0.5)
        assert relative_entropy(rho, sigma) == pytest.approx(expected, abs=1e-12)


class TestSchattenNorm:
    def test_trace_norm_hermitian_matches_abs_eigenvalues(self):
        rng = np.random.default_rng(106)
        m = _random_hermitian(rng, 5)
        assert schatten_norm(m, 1) == pytest.approx(
            float(np.sum(np.abs(np.linalg.eigvalsh(m)))), abs=1e-10
        )

    def test_frobenius(self):
        m = np.array([[3.0, 0.0], [0.0, 4.0]])
        assert schatten_norm(m, 2) == pytest.approx(5.0, abs=1e-12)

    def test_order_relation(self):
        # ||m||_2 <= ||m||_1 <= sqrt(d) ||m||_2
        rng = np.random.default_rng(107)
        for _ in range(30):
            d = int(rng.integers(2, 7))
            m = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
            n1, n2 = schatten_norm(m, 1), schatten_norm(m, 2)
            assert n2 <= n1 + 1e-12
            assert n1 <= math.sqrt(d) * n2 + 1e-12

    def test_rejects_unsupported_order(self):
        with pytest.raises(BlochmonError):
            schatten_norm(np.eye(2), 3)


class TestBinaryEntropy:
    def test_endpoints(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_peak(self):
        assert binary_entropy(0.5) == pytest.approx(math.log(2.0), abs=1e-12)

    @given(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
    @settings(max_examples=50, deadline=None)
    def test_symmetry_and_range(self, t):
        h = binary_entropy(t)
        assert 0.0 <= h <= math.log(2.0) + 1e-12
        assert h == pytest.approx(binary_entropy(1.0 - t), abs=1e-12)

    @pytest.mark.parametrize("t", [-0.1, 1.1, 2.0, -1e-9])
    def test_rejects_outside_domain(self, t):
        with pytest.raises(BlochmonError):
            binary_entropy(t)


class TestEntropyContinuity:
    def test_audenaert_bound_random_pairs(self):
        # |S(rho)-S(sigma)| <= T ln(d-1) + H_bin(T), T the trace distance
        rng = np.random.default_rng(108)
        for d in (3, 4):
            for _ in range(40):
                rho, sigma = _random_state(rng, d), _random_state(rng, d)
                t = min(0.5 * schatten_norm(rho - sigma, 1), 1.0)
                gap = abs(von_neumann_entropy(rho) - von_neumann_entropy(sigma))
                assert gap <= t * math.log(d - 1) + binary_entropy(t) + 1e-10

    def test_binary_entropy_sqrt_domination(self):
        for t in np.linspace(0.0, 1.0, 501):
            assert binary_entropy(float(t)) <= math.sqrt(2.0 * t) + 1e-12
