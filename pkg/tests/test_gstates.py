import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gausspage.linalg import InvalidArgument, RngStream, haar_orthogonal
from gausspage.gstates import (
    SystemSplit,
    bogoliubov_to_orthogonal,
    conjugate,
    entropy_from_spectrum,
    mode_entropy,
    reference_structure,
    restrict,
)
from gausspage.ensembles import gaussian_entropies, sample_gaussian_state
from gausspage.stats import ks_one_sample_critical, ks_statistic_one_sample

S_HALF = 0.5623351446188084  # s(1/2), frozen from high-precision evaluation


class TestReferenceStructure:
    def test_single_mode(self):
        assert np.array_equal(reference_structure(1), [[0.0, 1.0], [-1.0, 0.0]])

    @pytest.mark.parametrize("N", [1, 2, 5])
    def test_squares_to_minus_one(self, N):
        j0 = reference_structure(N)
        assert np.array_equal(j0 @ j0, -np.eye(2 * N))
        assert np.array_equal(j0.T, -j0)

    def test_rejects_zero(self):
        with pytest.raises(InvalidArgument):
            reference_structure(0)


class TestConjugate:
    def test_identity(self):
        j0 = reference_structure(3)
        assert np.array_equal(conjugate(j0, np.eye(6)), j0)

    def test_preserves_structure(self):
        j0 = reference_structure(4)
        m = haar_orthogonal(8, RngStream(0))
        j = conjugate(j0, m)
        assert np.max(np.abs(j @ j.T - np.eye(8))) <= 1e-10
        assert np.max(np.abs(j + j.T)) <= 1e-10

    def test_rejects_mismatch(self):
        with pytest.raises(InvalidArgument):
            conjugate(reference_structure(2), np.eye(6))


class TestBogoliubov:
    def test_trivial(self):
        m = bogoliubov_to_orthogonal(np.eye(2), np.zeros((2, 2)))
        assert np.allclose(m, np.eye(4))

    def test_phase_rotation(self):
        m = bogoliubov_to_orthogonal(1j * np.eye(1), np.zeros((1, 1)))
        assert np.allclose(m, [[0.0, -1.0], [1.0, 0.0]])

    def test_unitary_alpha_embeds(self):
        gen = np.random.default_rng(1)
        g = gen.standard_normal((3, 3)) + 1j * gen.standard_normal((3, 3))
        q, _ = np.linalg.qr(g)
        m = bogoliubov_to_orthogonal(q, np.zeros((3, 3)))
        assert np.max(np.abs(m @ m.T - np.eye(6))) <= 1e-10

    def test_rejects_noncanonical(self):
        with pytest.raises(InvalidArgument):
            bogoliubov_to_orthogonal(2.0 * np.eye(2), np.zeros((2, 2)))


class TestRestrict:
    def test_reference_is_product_state(self):
        j0 = reference_structure(4)
        for n_a in (1, 2, 4):
            x = restrict(j0, SystemSplit(4, n_a))
            assert np.allclose(x, np.ones(n_a))

    def test_full_system_is_pure(self):
        j = sample_gaussian_state(3, RngStream(5))
        x = restrict(j, SystemSplit(3, 3))
        assert np.allclose(x, np.ones(3), atol=1e-9)
        assert entropy_from_spectrum(x) <= 1e-9

    def test_single_mode_spectrum_is_uniform(self):
        # at N=2, N_A=1 the level density is exactly uniform on [0, 1]
        from gausspage.linalg import haar_orthogonal_batch

        n = 100_000
        gen = RngStream(7).generator()
        j0 = reference_structure(2)
        m = haar_orthogonal_batch(4, n, gen)
        j = m @ j0 @ np.swapaxes(m, -2, -1)
        block = j[:, [0, 2]][:, :, [0, 2]]
        ev = np.linalg.eigvalsh(np.swapaxes(block, -2, -1) @ block)
        xs = np.sort(np.sqrt(np.clip(ev.mean(axis=1), 0.0, 1.0)))
        stat = ks_statistic_one_sample(xs, xs)  # uniform CDF on [0,1] is x itself
        assert stat < ks_one_sample_critical(n, alpha=0.01)

    def test_entropy_complementarity(self):
        for n_a in (1, 2):
            j = sample_gaussian_state(5, RngStream(40 + n_a))
            sa = entropy_from_spectrum(restrict(j, SystemSplit(5, n_a)))
            # complement = modes n_a..5; relabel by flipping with a permutation
            perm = np.concatenate([np.arange(n_a, 5), np.arange(n_a)])
            idx = np.concatenate([perm, 5 + perm])
            sb = entropy_from_spectrum(restrict(j[np.ix_(idx, idx)], SystemSplit(5, 5 - n_a)))
            assert abs(sa - sb) <= 1e-9

    def test_invariant_under_complement_rotations(self):
        j = sample_gaussian_state(5, RngStream(9))
        split = SystemSplit(5, 2)
        base = entropy_from_spectrum(restrict(j, split))
        # orthogonal transformation acting only on subsystem B's modes
        q = haar_orthogonal(6, RngStream(10))
        m = np.eye(10)
        b_idx = np.concatenate([np.arange(2, 5), 5 + np.arange(2, 5)])
        m[np.ix_(b_idx, b_idx)] = q
        rotated = entropy_from_spectrum(restrict(m @ j @ m.T, split))
        assert abs(base - rotated) <= 1e-9


class TestEntropyFromSpectrum:
    def test_pure(self):
        assert entropy_from_spectrum(np.array([1.0, 1.0, 1.0])) == 0.0

    def test_maximally_mixed_mode(self):
        assert abs(entropy_from_spectrum(np.array([0.0])) - math.log(2.0)) <= 1e-15

    def test_half(self):
        assert abs(entropy_from_spectrum(np.array([0.5])) - S_HALF) <= 1e-12

    def test_rejects_out_of_range(self):
        with pytest.raises(InvalidArgument):
            entropy_from_spectrum(np.array([1.5]))

    def test_mode_entropy_scalar(self):
        assert mode_entropy(1.0) == 0.0
        assert abs(mode_entropy(0.0) - math.log(2.0)) <= 1e-15


@given(st.integers(min_value=2, max_value=6), st.integers(min_value=0, max_value=10_000))
@settings(max_examples=30, deadline=None)
def test_entropy_bounds_property(N, seed):
    gen = RngStream(seed, 99).generator()
    n_a = 1 + seed % N
    s = gaussian_entropies(N, n_a, 4, gen)
    assert np.all(s >= -1e-12)
    assert np.all(s <= n_a * math.log(2.0) + 1e-9)


def test_restricted_singular_values_pair():
    split = SystemSplit(6, 3)
    for seed in range(20):
        j = sample_gaussian_state(6, RngStream(seed, 3))
        idx = np.concatenate([np.arange(3), 6 + np.arange(3)])
        block = j[np.ix_(idx, idx)]
        sv = np.linalg.svd(block, compute_uv=False)
        assert np.max(np.abs(sv[0::2] - sv[1::2])) <= 1e-8
        # and the pooled pairs agree with restrict()
        assert np.allclose(restrict(j, split), 0.5 * (sv[0::2] + sv[1::2]), atol=1e-9)
