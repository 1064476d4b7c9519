import math

import numpy as np
import pytest

from necklace_walks import (
    AmbiguousDegeneracyWarning,
    InvalidParameterError,
    NecklaceSpec,
    assemble_hamiltonian,
    cycle_limiting,
    default_degeneracy_tolerance,
    degeneracy_partition,
    evolve_matrix_exponential,
    full_spectrum,
    limiting_distribution,
    make_comb_pearl,
    make_cycle_pearl,
    mixing_time,
    probability_at_time,
    quadrature_time_average,
    time_averaged,
    tv_convergence_bound,
    tv_distance,
    vertex_state,
)


def cycle_setup(K):
    neck = NecklaceSpec(make_cycle_pearl(), K)
    return neck, full_spectrum(neck), vertex_state(neck, 1, 1)


class TestDegeneracyPartition:
    def test_groups_by_threshold(self):
        part = degeneracy_partition(np.array([0.0, 1e-12, 1.0, 1.0 + 5e-9, 3.0]), 1e-8)
        sizes = sorted(len(g) for g in part.groups)
        assert sizes == [1, 2, 2]

    def test_warns_when_gap_near_threshold(self):
        with pytest.warns(AmbiguousDegeneracyWarning):
            part = degeneracy_partition(np.array([0.0, 5e-8, 1.0]), 1e-8)
        assert part.ambiguous

    def test_default_tolerance_scale(self):
        assert default_degeneracy_tolerance(np.array([-2.0, 1.0])) == pytest.approx(2e-8)


class TestProbabilityAtTime:
    def test_delta_at_zero_time(self):
        neck, spec, phi = cycle_setup(5)
        p = probability_at_time(spec, phi, 0.0)
        expected = np.zeros(5)
        expected[0] = 1.0
        assert np.abs(p - expected).max() < 1e-12

    def test_eigenvector_is_stationary(self):
        _, spec, _ = cycle_setup(6)
        psi = spec.vectors[:, 2]
        for t in (0.0, 1.3, 20.0):
            p = probability_at_time(spec, psi, t)
            assert np.abs(p - np.abs(psi) ** 2).max() < 1e-12

    def test_matches_matrix_exponential(self):
        neck, spec, phi = cycle_setup(4)
        h = assemble_hamiltonian(neck)
        p_fast = probability_at_time(spec, phi, math.pi / 2)
        p_ref = evolve_matrix_exponential(h, phi, math.pi / 2)
        assert np.abs(p_fast - p_ref).max() < 1e-9

    def test_unit_sum_at_random_times(self, rng):
        neck, spec, phi = cycle_setup(7)
        for t in rng.uniform(0, 50, size=25):
            assert abs(probability_at_time(spec, phi, t).sum() - 1.0) < 1e-10

    def test_rejects_negative_time(self):
        _, spec, phi = cycle_setup(4)
        with pytest.raises(InvalidParameterError):
            probability_at_time(spec, phi, -1.0)

    def test_reflection_symmetry_through_start(self):
        # reflection j -> 2 - j (mod K) fixes the start vertex and is a
        # graph automorphism for the cycle and the d=1 comb
        for pearl in (make_cycle_pearl(), make_comb_pearl(1)):
            neck = NecklaceSpec(pearl, 9)
            spec = full_spectrum(neck)
            phi = vertex_state(neck, 1, 1)
            p = probability_at_time(spec, phi, 2.7)
            for j in range(1, 10):
                mirrored = (2 - j) % 9
                j_ref = mirrored if mirrored >= 1 else mirrored + 9
                for m in range(1, pearl.m + 1):
                    assert abs(
                        p[neck.flat_index(j, m)] - p[neck.flat_index(j_ref, m)]
                    ) < 1e-10


class TestTimeAveraged:
    def test_eigenvector_start_time_independent(self):
        _, spec, _ = cycle_setup(6)
        psi = spec.vectors[:, 1]
        p_inst = probability_at_time(spec, psi, 0.0)
        for T in (0.5, 10.0):
            assert np.abs(time_averaged(spec, psi, T) - p_inst).max() < 1e-12

    def test_long_window_approaches_limit(self):
        _, spec, phi = cycle_setup(8)
        pbar = time_averaged(spec, phi, 1e8)
        pi = limiting_distribution(spec, phi)
        assert np.abs(pbar - pi).max() < 1e-5

    def test_matches_quadrature_oracle(self):
        neck, spec, phi = cycle_setup(6)
        h = assemble_hamiltonian(neck)
        pbar = time_averaged(spec, phi, 10.0)
        # trapezoid with 1e4 steps: discretization error O((T/steps)^2) ~ 1e-6
        quad = quadrature_time_average(h, phi, 10.0, 10_000)
        assert np.abs(pbar - quad).max() < 1e-6

    def test_rejects_nonpositive_window(self):
        _, spec, phi = cycle_setup(4)
        with pytest.raises(InvalidParameterError):
            time_averaged(spec, phi, 0.0)


class TestLimitingDistribution:
    def test_even_cycle_closed_form(self):
        _, spec, phi = cycle_setup(8)
        pi = limiting_distribution(spec, phi)
        expected = np.array([cycle_limiting(8, x, 1) for x in range(1, 9)])
        assert np.abs(pi - expected).max() < 1e-12
        assert pi[0] == pytest.approx(0.21875, abs=1e-12)
        assert pi[4] == pytest.approx(0.21875, abs=1e-12)
        assert pi[1] == pytest.approx(0.09375, abs=1e-12)

    def test_odd_cycle_closed_form(self):
        _, spec, phi = cycle_setup(9)
        pi = limiting_distribution(spec, phi)
        expected = np.array([cycle_limiting(9, x, 1) for x in range(1, 10)])
        assert np.abs(pi - expected).max() < 1e-12
        assert pi[0] == pytest.approx(2 / 9 - 1 / 81, abs=1e-12)

    def test_invariant_under_degenerate_basis_change(self, rng):
        neck = NecklaceSpec(make_comb_pearl(1), 8)
        spec = full_spectrum(neck)
        phi = vertex_state(neck, 2, 1)
        pi = limiting_distribution(spec, phi)

        vectors = spec.vectors.copy()
        part = degeneracy_partition(
            spec.eigenvalues, default_degeneracy_tolerance(spec.eigenvalues)
        )
        for group in part.groups:
            if len(group) < 2:
                continue
            raw = rng.normal(size=(len(group), len(group))) + 1j * rng.normal(
                size=(len(group), len(group))
            )
            q, _ = np.linalg.qr(raw)
            vectors[:, group] = vectors[:, group] @ q
        scrambled = type(spec)(
            necklace=spec.necklace,
            eigenvalues=spec.eigenvalues,
            k_index=spec.k_index,
            n_index=spec.n_index,
            vectors=vectors,
        )
        assert np.abs(limiting_distribution(scrambled, phi) - pi).max() < 1e-10


class TestTvDistance:
    def test_zero_on_equal(self):
        p = np.array([0.5, 0.5])
        assert tv_distance(p, p) == 0.0

    def test_disjoint_deltas(self):
        assert tv_distance(np.array([1.0, 0.0]), np.array([0.0, 1.0])) == 2.0

    def test_length_mismatch(self):
        with pytest.raises(InvalidParameterError):
            tv_distance(np.zeros(3), np.zeros(4))


class TestConvergenceBound:
    def test_dominates_exact_distance(self):
        _, spec, phi = cycle_setup(8)
        pi = limiting_distribution(spec, phi)
        for T in (10.0, 1000.0):
            tv = tv_distance(time_averaged(spec, phi, T), pi)
            assert tv_convergence_bound(spec, phi, T) >= tv

    def test_exact_inverse_t_scaling(self):
        _, spec, phi = cycle_setup(6)
        b1 = tv_convergence_bound(spec, phi, 50.0)
        b2 = tv_convergence_bound(spec, phi, 100.0)
        assert b2 == pytest.approx(b1 / 2.0, rel=1e-12)

    def test_eigenvector_start_single_overlap(self):
        _, spec, _ = cycle_setup(16)
        psi = spec.vectors[:, 0]
        gaps = np.abs(spec.eigenvalues - spec.eigenvalues[0])
        gap = gaps[gaps > 1e-8].min()
        T = 100.0
        bound = tv_convergence_bound(spec, psi, T)
        assert bound <= 2.0 * spec.size / (T * gap) + 1e-12

    def test_dominance_comb_k16(self):
        neck = NecklaceSpec(make_comb_pearl(1), 16)
        spec = full_spectrum(neck)
        phi = vertex_state(neck, 1, 1)
        pi = limiting_distribution(spec, phi)
        T = 1000.0
        tv = tv_distance(time_averaged(spec, phi, T), pi)
        assert tv_convergence_bound(spec, phi, T) >= tv


class TestMixingTime:
    def test_epsilon_two_is_first_grid_point(self):
        _, spec, phi = cycle_setup(5)
        result = mixing_time(spec, phi, 2.0, t_hi=100.0, t_lo=1.0)
        assert result.t_mix == 1.0

    def test_fine_grid_agreement(self):
        # coarse (1.05) and fine (1.005) grids must land within one coarse step
        _, spec, phi = cycle_setup(8)
        coarse = mixing_time(spec, phi, 0.1, t_hi=1e5, ratio=1.05)
        fine = mixing_time(spec, phi, 0.1, t_hi=1e5, ratio=1.005)
        assert coarse.found and fine.found
        assert abs(math.log(coarse.t_mix / fine.t_mix)) <= math.log(1.05) + 1e-9

    def test_not_found_reports_tv(self):
        _, spec, phi = cycle_setup(8)
        result = mixing_time(spec, phi, 1e-6, t_hi=10.0)
        assert not result.found
        assert result.t_mix is None
        assert result.tv_at_hi > 1e-6

    def test_rejects_bad_epsilon(self):
        _, spec, phi = cycle_setup(4)
        with pytest.raises(InvalidParameterError):
            mixing_time(spec, phi, 0.0, t_hi=10.0)
