import math
from collections import Counter

import numpy as np
import pytest

from alpha_perm.combinatorics import SetPartition, enumerate_set_partitions
from alpha_perm.exact import per_alpha_def
from alpha_perm.exact.generators import make_rng
from alpha_perm.sampler import (
    default_proposal,
    is_estimate_partitions,
    is_estimate_permutations_uniform,
    partition_weights,
    pe_prob,
    pe_sample
)
from alpha_perm.schemas import EstimateReport, PitmanEwensParams
from alpha_perm.utils.error_handling import InadmissibleParamsError, UnsupportedInputError, ValidationError


def test_params_regions():
    """Test admissible and inadmissible Pitman-Ewens parameters"""
    assert PitmanEwensParams.ewens().admissible
    assert PitmanEwensParams(a=0.3, theta=-0.2).admissible
    assert PitmanEwensParams.restricted(3).max_blocks == 3
    assert PitmanEwensParams(a=-0.5, theta=1.5).max_blocks == 3
    assert PitmanEwensParams(a=0.5, theta=1.0).max_blocks is None

    for a, theta in ((-1.0, 2.5), (0.5, -0.6), (1.2, 1.0), (-1.0, -1.0)):
        params = PitmanEwensParams(a=a, theta=theta)
        assert not params.admissible
        with pytest.raises(InadmissibleParamsError):
            params.ensure_admissible()


def test_default_proposal():
    """Test the proposal chosen for each target alpha"""
    assert default_proposal(-3.0) == PitmanEwensParams(a=-1.0, theta=3.0)
    assert default_proposal(-2.5) == PitmanEwensParams(a=0.0, theta=1.0)
    assert default_proposal(1.0) == PitmanEwensParams(a=0.0, theta=1.0)


@pytest.mark.parametrize('params', [
    PitmanEwensParams.ewens(1.0),
    PitmanEwensParams.ewens(2.5),
    PitmanEwensParams(a=0.3, theta=0.5),
    PitmanEwensParams.restricted(2),
    PitmanEwensParams(a=-0.5, theta=1.5),
])
def test_pe_prob_sums_to_one(params):
    """Test that the Pitman-Ewens probabilities form a distribution"""
    for n in range(1, 7):
        total = sum(pe_prob(pi, params) for pi in enumerate_set_partitions(n))
        assert total == pytest.approx(1.0, rel=1e-12)


def test_pe_prob_known_values():
    """Test Ewens(1) probabilities and the restricted support"""
    ewens = PitmanEwensParams.ewens(1.0)
    # Bajo Ewens(1) la partición en bloques de tamaños s_b tiene probabilidad prod (s_b - 1)! / n!
    assert pe_prob(SetPartition.single_block(4), ewens) == pytest.approx(6 / 24)
    assert pe_prob(SetPartition.singletons(4), ewens) == pytest.approx(1 / 24)
    assert pe_prob(SetPartition.singletons(3), PitmanEwensParams.restricted(2)) == 0


def test_pe_small_cases():
    """Test two- and three-element probabilities and the one-element sample"""
    params = PitmanEwensParams(a=0.4, theta=1.5)
    assert pe_prob(SetPartition.single_block(2), params) == pytest.approx((1 - 0.4) / (1 + 1.5))
    assert pe_prob(SetPartition.single_block(3), PitmanEwensParams.ewens(1.0)) == pytest.approx(1 / 3)
    assert pe_sample(1, params, make_rng(0)) == SetPartition.single_block(1)

    rng = make_rng(21)
    draws = [pe_sample(2, PitmanEwensParams.ewens(1.0), rng).size for _ in range(10000)]
    assert draws.count(1) / len(draws) == pytest.approx(0.5, abs=0.03)


def test_pe_sample_frequencies():
    """Test empirical frequencies of sampled partitions against pe_prob"""
    params = PitmanEwensParams(a=0.3, theta=0.5)
    rng = make_rng(99)
    draws = 20000
    counts = Counter(pe_sample(4, params, rng) for _ in range(draws))
    for pi in enumerate_set_partitions(4):
        assert counts[pi] / draws == pytest.approx(pe_prob(pi, params), abs=0.02)


def test_pe_sample_restricted_support():
    """Test that restricted proposals never exceed their block count"""
    rng = make_rng(5)
    params = PitmanEwensParams.restricted(2)
    sizes = {pe_sample(6, params, rng).size for _ in range(2000)}
    assert sizes == {1, 2}

    params = PitmanEwensParams(a=-2.0, theta=4.0)
    assert params.max_blocks == 2
    assert max(pe_sample(5, params, rng).size for _ in range(10000)) == 2


def test_pe_sample_errors(rng):
    """Test validation in the sampler"""
    with pytest.raises(ValidationError):
        pe_sample(0, PitmanEwensParams.ewens(), rng)
    with pytest.raises(InadmissibleParamsError):
        pe_sample(3, PitmanEwensParams(a=-1.0, theta=1.5), rng)


def test_partition_estimate_covers_exact(psd_matrix):
    """Test that the partition estimator lands within a few standard errors of the exact value"""
    m = psd_matrix(4)
    for alpha in (-2.0, -2.5, 1.0):
        exact = per_alpha_def(m, alpha).real
        report = is_estimate_partitions(m, alpha, n_samples=20000, seed=11)
        assert report.proposal == 'pitman-ewens'
        assert report.params == default_proposal(alpha)
        assert abs(report.estimate - exact) <= 6 * report.stderr + 1e-9 * abs(exact)


def test_partition_estimate_is_deterministic(psd_matrix):
    """Test that the seed fixes the estimate"""
    m = psd_matrix(4)
    first = is_estimate_partitions(m, -2.0, n_samples=500, seed=3)
    second = is_estimate_partitions(m, -2.0, n_samples=500, seed=3)
    other = is_estimate_partitions(m, -2.0, n_samples=500, seed=4)
    assert first == second
    assert first.estimate != other.estimate
    assert first.relative_stderr == pytest.approx(first.stderr / abs(first.estimate))
    assert first.n_samples == 500 and first.seed == 3


def test_partition_weights_nonnegative_for_psd(psd_matrix):
    """Test that restricted weights of a PSD matrix are nonnegative"""
    m = psd_matrix(5)
    for k in (1, 2, 3):
        weights = partition_weights(m, -float(k), PitmanEwensParams.restricted(k), 10000, 8)
        assert weights.shape == (10000,)
        assert np.all(weights >= -1e-10 * np.abs(weights).max())


def test_estimator_validation(complex_matrix):
    """Test rejection of complex matrices and too few samples"""
    with pytest.raises(UnsupportedInputError):
        is_estimate_partitions(complex_matrix(3), 1.0, n_samples=10)
    with pytest.raises(ValidationError):
        is_estimate_partitions(np.eye(3), 1.0, n_samples=1)
    with pytest.raises(InadmissibleParamsError):
        is_estimate_partitions(np.eye(3), 1.0, params=PitmanEwensParams(a=0.5, theta=-1.0), n_samples=10)


def test_uniform_baseline():
    """Test the uniform permutation baseline on all-ones matrices"""
    report = is_estimate_permutations_uniform(np.ones((4, 4)), 1.0, n_samples=100, seed=1)
    assert report.estimate == pytest.approx(24)
    assert report.stderr == pytest.approx(0, abs=1e-12)
    assert report.proposal == 'uniform-permutations'
    assert report.params is None

    report = is_estimate_permutations_uniform(np.ones((4, 4)), 2.0, n_samples=20000, seed=1)
    exact = math.prod(range(2, 6))
    assert abs(report.estimate - exact) <= 6 * report.stderr


def test_estimate_report_relative_stderr():
    """Test the relative standard error of a zero estimate"""
    report = EstimateReport(estimate=0.0, stderr=1.0, n_samples=10, seed=0, target_alpha=1.0, proposal='x')
    assert report.relative_stderr == float('inf')


@pytest.mark.slow
def test_partition_estimator_unbiased(psd_matrix):
    """Test the grand mean of independent runs against the exact value"""
    m = psd_matrix(6)
    exact = per_alpha_def(m, -2.0).real
    estimates = np.array([
        is_estimate_partitions(m, -2.0, n_samples=1000, seed=seed).estimate for seed in range(200)
    ])
    grand_stderr = estimates.std(ddof=1) / np.sqrt(len(estimates))
    assert abs(estimates.mean() - exact) <= 4 * grand_stderr


@pytest.mark.slow
def test_x1_estimates(x1):
    """Test X1 estimates and the stability gap between restricted and Ewens proposals"""
    exact = per_alpha_def(x1, -2.0).real
    restricted = is_estimate_partitions(x1.real, -2.0, n_samples=100000, seed=20130501)
    assert abs(restricted.estimate - exact) <= 3 * restricted.stderr
    assert restricted.relative_stderr < 0.1

    again = is_estimate_partitions(x1.real, -2.0, n_samples=100000, seed=20130501)
    assert again == restricted

    restricted_3 = is_estimate_partitions(x1.real, -3.0, n_samples=100000, seed=20130501)
    ewens_1 = is_estimate_partitions(x1.real, 1.0, n_samples=100000, seed=20130501)
    ewens_25 = is_estimate_partitions(x1.real, -2.5, n_samples=100000, seed=20130501)
    stable = max(restricted.relative_stderr, restricted_3.relative_stderr)
    unstable = min(ewens_1.relative_stderr, ewens_25.relative_stderr)
    assert unstable >= 10 * stable


@pytest.mark.slow
def test_x1_uniform_baseline(x1):
    """Test that the uniform baseline is unbiased on X1"""
    exact = per_alpha_def(x1, 1.0).real
    report = is_estimate_permutations_uniform(x1.real, 1.0, n_samples=100000, seed=3)
    assert abs(report.estimate - exact) <= 5 * report.stderr
