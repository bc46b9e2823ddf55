import itertools
import math

import numpy as np
import pytest

from alpha_perm.combinatorics import (
    Permutation,
    SetPartition,
    cycle_count,
    enumerate_permutations,
    enumerate_set_partitions,
    rising_factorial
)
from alpha_perm.exact import (
    compute_alpha_permanent,
    cycle_count_polynomial,
    det,
    mask,
    per_alpha_cofactor,
    per_alpha_def,
    per_alpha_masked,
    per_alpha_via_det,
    permutation_matrix
)
from alpha_perm.exact.generators import random_scalar, random_set_partition
from alpha_perm.exact.matrix import as_matrix
from alpha_perm.schemas import Method
from alpha_perm.utils.error_handling import DimensionMismatchError, SizeLimitError, ValidationError


def test_as_matrix_validation():
    """Test rejection of non-square, empty and non-finite matrices"""
    with pytest.raises(ValidationError):
        as_matrix(np.ones((2, 3)))
    with pytest.raises(ValidationError):
        as_matrix(np.zeros((0, 0)))
    with pytest.raises(ValidationError):
        as_matrix([[1.0, float('nan')], [0.0, 1.0]])
    assert as_matrix([[1, 2], [3, 4]]).dtype == np.complex128


def test_per_alpha_def_small_cases():
    """Test the definition engine on matrices with known alpha-permanents"""
    assert per_alpha_def(np.ones((3, 3)), 1) == pytest.approx(6)
    assert per_alpha_def(np.eye(3), 2.5) == pytest.approx(2.5 ** 3)
    assert per_alpha_def(np.eye(3), '0,1') == pytest.approx((1j) ** 3)
    assert per_alpha_def([[4.0]], 3) == pytest.approx(12)

    m = np.array([[1, 2], [3, 4]], dtype=complex)
    alpha = 0.3 - 0.2j
    assert per_alpha_def(m, alpha) == pytest.approx(alpha ** 2 * 4 + alpha * 6)


def test_cycle_count_polynomial_of_ones():
    """Test that the all-ones polynomial has unsigned Stirling coefficients"""
    coefficients = cycle_count_polynomial(np.ones((5, 5)))
    assert [round(c.real) for c in coefficients] == [0, 24, 50, 35, 10, 1]


def test_per_alpha_of_ones_is_rising_factorial():
    """Test per_alpha J_n = alpha^{↑n}"""
    for n in range(1, 9):
        for alpha in (1.0, -2.0, 0.37, 1.5 - 0.5j):
            value = per_alpha_def(np.ones((n, n)), alpha)
            assert value == pytest.approx(rising_factorial(complex(alpha), n), rel=1e-10, abs=1e-10)


def test_cofactor_matches_definition(complex_matrix, rng, rel):
    """Test that the cofactor engine agrees with the definition engine"""
    for n in range(1, 7):
        m = complex_matrix(n)
        alpha = random_scalar(rng)
        assert rel(per_alpha_cofactor(m, alpha), per_alpha_def(m, alpha)) < 1e-10

    m = np.array([[1, 2], [3, 4]], dtype=complex)
    assert per_alpha_cofactor(m, 2) == pytest.approx(4 * 4 + 2 * 6)
    assert per_alpha_cofactor([[5.0]], -1) == pytest.approx(-5)


def test_det_matches_signed_sum(complex_matrix, rel):
    """Test LU determinant against the signed permutation sum"""
    assert det(np.eye(4)) == pytest.approx(1)
    assert det(np.zeros((0, 0))) == 1
    assert abs(det([[1, 2, 3], [1, 2, 3], [0, 1, 5]])) < 1e-10

    m = complex_matrix(5)
    expected = 0j
    for images in itertools.permutations(range(5)):
        sigma = Permutation(tuple(i + 1 for i in images))
        expected += sigma.sign() * np.prod(m[np.arange(5), list(images)])
    assert rel(det(m), expected) < 1e-9


def test_mask_extremes(complex_matrix):
    """Test the block projection with one block and with singletons"""
    m = complex_matrix(4)
    np.testing.assert_allclose(mask(m, SetPartition.single_block(4)), m)
    np.testing.assert_allclose(mask(m, SetPartition.singletons(4)), np.diag(np.diag(m)))
    with pytest.raises(DimensionMismatchError):
        mask(m, SetPartition.singletons(3))


def test_per_alpha_masked(complex_matrix, rng, rel):
    """Test the block-product evaluation of per_alpha(M·π)"""
    m = complex_matrix(6)
    alpha = random_scalar(rng)
    assert rel(per_alpha_masked(m, SetPartition.singletons(6), alpha),
               alpha ** 6 * np.prod(np.diag(m))) < 1e-10
    assert rel(per_alpha_masked(m, SetPartition.single_block(6), alpha), per_alpha_def(m, alpha)) < 1e-10
    for _ in range(5):
        pi = random_set_partition(6, rng)
        assert rel(per_alpha_masked(m, pi, alpha), per_alpha_def(mask(m, pi), alpha)) < 1e-10


def test_per_alpha_via_det_engine_agreement(complex_matrix, rng, rel):
    """Test the determinant route against the definition engine"""
    for n in range(1, 7):
        m = complex_matrix(n)
        for beta in (-1, -2, -3, 0.7, random_scalar(rng)):
            assert rel(per_alpha_via_det(m, beta), per_alpha_def(m, beta)) < 1e-8


def test_per_alpha_via_det_degenerate_cases(complex_matrix, rel):
    """Test beta = -1 collapsing to the determinant"""
    m = complex_matrix(5)
    assert rel(per_alpha_via_det(m, -1), (-1) ** 5 * det(m)) < 1e-10
    assert rel(per_alpha_via_det(m, -1), per_alpha_def(m, -1)) < 1e-10


def test_conjugation_invariance(complex_matrix, rng, rel):
    """Test per_alpha(P^T M P) = per_alpha(M)"""
    m = complex_matrix(5)
    alpha = random_scalar(rng)
    reference = per_alpha_def(m, alpha)
    for _ in range(5):
        p = permutation_matrix(Permutation(tuple(int(x) + 1 for x in rng.permutation(5))))
        assert rel(per_alpha_def(p.T @ m @ p, alpha), reference) < 1e-10


def test_psd_block_determinants_nonnegative(psd_matrix):
    """Test that every block projection of a PSD matrix has a nonnegative determinant"""
    m = psd_matrix(5)
    for pi in enumerate_set_partitions(5):
        assert det(mask(m, pi)).real >= -1e-10


def test_compute_alpha_permanent_engines(complex_matrix, rel):
    """Test the result object for each engine"""
    m = complex_matrix(4)
    reference = per_alpha_def(m, -2)
    for engine in ('definition', 'cofactor', 'det_decomposition'):
        result = compute_alpha_permanent(m, '-2', engine)
        assert result.method is Method(engine)
        assert rel(result.value, reference) < 1e-8

    assert compute_alpha_permanent(m, 1).terms_evaluated == math.factorial(4)
    # Con beta = -2 solo cuentan las particiones con a lo sumo 2 bloques: B(4, <=2) = 8
    assert compute_alpha_permanent(m, -2, 'det_decomposition').terms_evaluated == 8
    assert compute_alpha_permanent(m, 0.5, 'det_decomposition').terms_evaluated == 15

    with pytest.raises(ValidationError):
        compute_alpha_permanent(m, 1, 'ryser')


@pytest.mark.parametrize('alpha', [-2.0, -3.0, -2.5, 1.0])
def test_engines_agree_on_x1(x1, alpha, rel):
    """Test that the three exact engines agree pairwise on X1"""
    values = [
        per_alpha_def(x1, alpha),
        per_alpha_cofactor(x1, alpha),
        per_alpha_via_det(x1, alpha),
    ]
    for left, right in itertools.combinations(values, 2):
        assert rel(left, right) < 1e-8


def test_definition_matches_exact_sum_on_x1(x1, rel):
    """Test per_{-2}(X1) against a correctly rounded sum over S_8"""
    m = x1.real
    terms = [
        (-2.0) ** cycle_count(sigma) * math.prod(m[i - 1, sigma(i) - 1] for i in range(1, 9))
        for sigma in enumerate_permutations(8)
    ]
    assert rel(per_alpha_def(x1, -2), math.fsum(terms)) < 1e-10


def test_size_guards():
    """Test that enumeration guards raise instead of running"""
    with pytest.raises(SizeLimitError):
        per_alpha_def(np.eye(13), 1)
    with pytest.raises(SizeLimitError):
        per_alpha_via_det(np.eye(11), 0.5)
