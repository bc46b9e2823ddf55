import numpy as np
import pydantic
import pytest

from alpha_perm.combinatorics import Permutation, SetPartition, rising_factorial
from alpha_perm.exact import partition_matrix, per_alpha_def, permutation_matrix
from alpha_perm.exact.generators import random_block_sizes, random_permutation, random_scalar, random_set_partition
from alpha_perm.schemas import BlockSpec, HomSymSpec
from alpha_perm.special import (
    materialize,
    per_alpha_block2,
    per_alpha_homsym,
    per_alpha_partition_matrix,
    per_alpha_permutation_matrix
)
from alpha_perm.utils.error_handling import SizeLimitError, UnsupportedInputError, ValidationError


def _random_block_spec(rng, n):
    n1, n2 = random_block_sizes(n, rng)
    return BlockSpec(
        a11=random_scalar(rng), a12=random_scalar(rng), a21=random_scalar(rng), a22=random_scalar(rng),
        n1=n1, n2=n2
    )


def test_permutation_matrix_closed_form(rng, rel):
    """Test per_alpha P_sigma = alpha^{#sigma}"""
    alpha = 1.3 - 0.4j
    assert per_alpha_permutation_matrix(Permutation.identity(4), alpha) == pytest.approx(alpha ** 4)
    assert per_alpha_permutation_matrix(Permutation((2, 3, 4, 1)), alpha) == pytest.approx(alpha)
    for trial in range(200):
        sigma = random_permutation(1 + trial % 7, rng)
        expected = per_alpha_def(permutation_matrix(sigma), alpha)
        assert rel(per_alpha_permutation_matrix(sigma, alpha), expected) < 1e-12


def test_partition_matrix_closed_form(rng, rel):
    """Test per_alpha of a partition matrix as a product of rising factorials"""
    alpha = -0.6 + 0.2j
    assert per_alpha_partition_matrix(SetPartition.singletons(5), alpha) == pytest.approx(alpha ** 5)
    assert per_alpha_partition_matrix(SetPartition.single_block(5), alpha) == pytest.approx(
        rising_factorial(alpha, 5)
    )
    for trial in range(200):
        pi = random_set_partition(1 + trial % 7, rng)
        expected = per_alpha_def(partition_matrix(pi), alpha)
        assert rel(per_alpha_partition_matrix(pi, alpha), expected) < 1e-10


def test_block2_small_cases():
    """Test the 2x2 and block-diagonal cases of the two-block formula"""
    alpha = 0.8
    spec = BlockSpec(a11=2, a12=3, a21=5, a22=7, n1=1, n2=1)
    assert per_alpha_block2(spec, alpha) == pytest.approx(alpha ** 2 * 14 + alpha * 15)

    diagonal = BlockSpec(a11=2, a12=0, a21=0, a22=3, n1=3, n2=2)
    expected = rising_factorial(alpha, 3) * rising_factorial(alpha, 2) * 2 ** 3 * 3 ** 2
    assert per_alpha_block2(diagonal, alpha) == pytest.approx(expected)


def test_block2_matches_definition(rng, rel):
    """Test the two-block formula against the definition engine"""
    for trial in range(200):
        spec = _random_block_spec(rng, 2 + trial % 6)
        alpha = (random_scalar(rng), 0.5, 3.0)[trial % 3]
        expected = per_alpha_def(materialize(spec), alpha)
        assert rel(per_alpha_block2(spec, alpha), expected) < 1e-9


def test_block2_swap_symmetry(rng, rel):
    """Test invariance under swapping the two blocks"""
    spec = _random_block_spec(rng, 6)
    swapped = BlockSpec(a11=spec.a22, a12=spec.a21, a21=spec.a12, a22=spec.a11, n1=spec.n2, n2=spec.n1)
    alpha = random_scalar(rng)
    assert rel(per_alpha_block2(spec, alpha), per_alpha_block2(swapped, alpha)) < 1e-10


def test_block2_rejects_zero_diagonal():
    """Test that a zero diagonal block is routed away from the closed form"""
    with pytest.raises(UnsupportedInputError):
        per_alpha_block2(BlockSpec(a11=0, a12=1, a21=1, a22=1, n1=2, n2=2), 1.0)


def test_homsym_small_cases():
    """Test H[a,b] on diagonal and 2x2 matrices"""
    alpha = 1.7
    assert per_alpha_homsym(HomSymSpec(a=2, b=0, n=4), alpha) == pytest.approx(alpha ** 4 * 16)
    assert per_alpha_homsym(HomSymSpec(a=2, b=3, n=2), alpha) == pytest.approx(alpha ** 2 * 4 + alpha * 9)
    for n in range(1, 9):
        assert per_alpha_homsym(HomSymSpec(a=1, b=1, n=n), alpha) == pytest.approx(rising_factorial(alpha, n))


def test_homsym_matches_definition(rng, rel):
    """Test H[a,b] against the definition engine"""
    for trial in range(200):
        spec = HomSymSpec(a=random_scalar(rng), b=random_scalar(rng), n=1 + trial % 7)
        alpha = random_scalar(rng)
        assert rel(per_alpha_homsym(spec, alpha), per_alpha_def(materialize(spec), alpha)) < 1e-9


def test_homsym_errors():
    """Test the zero diagonal and size guard of H[a,b]"""
    with pytest.raises(UnsupportedInputError):
        per_alpha_homsym(HomSymSpec(a=0, b=1, n=3), 1.0)
    with pytest.raises(SizeLimitError):
        per_alpha_homsym(HomSymSpec(a=1, b=1, n=11), 1.0)


def test_spec_validation():
    """Test validation of structured matrix specifications"""
    with pytest.raises(pydantic.ValidationError):
        BlockSpec(a11=1, a12=1, a21=1, a22=1, n1=0, n2=2)
    with pytest.raises(pydantic.ValidationError):
        HomSymSpec(a=1, b=1, n=0)
    with pytest.raises(ValidationError):
        HomSymSpec(a='uno', b=1, n=2)

    spec = HomSymSpec(a='1,2', b=0.5, n=3)
    assert spec.a == complex(1, 2)
    matrix = materialize(spec)
    assert matrix.shape == (3, 3)
    assert np.all(np.diag(matrix) == complex(1, 2))

    block = materialize(BlockSpec(a11=1, a12=2, a21=3, a22=4, n1=2, n2=1))
    np.testing.assert_array_equal(block.real, [[1, 1, 2], [1, 1, 2], [3, 3, 4]])

    with pytest.raises(TypeError):
        materialize(np.eye(2))
