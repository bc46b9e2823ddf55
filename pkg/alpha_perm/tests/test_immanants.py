import math

import numpy as np
import pytest

from alpha_perm.combinatorics import (
    IntegerPartition,
    Permutation,
    SetPartition,
    enumerate_permutations,
    enumerate_set_partitions
)
from alpha_perm.exact import det, per_alpha_def, rhs_decomposition
from alpha_perm.exact.generators import random_scalar
from alpha_perm.immanants import (
    c_lambda,
    character,
    character_table,
    coefficient_system,
    immanant,
    mobius_identity_check,
    per_immanant_decomposition_rhs,
    per_via_immanants,
    solve_coefficients
)
from alpha_perm.utils.error_handling import DimensionMismatchError, SizeLimitError, ValidationError


def P(*parts):
    return IntegerPartition(parts)


def test_character_values():
    """Test trivial, sign and standard characters"""
    for nu in character_table(5).partitions:
        assert character(P(5), nu) == 1
        assert character(P(1, 1, 1, 1, 1), nu) == (-1) ** (5 - nu.length)

    assert character(P(2, 1), P(1, 1, 1)) == 2
    assert character(P(2, 1), P(2, 1)) == 0
    assert character(P(2, 1), P(3)) == -1
    assert character(P(2, 2), P(1, 1, 1, 1)) == 2

    with pytest.raises(DimensionMismatchError):
        character(P(2, 1), P(2, 2))


def test_character_table_orthogonality():
    """Test row orthogonality and nonsingularity of the character tables"""
    for n in range(1, 9):
        table = character_table(n)
        assert table.is_orthogonal()
        assert sum(table.class_sizes) == math.factorial(n)
        assert abs(np.linalg.det(table.as_array())) > 0.5


def test_immanant_extremes(complex_matrix, rel):
    """Test that the trivial and sign immanants are the permanent and determinant"""
    m = complex_matrix(5)
    assert rel(immanant(m, P(5)), per_alpha_def(m, 1)) < 1e-10
    assert rel(immanant(m, P(1, 1, 1, 1, 1)), det(m)) < 1e-9
    with pytest.raises(DimensionMismatchError):
        immanant(m, P(2, 2))


def test_immanant_brute_force(complex_matrix, rel):
    """Test Im_(2,2) against a direct character-weighted sum"""
    m = complex_matrix(4)
    expected = 0j
    for sigma in enumerate_permutations(4):
        product = np.prod([m[i - 1, sigma(i) - 1] for i in range(1, 5)])
        expected += character(P(2, 2), sigma.cycle_type()) * product
    assert rel(immanant(m, P(2, 2)), expected) < 1e-10


def test_c_lambda_values():
    """Test the coefficient function on its known values"""
    for n in range(1, 7):
        for shape in character_table(n).partitions:
            expected = 1 if shape == P(n) else 0
            assert c_lambda(1, shape) == pytest.approx(expected, abs=1e-12)
        sign_shape = P(*([1] * n))
        assert c_lambda(-1, sign_shape) == pytest.approx((-1) ** n, abs=1e-12)

    alpha = 0.7 + 0.3j
    assert c_lambda(alpha, P(2, 1)) == pytest.approx((alpha ** 3 - alpha) / 3)


def test_class_function_expansion(rng):
    """Test sum over shapes of c_lambda(alpha) chi_lambda(sigma) = alpha^{#sigma}"""
    for n in range(1, 7):
        table = character_table(n)
        for _ in range(3):
            alpha = random_scalar(rng)
            for nu in table.partitions:
                total = sum(c_lambda(alpha, shape) * table.value(shape, nu) for shape in table.partitions)
                assert total == pytest.approx(alpha ** nu.length, rel=1e-9, abs=1e-9)


def test_solve_coefficients(rng):
    """Test the cofactor solution against the direct coefficient formula"""
    solved = solve_coefficients(1, 2)
    assert solved.values == pytest.approx((1, 0))

    for n in range(1, 6):
        alpha = random_scalar(rng)
        solved = solve_coefficients(alpha, n)
        for shape, value in solved.as_dict().items():
            assert value == pytest.approx(c_lambda(alpha, shape), rel=1e-8, abs=1e-10)


def test_coefficient_system_adjugate():
    """Test Y X^T = det(X) I"""
    for n in range(2, 7):
        x, y, det_x = coefficient_system(n)
        np.testing.assert_allclose(y @ x.T, det_x * np.eye(x.shape[0]), atol=1e-6 * abs(det_x))
    with pytest.raises(SizeLimitError):
        coefficient_system(9)


def test_per_via_immanants(complex_matrix, rel):
    """Test the immanant expansion of the alpha-permanent"""
    m = complex_matrix(5)
    assert rel(per_via_immanants(m, 1), per_alpha_def(m, 1)) < 1e-9
    assert rel(per_via_immanants(m, 0.4), per_alpha_def(m, 0.4)) < 1e-8
    assert rel(per_via_immanants(-m, -1), det(m)) < 1e-8


def test_immanant_decomposition(complex_matrix, rel):
    """Test the double sum over shapes and partitions"""
    m = complex_matrix(4)
    assert rel(per_immanant_decomposition_rhs(m, 1, 2), per_alpha_def(m, 1)) < 1e-7
    assert rel(per_immanant_decomposition_rhs(m, -2, 1), per_alpha_def(m, -2)) < 1e-7
    assert rel(per_immanant_decomposition_rhs(m, 0.5, -1), rhs_decomposition(m, 1, 0.5)) < 1e-7
    with pytest.raises(ValidationError):
        per_immanant_decomposition_rhs(m, 1, 0)


def test_mobius_identity(complex_matrix, rng, rel):
    """Test both sides of the partition-lattice inversion for every partition"""
    for n in range(1, 5):
        m = complex_matrix(n)
        beta = random_scalar(rng)
        for pi in enumerate_set_partitions(n):
            lhs, rhs = mobius_identity_check(m, beta, pi)
            assert rel(lhs, rhs) < 1e-8

    m = complex_matrix(4)
    lhs, rhs = mobius_identity_check(m, 0.9, SetPartition(((1, 2), (3, 4))))
    assert rel(lhs, rhs) < 1e-8


def test_mobius_identity_on_ones(rel):
    """Test the all-ones case against block rising factorials"""
    beta = 1.4
    pi = SetPartition.single_block(3)
    lhs, rhs = mobius_identity_check(np.ones((3, 3)), beta, pi)
    # Dos 3-ciclos, cada uno con producto 1
    assert lhs == pytest.approx(2 * beta)
    assert rel(lhs, rhs) < 1e-10

    with pytest.raises(DimensionMismatchError):
        mobius_identity_check(np.ones((3, 3)), beta, SetPartition.singletons(2))


def test_permutation_cycle_type_consistency():
    """Test that cycle types index the character table"""
    table = character_table(4)
    sigma = Permutation.from_cycles(4, [(1, 2)])
    assert table.index(sigma.cycle_type()) == table.partitions.index(P(2, 1, 1))
