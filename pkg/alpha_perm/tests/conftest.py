import pytest

from alpha_perm.cli.matrix_io import load_x1
from alpha_perm.exact.generators import make_rng, random_complex_matrix, random_psd_matrix


@pytest.fixture
def rng():
    """Reproducible Philox generator"""
    return make_rng(1234)


@pytest.fixture
def complex_matrix(rng):
    """Factory of random complex matrices"""
    def build(n):
        return random_complex_matrix(n, rng)
    return build


@pytest.fixture
def psd_matrix(rng):
    """Factory of random symmetric positive semi-definite matrices"""
    def build(n):
        return random_psd_matrix(n, rng)
    return build


@pytest.fixture(scope='session')
def x1():
    """Bundled 8x8 X1 matrix"""
    return load_x1()


def relative(value, reference):
    return abs(value - reference) / max(abs(reference), 1e-10)


@pytest.fixture
def rel():
    """Relative error helper"""
    return relative
