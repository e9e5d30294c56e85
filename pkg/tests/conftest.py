import itertools
import random

import pytest

from jordanderiv.algebra import make_example1_algebra, make_full, make_upper_triangular
from jordanderiv.fixtures import load_fixture
from jordanderiv.linmap import inner_map
from jordanderiv.ring import RingSpec

Z = RingSpec.integers()
Z2 = RingSpec.mod(2)
Z3 = RingSpec.mod(3)
Z6 = RingSpec.mod(6)
Z7 = RingSpec.mod(7)


def random_elem(alg, rng, lo=-5, hi=5):
    return alg.element([rng.randint(lo, hi) for _ in range(alg.dim)])


def random_inner(alg, rng):
    B = random_elem(alg, rng)
    return inner_map(alg, B), B


def brute_jordan(D):
    """D(a^2) = D(a)a + aD(a) for every element a of a finite algebra."""
    return all(D(a * a) == D(a) * a + a * D(a) for a in D.algebra.elements())


def brute_derivation(D):
    elems = list(D.algebra.elements())
    return all(D(a * b) == D(a) * b + a * D(b) for a, b in itertools.product(elems, repeat=2))


def brute_antiderivation(D):
    elems = list(D.algebra.elements())
    return all(D(a * b) == D(b) * a + b * D(a) for a, b in itertools.product(elems, repeat=2))


@pytest.fixture
def rng():
    return random.Random(20261015)


@pytest.fixture(scope="session")
def example1():
    return load_fixture("example1")


@pytest.fixture(scope="session")
def t2_example():
    return load_fixture("t2_witness")


@pytest.fixture(scope="session")
def m4_example():
    return load_fixture("m4_witness")


@pytest.fixture(scope="session")
def ex1_alg():
    return make_example1_algebra()


@pytest.fixture
def t2z():
    return make_upper_triangular(2, Z)


@pytest.fixture
def m2z():
    return make_full(2, Z)
