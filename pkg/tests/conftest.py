"""Shared builders for the test suite.

All randomness flows through seeded random.Random instances so every
run sees the same cases.
"""

import random
from fractions import Fraction

import pytest

from orbisym import OrbifoldClass, builtin_algebra, symmetric_group, symmetrize
from orbisym.orbifold import sector_partition


@pytest.fixture
def rng():
    return random.Random(0)


def random_pure(group, algebra, rng, coeff_range=(1, 6)):
    """A random single-sector class with one monomial term."""
    g = group.elements[rng.randrange(group.order)]
    part = sector_partition(g)
    key = tuple(rng.randrange(algebra.dim) for _ in range(len(part)))
    coeff = Fraction(rng.randrange(*coeff_range))
    return OrbifoldClass.pure(group, algebra, g, key, coeff)


def random_class(group, algebra, rng, terms=3):
    """A random sum of pure classes across sectors."""
    total = OrbifoldClass.zero(group, algebra)
    for _ in range(terms):
        total = total + random_pure(group, algebra, rng)
    return total


def random_invariant(group, algebra, rng, terms=2):
    total = OrbifoldClass.zero(group, algebra)
    for _ in range(terms):
        total = total + symmetrize(random_pure(group, algebra, rng))
    return total


@pytest.fixture(scope="session")
def s2():
    return symmetric_group(2)


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def s4():
    return symmetric_group(4)


@pytest.fixture(scope="session")
def mock2():
    return builtin_algebra("mock2")


@pytest.fixture(scope="session")
def k3():
    return builtin_algebra("k3")


@pytest.fixture(scope="session")
def abelian():
    return builtin_algebra("abelian")


@pytest.fixture(scope="session")
def trivial():
    return builtin_algebra("trivial")
