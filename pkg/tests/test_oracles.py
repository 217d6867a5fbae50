"""Cross-checks through independent routes: product formula, trace
averaging, and the comultiplication form of the transfer."""

import random
from fractions import Fraction

import pytest

from orbisym import (
    builtin_algebra,
    goettsche_series,
    invariant_dim_two_ways,
    invariant_dims,
    invariant_dims_by_trace,
    orbifold_poincare,
    pushforward_bruteforce,
    symmetric_group,
)
from orbisym.frobenius import FrobeniusAlgebra, TensorClass, pushforward
from orbisym.permgroup import OrbitPartition

K3_BETTI = [1, 0, 22, 0, 1]
ABELIAN_BETTI = [1, 4, 6, 4, 1]
MOCK2_BETTI = [1, 0, 0, 0, 1]


def test_goettsche_frozen_k3_values():
    series = goettsche_series(K3_BETTI, 3)
    assert series[0].coeffs == {0: 1}
    assert series[1].coeffs == {0: 1, 4: 22, 8: 1}
    assert series[2].coeffs == {0: 1, 4: 23, 8: 276, 12: 23, 16: 1}
    assert series[3].coeffs == {
        0: 1, 4: 23, 8: 299, 12: 2554, 16: 299, 20: 23, 24: 1,
    }
    assert series[3].total() == 3200


def test_goettsche_needs_five_betti_numbers():
    with pytest.raises(ValueError):
        goettsche_series([1, 0, 22], 2)
    with pytest.raises(ValueError):
        goettsche_series(K3_BETTI, 11)


def test_goettsche_matches_engine():
    cases = [("k3", K3_BETTI), ("abelian", ABELIAN_BETTI), ("mock2", MOCK2_BETTI)]
    for name, betti in cases:
        algebra = builtin_algebra(name)
        series = goettsche_series(betti, 3)
        for n in (1, 2, 3):
            engine = orbifold_poincare(symmetric_group(n), algebra)
            assert engine == series[n], (name, n)


def test_trace_route_agrees_with_orbit_counting():
    for name in ("mock2", "k3", "abelian", "trivial"):
        algebra = builtin_algebra(name)
        for n in (2, 3):
            group = symmetric_group(n)
            assert invariant_dims_by_trace(group, algebra) == invariant_dims(
                group, algebra
            ), (name, n)


def test_two_way_helper():
    assert invariant_dim_two_ways(symmetric_group(2), builtin_algebra("k3"), 8) == (
        276,
        276,
    )


PARTITION_PAIRS = [
    ([(1,), (2,)], [(1, 2)]),
    ([(1,), (2,), (3,)], [(1, 2, 3)]),
    ([(1,), (2,), (3,)], [(1, 3), (2,)]),
    ([(1, 2), (3,)], [(1, 2, 3)]),
    ([(1, 2, 3)], [(1, 2, 3)]),
]


def test_pushforward_bruteforce_matches_gram_route():
    rng = random.Random(21)
    for name in ("mock2", "k3", "abelian", "trivial"):
        algebra = builtin_algebra(name)
        for fine_blocks, coarse_blocks in PARTITION_PAIRS:
            fine = OrbitPartition(fine_blocks)
            coarse = OrbitPartition(coarse_blocks)
            for _ in range(6):
                terms = {
                    tuple(rng.randrange(algebra.dim) for _ in range(len(coarse))):
                        Fraction(rng.randrange(1, 7), rng.randrange(1, 4))
                    for _ in range(2)
                }
                y = TensorClass(coarse, terms)
                assert pushforward_bruteforce(algebra, y, fine) == pushforward(
                    algebra, y, fine
                ), (name, fine_blocks, coarse_blocks)


def test_bruteforce_rejects_degenerate_pairing():
    data = builtin_algebra("mock2").to_json_dict()
    data["integral"] = ["0/1", "0/1"]
    bad = FrobeniusAlgebra.from_json_dict(data)
    fine = OrbitPartition([(1,), (2,)])
    coarse = OrbitPartition([(1, 2)])
    y = TensorClass.pure(coarse, (0,))
    with pytest.raises(ValueError):
        pushforward_bruteforce(bad, y, fine)
