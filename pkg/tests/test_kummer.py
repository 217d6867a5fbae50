"""Torsion-decorated sectors over the exterior surface algebra."""

import random
from fractions import Fraction
from math import gcd, lcm

import pytest

from orbisym import (
    KummerClass,
    OrbifoldClass,
    division_count,
    kummer_act,
    kummer_multiply,
    kummer_poincare,
    kummer_poincare_reduced,
    kummer_symmetrize,
    m_of,
    multiply,
    symmetric_group,
)
from orbisym.frobenius import TensorClass, pushforward, tensor_unit
from orbisym.kummer import surface_algebra
from orbisym.orbifold import sector_partition
from orbisym.permgroup import OrbitPartition, Permutation


def perm(text, n):
    return Permutation.parse(text, n)


def test_m_of_is_gcd_of_orbit_sizes():
    assert m_of(Permutation.identity(3)) == 1
    assert m_of(perm("(1 2)", 2)) == 2
    # the fixed point 3 forces the gcd down to 1
    assert m_of(perm("(1 2)", 3)) == 1
    assert m_of(perm("(1 2)(3 4)", 4)) == 2
    assert m_of(perm("(1 2 3 4)", 4)) == 4
    assert m_of([perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)]) == 4


def test_division_count_identity_sector():
    e = Permutation.identity(2)
    assert division_count(e, e, (0,), (0,), (0,)) == 1


def test_division_count_transposition_pair_is_diagonal():
    t = perm("(1 2)", 2)
    for x in range(2):
        for y in range(2):
            want = 1 if x == y else 0
            assert division_count(t, t, (x,), (y,), (0,)) == want


def test_division_count_klein_pair():
    g = perm("(1 2)(3 4)", 4)
    h = perm("(1 3)(2 4)", 4)
    for x in range(2):
        for y in range(2):
            for z in range(2):
                want = 2 if x == y == z else 0
                assert division_count(g, h, (x,), (y,), (z,)) == want


def test_division_count_symmetry_and_marginals():
    for n in (2, 3, 4):
        group = symmetric_group(n)
        for g in group.elements:
            for h in group.elements:
                mg, mh, mk = m_of(g), m_of(h), m_of(g * h)
                big = m_of([g, h])
                for x in range(mg):
                    for y in range(mh):
                        total = 0
                        for z in range(mk):
                            c = division_count(g, h, (x,), (y,), (z,))
                            assert c == division_count(h, g, (y,), (x,), (z,))
                            total += c
                        d = gcd(mg, mh)
                        want = big // lcm(mg, mh) if x % d == y % d else 0
                        assert total == want, (g, h, x, y)


def test_division_count_input_validation():
    t = perm("(1 2)", 2)
    with pytest.raises(ValueError):
        division_count(t, t, (0,), (0, 1), (0,))
    with pytest.raises(ValueError):
        division_count(t, t, (2,), (0,), (0,))


def test_class_rejects_bad_components():
    s2 = symmetric_group(2)
    t = perm("(1 2)", 2)
    with pytest.raises(ValueError):
        KummerClass.pure(s2, 4, t, (0, 0, 0), (0,))
    with pytest.raises(ValueError):
        KummerClass.pure(s2, 4, t, (0, 0, 0, 2), (0,))
    wrong = TensorClass.pure(sector_partition(Permutation.identity(2)), (0, 0))
    with pytest.raises(ValueError):
        KummerClass(s2, 4, {(t, (0, 0, 0, 0)): wrong})
    with pytest.raises(ValueError):
        KummerClass.pure(s2, 4, perm("(1 2 3)", 3), (0, 0, 0, 0), (0,))


def test_exceptional_square_is_diagonal_pushforward():
    algebra = surface_algebra()
    s2 = symmetric_group(2)
    t = perm("(1 2)", 2)
    ex = KummerClass.pure(s2, 4, t, (0, 0, 0, 0), (0,))
    ey = KummerClass.pure(s2, 4, t, (1, 0, 0, 0), (0,))
    diag = pushforward(
        algebra,
        tensor_unit(algebra, OrbitPartition([(1, 2)])),
        OrbitPartition([(1,), (2,)]),
    )
    e = Permutation.identity(2)
    want = KummerClass(s2, 4, {(e, (0, 0, 0, 0)): diag.scale(Fraction(1, 16))})
    assert kummer_multiply(ex, ex) == want
    assert kummer_multiply(ex, ex).doubled_degrees() == {8}
    assert kummer_multiply(ex, ey).is_zero()


def test_long_cycle_square_dies_on_the_obstruction():
    # the pair ((1 2 3), (1 2 3)) has defect one and the surface algebra
    # has vanishing Euler class, so the product must be zero
    s3 = symmetric_group(3)
    c = perm("(1 2 3)", 3)
    ec = KummerClass.pure(s3, 4, c, (0, 0, 0, 0), (0,))
    assert kummer_multiply(ec, ec).is_zero()


def _random_class(group, rank, rng, terms=3):
    algebra = surface_algebra()
    out = KummerClass.zero(group, rank)
    for _ in range(terms):
        g = group.elements[rng.randrange(len(group.elements))]
        point = tuple(rng.randrange(m_of(g)) for _ in range(rank))
        part = sector_partition(g)
        indices = tuple(rng.randrange(algebra.dim) for _ in part.blocks)
        out = out + KummerClass.pure(group, rank, g, point, indices, rng.randrange(1, 5))
    return out


def test_rank_zero_collapses_onto_the_orbifold_ring():
    algebra = surface_algebra()
    s3 = symmetric_group(3)
    rng = random.Random(3)

    def to_orbifold(k):
        return OrbifoldClass(
            k.group, algebra, {g: t for (g, _), t in k.components.items()}
        )

    for _ in range(10):
        a = _random_class(s3, 0, rng)
        b = _random_class(s3, 0, rng)
        assert to_orbifold(kummer_multiply(a, b)) == multiply(
            to_orbifold(a), to_orbifold(b)
        )


def test_action_is_multiplicative_and_symmetrize_projects():
    s3 = symmetric_group(3)
    rng = random.Random(4)
    for _ in range(5):
        a = _random_class(s3, 2, rng)
        b = _random_class(s3, 2, rng)
        for v in s3.elements:
            assert kummer_act(v, kummer_multiply(a, b)) == kummer_multiply(
                kummer_act(v, a), kummer_act(v, b)
            )
        sym = kummer_symmetrize(a)
        assert kummer_symmetrize(sym) == sym
        assert all(kummer_act(v, sym) == sym for v in s3.elements)


def test_sampled_associativity_with_torsion():
    s3 = symmetric_group(3)
    rng = random.Random(5)
    for _ in range(15):
        a = _random_class(s3, 1, rng, terms=2)
        b = _random_class(s3, 1, rng, terms=2)
        c = _random_class(s3, 1, rng, terms=2)
        assert kummer_multiply(kummer_multiply(a, b), c) == kummer_multiply(
            a, kummer_multiply(b, c)
        )


def test_poincare_frozen_values():
    assert kummer_poincare(1).coeffs == {0: 1, 2: 4, 4: 6, 6: 4, 8: 1}
    two = kummer_poincare(2)
    assert two.total() == 384
    assert two.coeffs == {
        0: 1, 2: 4, 4: 28, 6: 92, 8: 134, 10: 92, 12: 28, 14: 4, 16: 1,
    }
    assert kummer_poincare_reduced(2).coeffs == {0: 1, 4: 22, 8: 1}
    assert kummer_poincare_reduced(1).coeffs == {0: 1}


def test_json_round_trip():
    s3 = symmetric_group(3)
    rng = random.Random(6)
    a = _random_class(s3, 2, rng)
    data = a.to_json_list()
    assert KummerClass.from_json_list(s3, 2, data) == a
    data[0]["torsion"]["modulus"] = 7
    with pytest.raises(ValueError):
        KummerClass.from_json_list(s3, 2, data)
