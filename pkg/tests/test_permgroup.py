"""Permutations, orbit partitions, group tables, and the defect invariant."""

import random

import pytest

from orbisym import (
    Permutation,
    age,
    close_subgroup,
    graph_defect,
    min_transpositions,
    orbit_partition,
    symmetric_group,
)
from orbisym.orbifold import pair_partition
from orbisym.permgroup import max_group_order


def test_parse_and_str_roundtrip():
    for text in ("()", "(1 2)", "(1 2 3)", "(1 2)(3 4)", "(1 3 5)(2 4)"):
        g = Permutation.parse(text, 5)
        assert Permutation.parse(str(g), 5) == g


def test_composition_applies_right_factor_first():
    g = Permutation.parse("(1 2)", 3)
    h = Permutation.parse("(2 3)", 3)
    assert (g * h)(3) == g(h(3)) == 1
    assert g * h == Permutation.parse("(1 2 3)", 3)


def test_inverse_and_conjugate():
    rng = random.Random(1)
    elements = symmetric_group(4).elements
    for _ in range(50):
        g = elements[rng.randrange(24)]
        v = elements[rng.randrange(24)]
        assert g * g.inverse() == Permutation.identity(4)
        assert g.conjugate(v) == v * g * v.inverse()


def test_cycles_cover_support():
    g = Permutation.parse("(1 4)(2 5 3)", 5)
    assert sorted(len(c) for c in g.cycles()) == [2, 3]
    assert Permutation.from_cycles(g.cycles(), 5) == g


def test_orbit_partition_blocks():
    g = Permutation.parse("(1 2)(3 4)", 5)
    part = orbit_partition([g])
    assert part.blocks == ((1, 2), (3, 4), (5,))
    assert part.block_of(4) == 1
    assert part.sizes() == (2, 2, 1)


def test_min_transpositions_and_age():
    id3 = Permutation.identity(3)
    t = Permutation.parse("(1 2)", 3)
    c = Permutation.parse("(1 2 3)", 3)
    assert min_transpositions(id3) == 0
    assert min_transpositions(t) == 1
    assert min_transpositions(c) == 2
    assert age(c, 2) == 2
    assert age(t, 2) == 1
    assert age(t, 0) == 0


def test_symmetric_group_tables():
    G = symmetric_group(4)
    assert G.order == 24
    assert G.elements[0].is_identity()
    assert len(G.conjugacy_classes) == 5
    sizes = sorted(len(c) for c in G.conjugacy_classes)
    assert sizes == [1, 3, 6, 6, 8]
    for members in G.conjugacy_classes:
        rep = G.elements[members[0]]
        for m in members:
            v = G.conj_witness[m]
            assert rep.conjugate(v) == G.elements[m]


def test_centralizer_orders_match_class_sizes():
    G = symmetric_group(4)
    for gi, g in enumerate(G.elements):
        cls = G.conjugacy_classes[G.class_of[gi]]
        cent = G.centralizer(g)
        assert len(cent) * len(cls) == G.order
        assert all(v * g == g * v for v in cent)


def test_close_subgroup_klein():
    gens = [Permutation.parse("(1 2)(3 4)", 4), Permutation.parse("(1 3)(2 4)", 4)]
    K = close_subgroup(gens)
    assert K.order == 4
    assert all(g * g == Permutation.identity(4) for g in K.elements)


def test_close_subgroup_order_cap(monkeypatch):
    gens = [Permutation.parse("(1 2)", 4), Permutation.parse("(1 2 3 4)", 4)]
    with pytest.raises(ValueError):
        close_subgroup(gens, max_order=10)
    monkeypatch.setenv("ORBISYM_MAX_GROUP", "10")
    assert max_group_order() == 10
    with pytest.raises(ValueError):
        close_subgroup(gens)


def test_graph_defect_vanishes_on_inverse_and_identity_pairs():
    g = Permutation.parse("(1 2 3)", 3)
    for h in (g.inverse(), Permutation.identity(3)):
        for block in pair_partition(g, h).blocks:
            assert graph_defect(g, h, block) == 0


def test_graph_defect_positive_example():
    # a 3-cycle against itself: one joint orbit, genus one half turn up
    g = Permutation.parse("(1 2 3)", 3)
    assert graph_defect(g, g, (1, 2, 3)) == 1


def test_graph_defect_rejects_non_orbits():
    g = Permutation.parse("(1 2)", 4)
    h = Permutation.parse("(3 4)", 4)
    with pytest.raises(ValueError):
        graph_defect(g, h, (1, 2, 3, 4))


def test_graph_defect_cyclic_and_conjugation_symmetry():
    """Sampled version of the exhaustive acceptance sweep."""
    G = symmetric_group(4)
    rng = random.Random(3)
    for _ in range(200):
        g = G.elements[rng.randrange(G.order)]
        h = G.elements[rng.randrange(G.order)]
        v = G.elements[rng.randrange(G.order)]
        k = (g * h).inverse()
        for block in pair_partition(g, h).blocks:
            value = graph_defect(g, h, block)
            assert graph_defect(h, k, block) == value
            image = tuple(sorted(v(i) for i in block))
            assert graph_defect(g.conjugate(v), h.conjugate(v), image) == value
