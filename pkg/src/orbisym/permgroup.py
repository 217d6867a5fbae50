"""Permutations of {1..n}, orbit partitions, and explicit subgroup tables.

Everything here is desk scale: degrees up to 12 and group orders up to a
configurable bound (50 000 by default), so plain enumeration and union-find
beat clever group theory.  Values are immutable after construction and safe
to share between threads.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction

MAX_DEGREE = 12
DEFAULT_MAX_GROUP = 50_000


def max_group_order() -> int:
    """Closure bound for generated subgroups; ORBISYM_MAX_GROUP overrides."""
    return int(os.environ.get("ORBISYM_MAX_GROUP", DEFAULT_MAX_GROUP))


class Permutation:
    """Bijection of {1..n}; ``images[i-1]`` is the image of ``i``."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        n = len(images)
        if not 1 <= n <= MAX_DEGREE:
            raise ValueError(f"degree must be between 1 and {MAX_DEGREE}")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError("images are not a bijection of {1..n}")
        self.images = images

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Permutation":
        images = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            cycle = [int(i) for i in cycle]
            for i in cycle:
                if not 1 <= i <= n:
                    raise ValueError(f"point {i} outside 1..{n}")
                if i in seen:
                    raise ValueError(f"point {i} repeated in cycle notation")
                seen.add(i)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int) -> "Permutation":
        """Inverse of str(); accepts one-based cycle text such as "(1 2)(3 4)"."""
        text = text.strip()
        if text == "()":
            return cls.identity(n)
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError(f"malformed cycle text: {text!r}")
        cycles = []
        for chunk in text[1:-1].split(")("):
            parts = chunk.replace(",", " ").split()
            if len(parts) < 2:
                raise ValueError(f"malformed cycle text: {text!r}")
            cycles.append([int(p) for p in parts])
        return cls.from_cycles(cycles, n)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (g*h)(i) = g(h(i)): apply h first.
        if self.n != other.n:
            raise ValueError("degree mismatch")
        images = self.images
        return Permutation(images[j - 1] for j in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def conjugate(self, v: "Permutation") -> "Permutation":
        """v g v^{-1}."""
        return v * self * v.inverse()

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self):
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                seen.add(start)
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cycle))
        return tuple(out)

    def orbit_ids(self):
        """For each point 1..n the least point of its <g>-orbit."""
        ids = [0] * self.n
        for start in range(1, self.n + 1):
            if ids[start - 1]:
                continue
            j = start
            while ids[j - 1] == 0:
                ids[j - 1] = start
                j = self(j)
        return tuple(ids)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cycles)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def compose(g: Permutation, h: Permutation) -> Permutation:
    """(g h)(i) = g(h(i))."""
    return g * h


class _UnionFind:
    def __init__(self, items):
        self.parent = {i: i for i in items}

    def find(self, i):
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def blocks(self):
        groups = {}
        for i in self.parent:
            groups.setdefault(self.find(i), []).append(i)
        return [sorted(v) for v in groups.values()]


class OrbitPartition:
    """Partition of {1..n} into blocks, each sorted, ordered by least element."""

    __slots__ = ("blocks", "_block_of")

    def __init__(self, blocks):
        blocks = tuple(sorted(tuple(sorted(int(i) for i in b)) for b in blocks))
        points = [i for b in blocks for i in b]
        n = len(points)
        if sorted(points) != list(range(1, n + 1)):
            raise ValueError("blocks do not partition {1..n}")
        self.blocks = blocks
        self._block_of = {i: bi for bi, b in enumerate(blocks) for i in b}

    @property
    def n(self) -> int:
        return len(self._block_of)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other):
        return isinstance(other, OrbitPartition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"OrbitPartition({[list(b) for b in self.blocks]})"

    def block_of(self, i: int) -> int:
        return self._block_of[i]

    def sizes(self):
        return tuple(len(b) for b in self.blocks)

    def refinement_to(self, coarse: "OrbitPartition"):
        """Position map fine block -> containing coarse block; errors if not nested."""
        if coarse.n != self.n:
            raise ValueError("degree mismatch")
        out = []
        for block in self.blocks:
            target = coarse.block_of(block[0])
            if any(coarse.block_of(i) != target for i in block):
                raise ValueError("partition is not a refinement")
            out.append(target)
        return tuple(out)


def orbit_partition(gens, n: int | None = None) -> OrbitPartition:
    """Orbits of the subgroup generated by gens, via union-find on (i, g(i))."""
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("need n when no generators are given")
        n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("degree mismatch")
    uf = _UnionFind(range(1, n + 1))
    for g in gens:
        for i in range(1, n + 1):
            uf.union(i, g(i))
    return OrbitPartition(uf.blocks())


def min_transpositions(g: Permutation) -> int:
    """Least number of transpositions multiplying to g: n minus orbit count."""
    return g.n - len(orbit_partition([g]))


def age(g: Permutation, d: int) -> Fraction:
    """Age of g acting on the n-th power of a d-dimensional manifold."""
    return Fraction(d * min_transpositions(g), 2)


def graph_defect(g: Permutation, h: Permutation, orbit) -> int:
    """Defect of a <g,h>-orbit: (|o| + 2 - k_g - k_h - k_gh) / 2.

    k_s counts the <s>-orbits inside o.  Always a nonnegative integer.
    """
    if g.n != h.n:
        raise ValueError("degree mismatch")
    orbit = tuple(sorted(int(i) for i in orbit))
    pair = orbit_partition([g, h])
    if orbit not in pair.blocks:
        raise ValueError("not an orbit of <g, h>")

    def suborbits(s: Permutation) -> int:
        ids = s.orbit_ids()
        return len({ids[i - 1] for i in orbit})

    total = len(orbit) + 2 - suborbits(g) - suborbits(h) - suborbits(g * h)
    if total < 0 or total % 2:
        raise AssertionError(f"defect invariant violated on {orbit}")
    return total // 2


class GroupTable:
    """A finite permutation group as an explicit element list.

    Element 0 is the identity.  Conjugacy classes are conjugation orbits
    (breadth-first over the generators, so representatives and witnesses are
    deterministic); centralizer orders come from the class sizes.
    """

    __slots__ = (
        "n",
        "elements",
        "generators",
        "conjugacy_classes",
        "class_of",
        "centralizer_orders",
        "conj_witness",
        "_index",
        "_centralizers",
    )

    def __init__(self, elements, generators):
        elements = tuple(elements)
        if not elements or not elements[0].is_identity():
            raise ValueError("element 0 must be the identity")
        self.n = elements[0].n
        self.elements = elements
        self.generators = tuple(generators)
        self._index = {g: i for i, g in enumerate(elements)}
        if len(self._index) != len(elements):
            raise ValueError("duplicate elements")
        self._build_classes()
        self._centralizers = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, g: Permutation) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise ValueError(f"{g} is not in the group") from None

    def __contains__(self, g):
        return g in self._index

    def __iter__(self):
        return iter(self.elements)

    def _build_classes(self):
        order = len(self.elements)
        class_of = [-1] * order
        witness = [None] * order
        classes = []
        for rep in range(order):
            if class_of[rep] >= 0:
                continue
            cid = len(classes)
            members = [rep]
            class_of[rep] = cid
            witness[rep] = Permutation.identity(self.n)
            queue = [rep]
            while queue:
                x = queue.pop(0)
                gx = self.elements[x]
                for s in self.generators:
                    y = self._index[gx.conjugate(s)]
                    if class_of[y] < 0:
                        class_of[y] = cid
                        witness[y] = s * witness[x]
                        members.append(y)
                        queue.append(y)
            classes.append(tuple(sorted(members)))
        self.conjugacy_classes = tuple(classes)
        self.class_of = tuple(class_of)
        self.conj_witness = tuple(witness)
        sizes = [len(classes[c]) for c in class_of]
        if any(order % s for s in sizes):
            raise AssertionError("class size does not divide group order")
        self.centralizer_orders = tuple(order // s for s in sizes)

    def class_representatives(self):
        return tuple(c[0] for c in self.conjugacy_classes)

    def centralizer(self, g: Permutation):
        """All table elements commuting with g."""
        gi = self.index(g)
        if gi not in self._centralizers:
            self._centralizers[gi] = tuple(
                v for v in self.elements if v * g == g * v
            )
        return self._centralizers[gi]


def close_subgroup(gens, n: int | None = None, max_order: int | None = None) -> GroupTable:
    """Breadth-first closure of the generators into a GroupTable."""
    gens = [g for g in gens]
    if n is None:
        if not gens:
            raise ValueError("need n when no generators are given")
        n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("degree mismatch")
    if max_order is None:
        max_order = max_group_order()
    identity = Permutation.identity(n)
    elements = [identity]
    seen = {identity}
    queue = [identity]
    while queue:
        x = queue.pop(0)
        for s in gens:
            y = x * s
            if y not in seen:
                if len(elements) >= max_order:
                    raise ValueError("group too large")
                seen.add(y)
                elements.append(y)
                queue.append(y)
    return GroupTable(elements, gens)


def symmetric_group(n: int) -> GroupTable:
    """Full S_n in lexicographic order (identity first)."""
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"degree must be between 1 and {MAX_DEGREE}")
    elements = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    if n == 1:
        gens = []
    elif n == 2:
        gens = [Permutation((2, 1))]
    else:
        gens = [
            Permutation.from_cycles([(1, 2)], n),
            Permutation.from_cycles([tuple(range(1, n + 1))], n),
        ]
    return GroupTable(elements, gens)
