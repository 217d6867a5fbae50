"""The orbifold cohomology ring of [S^n / G] for a permutation group G.

The underlying space is one tensor power of the coefficient algebra per
group element g, indexed by the orbits of g:

    H(n, G) = (+)_{g in G}  A^{(x) O(g)}.

A class has orbifold degree (doubled) 2 i + 2 d l(g) in the g summand, where
i is the cohomological degree and l(g) the minimal transposition count.

The product of a g-term and an h-term restricts both to the common fixed
locus indexed by O(<g,h>), multiplies them there together with the
obstruction class (one Euler-class power per <g,h>-orbit, exponent its graph
defect), and pushes the result forward to O(gh).  The signed variant twists
the product by (-1)^{(l(g)+l(h)-l(gh))/2}.

G acts by conjugating sectors and relabeling orbit factors; invariants are
computed by explicit symmetrization and row reduction.  The centralizer-
invariant description (one component per conjugacy class) and the weighted
triple pairing live here as well.

Pure functions of immutable values throughout: callers may fan out product
terms across threads and merge by sum without extra locking.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .frobenius import (
    FrobeniusAlgebra,
    TensorClass,
    frac,
    frac_str,
    integrate_tensor,
    pair_tensors,
    pullback,
    pushforward,
    relabel,
    tensor_from_factors,
    tensor_mul,
    tensor_unit,
)
from .permgroup import (
    GroupTable,
    OrbitPartition,
    Permutation,
    graph_defect,
    min_transpositions,
    orbit_partition,
)
from .poincare import PoincarePolynomial, invariant_dimensions

_pair_partition_cache: dict = {}
_obstruction_cache: dict = {}


def pair_partition(g: Permutation, h: Permutation) -> OrbitPartition:
    key = (g.images, h.images)
    part = _pair_partition_cache.get(key)
    if part is None:
        part = orbit_partition([g, h])
        _pair_partition_cache[key] = part
    return part


def sector_partition(g: Permutation) -> OrbitPartition:
    return pair_partition(g, g)


def obstruction_class(algebra: FrobeniusAlgebra, g: Permutation, h: Permutation) -> TensorClass:
    """Tensor of Euler-class powers over O(<g,h>), exponents the graph defects."""
    key = (id(algebra), g.images, h.images)
    value = _obstruction_cache.get(key)
    if value is None:
        part = pair_partition(g, h)
        factors = [algebra.euler_power(graph_defect(g, h, block)) for block in part.blocks]
        value = tensor_from_factors(algebra, part, factors)
        _obstruction_cache[key] = value
    return value


def epsilon_sign(g: Permutation, h: Permutation) -> int:
    """(l(g) + l(h) - l(gh)) / 2, always a nonnegative integer."""
    e = min_transpositions(g) + min_transpositions(h) - min_transpositions(g * h)
    if e < 0 or e % 2:
        raise AssertionError("transposition-length defect is not an even nonnegative integer")
    return e // 2


class OrbifoldClass:
    """Sparse element of H(n, G): sector permutation -> tensor class."""

    __slots__ = ("group", "algebra", "components")

    def __init__(self, group: GroupTable, algebra: FrobeniusAlgebra, components=None):
        self.group = group
        self.algebra = algebra
        comps: dict[Permutation, TensorClass] = {}
        for g, tensor in (components or {}).items():
            if g not in group:
                raise ValueError(f"{g} is not in the group")
            if tensor.partition != sector_partition(g):
                raise ValueError("tensor partition does not match the sector")
            if not tensor.is_zero():
                comps[g] = tensor
        self.components = comps

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, group, algebra) -> "OrbifoldClass":
        return cls(group, algebra, {})

    @classmethod
    def pure(cls, group, algebra, g: Permutation, indices, coeff=1) -> "OrbifoldClass":
        tensor = TensorClass.pure(sector_partition(g), indices, coeff)
        return cls(group, algebra, {g: tensor})

    @classmethod
    def unit(cls, group, algebra) -> "OrbifoldClass":
        e = Permutation.identity(group.n)
        return cls(group, algebra, {e: tensor_unit(algebra, sector_partition(e))})

    # -- linear structure ------------------------------------------------------

    def __add__(self, other: "OrbifoldClass") -> "OrbifoldClass":
        self._check_compatible(other)
        comps = dict(self.components)
        for g, tensor in other.components.items():
            comps[g] = comps[g] + tensor if g in comps else tensor
        return OrbifoldClass(self.group, self.algebra, comps)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "OrbifoldClass":
        c = frac(c)
        return OrbifoldClass(
            self.group, self.algebra,
            {g: tensor.scale(c) for g, tensor in self.components.items()},
        )

    def __eq__(self, other):
        return (
            isinstance(other, OrbifoldClass)
            and self.group is other.group
            and self.components == other.components
        )

    def is_zero(self) -> bool:
        return not self.components

    def _check_compatible(self, other):
        if self.group is not other.group or self.algebra is not other.algebra:
            raise ValueError("classes live in different rings")

    def __repr__(self):
        parts = ", ".join(f"{g}: {t.terms}" for g, t in sorted(self.components.items(), key=lambda kv: kv[0].images))
        return f"OrbifoldClass({{{parts}}})"

    # -- degree bookkeeping ------------------------------------------------------

    def doubled_degrees(self):
        """Set of doubled orbifold degrees with a nonzero term."""
        out = set()
        d = self.algebra.d
        for g, tensor in self.components.items():
            shift = 2 * d * min_transpositions(g)
            for key in tensor.terms:
                out.add(2 * sum(self.algebra.degrees[i] for i in key) + shift)
        return out

    # -- serialization ---------------------------------------------------------

    def to_json_list(self):
        out = []
        for g in sorted(self.components, key=lambda p: p.images):
            tensor = self.components[g]
            terms = [
                {"tuple": [self.algebra.labels[i] for i in key], "coeff": frac_str(c)}
                for key, c in sorted(tensor.terms.items())
            ]
            out.append({"perm": str(g), "terms": terms})
        return out

    @classmethod
    def from_json_list(cls, group, algebra, data) -> "OrbifoldClass":
        total = cls.zero(group, algebra)
        for entry in data:
            g = Permutation.parse(entry["perm"], group.n)
            part = sector_partition(g)
            terms = {}
            for term in entry["terms"]:
                key = tuple(algebra.label_index(lbl) for lbl in term["tuple"])
                terms[key] = frac(term["coeff"]) + terms.get(key, Fraction(0))
            total = total + cls(group, algebra, {g: TensorClass(part, terms)})
        return total


def multiply(a: OrbifoldClass, b: OrbifoldClass, signed: bool = False) -> OrbifoldClass:
    """Orbifold product; the signed flag twists each (g, h) term by
    (-1)^{epsilon(g, h)}."""
    a._check_compatible(b)
    algebra = a.algebra
    out: dict[Permutation, TensorClass] = {}
    for g, x in a.components.items():
        for h, y in b.components.items():
            k = pair_partition(g, h)
            xk = pullback(algebra, x, k)
            if xk.is_zero():
                continue
            yk = pullback(algebra, y, k)
            if yk.is_zero():
                continue
            prod = tensor_mul(algebra, xk, yk)
            prod = tensor_mul(algebra, prod, obstruction_class(algebra, g, h))
            if prod.is_zero():
                continue
            gh = g * h
            term = pushforward(algebra, prod, sector_partition(gh))
            if signed and epsilon_sign(g, h) & 1:
                term = term.scale(-1)
            out[gh] = out[gh] + term if gh in out else term
    return OrbifoldClass(a.group, algebra, out)


def group_act(h: Permutation, a: OrbifoldClass) -> OrbifoldClass:
    """h . (alpha)_g = (h alpha)_{h g h^{-1}} by relabeling orbit factors."""
    out: dict[Permutation, TensorClass] = {}
    for g, tensor in a.components.items():
        target = g.conjugate(h)
        block_image = {block: tuple(h(i) for i in block) for block in tensor.partition.blocks}
        moved = relabel(a.algebra, tensor, block_image)
        out[target] = out[target] + moved if target in out else moved
    return OrbifoldClass(a.group, a.algebra, out)


def symmetrize(a: OrbifoldClass) -> OrbifoldClass:
    """Group average; the projection onto the invariant subring."""
    total = OrbifoldClass.zero(a.group, a.algebra)
    for h in a.group:
        total = total + group_act(h, a)
    return total.scale(Fraction(1, a.group.order))


def is_invariant(a: OrbifoldClass) -> bool:
    """Invariance under the generators; enough, since the action is a
    group homomorphism."""
    return all(group_act(h, a) == a for h in a.group.generators)


def integral(a: OrbifoldClass) -> Fraction:
    """Integral of the identity component over S^n."""
    e = Permutation.identity(a.group.n)
    comp = a.components.get(e)
    return integrate_tensor(a.algebra, comp) if comp is not None else Fraction(0)


def pairing(a: OrbifoldClass, b: OrbifoldClass, quotient: bool = False) -> Fraction:
    """<a, b> = integral(a b); with quotient=True divided by |G|."""
    value = integral(multiply(a, b))
    return value / a.group.order if quotient else value


def even_odd_split(a: OrbifoldClass):
    """Split by cohomological parity of the tensor factors."""
    halves = [dict(), dict()]
    for g, tensor in a.components.items():
        buckets = [{}, {}]
        for key, c in tensor.terms.items():
            par = sum(a.algebra.degrees[i] for i in key) & 1
            buckets[par][key] = c
        for par in (0, 1):
            if buckets[par]:
                halves[par][g] = TensorClass(tensor.partition, buckets[par])
    even = OrbifoldClass(a.group, a.algebra, halves[0])
    odd = OrbifoldClass(a.group, a.algebra, halves[1])
    return even, odd


# -- invariant dimensions -------------------------------------------------------


def _basis_iter(group: GroupTable, algebra: FrobeniusAlgebra):
    """Keys (g_index, tuple) with doubled orbifold degrees, canonical order."""
    d = algebra.d
    for gi, g in enumerate(group.elements):
        part = sector_partition(g)
        shift = 2 * d * min_transpositions(g)
        for key in itertools.product(range(algebra.dim), repeat=len(part)):
            deg = 2 * sum(algebra.degrees[i] for i in key) + shift
            yield (gi, key), deg


def _action_tables(group: GroupTable, algebra: FrobeniusAlgebra):
    """For each generator s and sector g: conjugated sector index and the
    factor position map of the block bijection o -> s(o)."""
    tables = {}
    for s in group.generators:
        per_sector = []
        for g in group.elements:
            part = sector_partition(g)
            tpart = sector_partition(g.conjugate(s))
            positions = tuple(tpart.block_of(s(block[0])) for block in part.blocks)
            per_sector.append((group.index(g.conjugate(s)), positions))
        tables[s] = per_sector
    return tables


def invariant_dims(group: GroupTable, algebra: FrobeniusAlgebra) -> dict[int, int]:
    """Invariant dimensions per doubled orbifold degree, by symmetrizing the
    basis of monomial tensors (a signed permutation action)."""
    parities = [d & 1 for d in algebra.degrees]
    tables = _action_tables(group, algebra)

    def act(s, key):
        gi, tup = key
        target, positions = tables[s][gi]
        kk = len(tup)
        new_tup = [0] * kk
        sign = 1
        for p in range(kk):
            new_tup[positions[p]] = tup[p]
        for p in range(kk):
            if parities[tup[p]]:
                for q in range(p + 1, kk):
                    if parities[tup[q]] and positions[p] > positions[q]:
                        sign = -sign
        return (target, tuple(new_tup)), sign

    return invariant_dimensions(_basis_iter(group, algebra), act, group.generators)


def orbifold_poincare(group: GroupTable, algebra: FrobeniusAlgebra, shift: int = 0) -> PoincarePolynomial:
    """Poincare polynomial of the invariant subring in doubled degrees,
    optionally shifted down by a doubled amount (e.g. 2 n d to center)."""
    dims = invariant_dims(group, algebra)
    return PoincarePolynomial(dims).shifted(shift)


# -- centralizer-invariant description ----------------------------------------


class CRClass:
    """One tensor per conjugacy class, invariant under the centralizer of
    the representative."""

    __slots__ = ("group", "algebra", "components")

    def __init__(self, group, algebra, components=None):
        self.group = group
        self.algebra = algebra
        comps = {}
        for cid, tensor in (components or {}).items():
            rep = group.elements[group.conjugacy_classes[cid][0]]
            if tensor.partition != sector_partition(rep):
                raise ValueError("tensor partition does not match class representative")
            if not tensor.is_zero():
                comps[int(cid)] = tensor
        self.components = comps

    @classmethod
    def from_member(cls, group, algebra, g: Permutation, tensor) -> "CRClass":
        """Build from a tensor over O(g) for any class member g, transporting
        it back to the canonical representative."""
        gi = group.index(g)
        cid = group.class_of[gi]
        moved = _transport(group, algebra, tensor, group.conj_witness[gi].inverse())
        return cls(group, algebra, {cid: moved})

    def __eq__(self, other):
        return (
            isinstance(other, CRClass)
            and self.group is other.group
            and self.components == other.components
        )

    def __repr__(self):
        return f"CRClass({self.components!r})"


def _transport(group, algebra, tensor, v: Permutation):
    """Move a tensor living over O(g) to O(v g v^{-1}) along v."""
    block_image = {block: tuple(v(i) for i in block) for block in tensor.partition.blocks}
    return relabel(algebra, tensor, block_image)


def check_centralizer_invariance(group, algebra, g: Permutation, tensor) -> bool:
    return all(_transport(group, algebra, tensor, v) == tensor for v in group.centralizer(g))


def expand_cr(cr: CRClass) -> OrbifoldClass:
    """The sum-over-the-class map: every member receives the transported
    tensor along the first conjugation witness found by the class BFS."""
    group, algebra = cr.group, cr.algebra
    comps = {}
    for cid, tensor in cr.components.items():
        rep = group.elements[group.conjugacy_classes[cid][0]]
        if not check_centralizer_invariance(group, algebra, rep, tensor):
            raise ValueError("tensor is not centralizer invariant")
        for member in group.conjugacy_classes[cid]:
            v = group.conj_witness[member]
            comps[group.elements[member]] = _transport(group, algebra, tensor, v)
    return OrbifoldClass(group, algebra, comps)


def restrict_cr(a: OrbifoldClass) -> CRClass:
    """Inverse of expand_cr on invariant classes; validates invariance."""
    group, algebra = a.group, a.algebra
    comps = {}
    for cid, members in enumerate(group.conjugacy_classes):
        rep = group.elements[members[0]]
        tensor = a.components.get(rep)
        if tensor is not None:
            comps[cid] = tensor
    cr = CRClass(group, algebra, comps)
    if expand_cr(cr) != a:
        raise ValueError("class is not invariant")
    return cr


def cr_triple_pairing(c1: CRClass, c2: CRClass, c3: CRClass) -> Fraction:
    """Weighted three-point function over pairs (h1, h2) with h1 h2 h3 = 1,
    one orbit representative per simultaneous conjugacy class, each weighted
    by the reciprocal of its joint centralizer order."""
    group, algebra = c1.group, c1.algebra
    if c2.group is not group or c3.group is not group:
        raise ValueError("classes live in different rings")
    elements = group.elements
    total = Fraction(0)
    for cid1, t1 in c1.components.items():
        class1 = group.conjugacy_classes[cid1]
        for cid2, t2 in c2.components.items():
            class2 = group.conjugacy_classes[cid2]
            pairs = set()
            for i1 in class1:
                for i2 in class2:
                    h3 = (elements[i1] * elements[i2]).inverse()
                    cid3 = group.class_of[group.index(h3)]
                    if cid3 in c3.components:
                        pairs.add((i1, i2))
            seen = set()
            for pair in sorted(pairs):
                if pair in seen:
                    continue
                # simultaneous conjugation orbit of the pair
                orbit = {pair}
                queue = [pair]
                while queue:
                    p1, p2 = queue.pop()
                    for s in group.generators:
                        q = (
                            group.index(elements[p1].conjugate(s)),
                            group.index(elements[p2].conjugate(s)),
                        )
                        if q not in orbit:
                            orbit.add(q)
                            queue.append(q)
                seen |= orbit
                weight = Fraction(len(orbit), group.order)  # 1 / |C(h1, h2)|
                i1, i2 = pair
                h1, h2 = elements[i1], elements[i2]
                h3 = (h1 * h2).inverse()
                cid3 = group.class_of[group.index(h3)]
                t3 = c3.components[cid3]
                part = pair_partition(h1, h2)
                g1 = pullback(algebra, _transport(group, algebra, t1, group.conj_witness[i1]), part)
                g2 = pullback(algebra, _transport(group, algebra, t2, group.conj_witness[i2]), part)
                w3 = _witness_for(group, cid3, group.index(h3))
                g3 = pullback(algebra, _transport(group, algebra, t3, w3), part)
                prod = tensor_mul(algebra, tensor_mul(algebra, g1, g2), g3)
                prod = tensor_mul(algebra, prod, obstruction_class(algebra, h1, h2))
                total += weight * integrate_tensor(algebra, prod)
    return total


def _witness_for(group, cid, member_index):
    if group.class_of[member_index] != cid:
        raise AssertionError("member outside class")
    return group.conj_witness[member_index]
