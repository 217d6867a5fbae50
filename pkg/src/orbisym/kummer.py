"""The twisted-sector ring of a symmetric power of an abelian-group surface.

Components are indexed by a sector permutation g together with a division
point y of the surface, encoded as a residue tuple in (Z/m(g))^r where m(g)
is the gcd of the orbit sizes of g.  The tensor part lives over O(g) in the
exterior surface algebra, whose Euler class vanishes, so the sector product
only survives when every orbit of <g, h> has graph defect zero; the product
additionally spreads over the division points z of gh with a counting
factor: the number of points w of order m(<g, h>) reducing to x, y and z
simultaneously.

The symmetric group acts on the tensor part exactly as in the plain
orbifold ring and leaves the division point alone.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

from .algebras import builtin_algebra
from .frobenius import TensorClass, frac, frac_str, pullback, pushforward, relabel, tensor_mul, tensor_unit
from .orbifold import _action_tables, obstruction_class, pair_partition, sector_partition
from .permgroup import GroupTable, Permutation, min_transpositions, orbit_partition, symmetric_group
from .poincare import PoincarePolynomial, invariant_dimensions


def surface_algebra():
    """The coefficient algebra: the exterior algebra on four odd classes."""
    return builtin_algebra("abelian")


def m_of(gens) -> int:
    """gcd of the orbit sizes of the subgroup generated by gens.

    Fixed points count as orbits of size one, so any fixed point forces 1.
    """
    if isinstance(gens, Permutation):
        gens = [gens]
    part = orbit_partition(list(gens))
    out = 0
    for block in part.blocks:
        out = gcd(out, len(block))
    return out


def division_count(g: Permutation, h: Permutation, x, y, z) -> int:
    """Number of division points w of order m(<g, h>) whose reductions are
    x, y and z: per coordinate, direct enumeration of a in Z/M with
    a = x mod m(g), a = y mod m(h), a = z mod m(gh); the result is the
    product over the coordinates."""
    capital = m_of([g, h])
    mg, mh, mk = m_of(g), m_of(h), m_of(g * h)
    for m in (mg, mh, mk):
        if capital % m:
            raise AssertionError("orbit gcd does not divide the pair gcd")
    if not len(x) == len(y) == len(z):
        raise ValueError("division points have different ranks")
    count = 1
    for xi, yi, zi in zip(x, y, z):
        if not (0 <= xi < mg and 0 <= yi < mh and 0 <= zi < mk):
            raise ValueError("division point is not reduced")
        count *= sum(
            1 for a in range(capital) if a % mg == xi and a % mh == yi and a % mk == zi
        )
        if count == 0:
            break
    return count


def _reduced(point, modulus: int, rank: int):
    point = tuple(int(v) for v in point)
    if len(point) != rank:
        raise ValueError("division point has the wrong rank")
    if any(not 0 <= v < modulus for v in point):
        raise ValueError("division point is not reduced")
    return point


class KummerClass:
    """Sparse element: (sector permutation, division point) -> tensor class."""

    __slots__ = ("group", "rank", "algebra", "components")

    def __init__(self, group: GroupTable, rank: int = 4, components=None):
        self.group = group
        self.rank = int(rank)
        if self.rank < 0:
            raise ValueError("torsion rank must be nonnegative")
        self.algebra = surface_algebra()
        comps: dict[tuple[Permutation, tuple[int, ...]], TensorClass] = {}
        for (g, point), tensor in (components or {}).items():
            if g not in group:
                raise ValueError(f"{g} is not in the group")
            point = _reduced(point, m_of(g), self.rank)
            if tensor.partition != sector_partition(g):
                raise ValueError("tensor partition does not match the sector")
            if not tensor.is_zero():
                key = (g, point)
                comps[key] = comps[key] + tensor if key in comps else tensor
        self.components = comps

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, group, rank: int = 4) -> "KummerClass":
        return cls(group, rank, {})

    @classmethod
    def pure(cls, group, rank, g: Permutation, point, indices, coeff=1) -> "KummerClass":
        tensor = TensorClass.pure(sector_partition(g), indices, coeff)
        return cls(group, rank, {(g, tuple(point)): tensor})

    @classmethod
    def unit(cls, group, rank: int = 4) -> "KummerClass":
        e = Permutation.identity(group.n)
        point = (0,) * rank
        return cls(group, rank, {(e, point): tensor_unit(surface_algebra(), sector_partition(e))})

    # -- linear structure ------------------------------------------------------

    def __add__(self, other: "KummerClass") -> "KummerClass":
        self._check_compatible(other)
        comps = dict(self.components)
        for key, tensor in other.components.items():
            comps[key] = comps[key] + tensor if key in comps else tensor
        return KummerClass(self.group, self.rank, comps)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "KummerClass":
        c = frac(c)
        return KummerClass(
            self.group, self.rank,
            {key: tensor.scale(c) for key, tensor in self.components.items()},
        )

    def __eq__(self, other):
        return (
            isinstance(other, KummerClass)
            and self.group is other.group
            and self.rank == other.rank
            and self.components == other.components
        )

    def is_zero(self) -> bool:
        return not self.components

    def _check_compatible(self, other):
        if self.group is not other.group or self.rank != other.rank:
            raise ValueError("classes live in different rings")

    def __repr__(self):
        parts = ", ".join(
            f"({g}, {pt}): {t.terms}"
            for (g, pt), t in sorted(self.components.items(), key=lambda kv: (kv[0][0].images, kv[0][1]))
        )
        return f"KummerClass({{{parts}}})"

    def doubled_degrees(self):
        out = set()
        d = self.algebra.d
        for (g, _), tensor in self.components.items():
            shift = 2 * d * min_transpositions(g)
            for key in tensor.terms:
                out.add(2 * sum(self.algebra.degrees[i] for i in key) + shift)
        return out

    # -- serialization ---------------------------------------------------------

    def to_json_list(self):
        out = []
        for g, point in sorted(self.components, key=lambda k: (k[0].images, k[1])):
            tensor = self.components[g, point]
            terms = [
                {"tuple": [self.algebra.labels[i] for i in key], "coeff": frac_str(c)}
                for key, c in sorted(tensor.terms.items())
            ]
            out.append({
                "perm": str(g),
                "torsion": {"modulus": m_of(g), "residues": list(point)},
                "terms": terms,
            })
        return out

    @classmethod
    def from_json_list(cls, group, rank, data) -> "KummerClass":
        algebra = surface_algebra()
        total = cls.zero(group, rank)
        for entry in data:
            g = Permutation.parse(entry["perm"], group.n)
            torsion = entry["torsion"]
            if torsion["modulus"] != m_of(g):
                raise ValueError("torsion modulus does not match the sector")
            point = tuple(int(v) for v in torsion["residues"])
            part = sector_partition(g)
            terms = {}
            for term in entry["terms"]:
                key = tuple(algebra.label_index(lbl) for lbl in term["tuple"])
                terms[key] = frac(term["coeff"]) + terms.get(key, Fraction(0))
            total = total + cls(group, rank, {(g, point): TensorClass(part, terms)})
        return total


def kummer_multiply(a: KummerClass, b: KummerClass) -> KummerClass:
    """Sector product of the tensor parts (vanishing Euler class, so only
    defect-zero pairs survive) spread over the division points of gh with
    the counting factor, normalized by (m(gh) / m(<g, h>))^r.

    The normalization is the ratio of the degrees of the coverings that
    present each component's cohomology on the full power of the surface:
    pushing forward in presented coordinates costs that factor.  With the
    raw count alone the product is not associative (a route through a
    fixed-point-free sector overcounts by the number of division points
    it spreads over)."""
    a._check_compatible(b)
    algebra = a.algebra
    rank = a.rank
    out: dict[tuple[Permutation, tuple[int, ...]], TensorClass] = {}
    for (g, x), s in a.components.items():
        for (h, y), t in b.components.items():
            k = pair_partition(g, h)
            sk = pullback(algebra, s, k)
            if sk.is_zero():
                continue
            tk = pullback(algebra, t, k)
            if tk.is_zero():
                continue
            prod = tensor_mul(algebra, sk, tk)
            prod = tensor_mul(algebra, prod, obstruction_class(algebra, g, h))
            if prod.is_zero():
                continue
            gh = g * h
            term = pushforward(algebra, prod, sector_partition(gh))
            if term.is_zero():
                continue
            mk = m_of(gh)
            unit = Fraction(mk, m_of([g, h])) ** rank
            for z in itertools.product(range(mk), repeat=rank):
                c = division_count(g, h, x, y, z)
                if c == 0:
                    continue
                key = (gh, z)
                piece = term.scale(c * unit)
                out[key] = out[key] + piece if key in out else piece
    return KummerClass(a.group, rank, out)


def kummer_act(h: Permutation, a: KummerClass) -> KummerClass:
    """h . (alpha)_{g, y} = (h alpha)_{h g h^{-1}, y}: the division point is
    untouched (conjugation preserves orbit sizes, so it stays reduced)."""
    out: dict[tuple[Permutation, tuple[int, ...]], TensorClass] = {}
    for (g, point), tensor in a.components.items():
        target = g.conjugate(h)
        block_image = {block: tuple(h(i) for i in block) for block in tensor.partition.blocks}
        moved = relabel(a.algebra, tensor, block_image)
        key = (target, point)
        out[key] = out[key] + moved if key in out else moved
    return KummerClass(a.group, a.rank, out)


def kummer_symmetrize(a: KummerClass) -> KummerClass:
    total = KummerClass.zero(a.group, a.rank)
    for h in a.group:
        total = total + kummer_act(h, a)
    return total.scale(Fraction(1, a.group.order))


def kummer_poincare(n: int, rank: int = 4) -> PoincarePolynomial:
    """Poincare polynomial (doubled degrees) of the invariant subspace of
    the full component space over S_n, division points included."""
    group = symmetric_group(n)
    algebra = surface_algebra()
    d = algebra.d
    parities = [deg & 1 for deg in algebra.degrees]
    tables = _action_tables(group, algebra)

    def basis():
        for gi, g in enumerate(group.elements):
            part = sector_partition(g)
            shift = 2 * d * min_transpositions(g)
            m = m_of(g)
            for point in itertools.product(range(m), repeat=rank):
                for key in itertools.product(range(algebra.dim), repeat=len(part)):
                    deg = 2 * sum(algebra.degrees[i] for i in key) + shift
                    yield (gi, point, key), deg

    def act(s, full_key):
        gi, point, tup = full_key
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
        return (target, point, tuple(new_tup)), sign

    return PoincarePolynomial(invariant_dimensions(basis(), act, group.generators))


def kummer_poincare_reduced(n: int, rank: int = 4) -> PoincarePolynomial:
    """kummer_poincare divided by the surface factor (1 + t)^4; the division
    must be exact, and that is asserted by the divider."""
    surface = PoincarePolynomial({0: 1, 2: 4, 4: 6, 6: 4, 8: 1})
    return kummer_poincare(n, rank).divide_exact(surface)
