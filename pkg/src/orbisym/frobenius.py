"""Graded Frobenius algebras over exact rationals, and Koszul-signed tensor
powers indexed by orbit partitions.

The algebra A stands for the cohomology of a closed manifold S of complex
dimension d: a graded basis, rational structure constants, an integral
functional whose pairing <a, b> = int(a b) is nondegenerate, and a
distinguished Euler class of degree 2d.  A tensor power A^{(x) I} indexed by
the blocks of an orbit partition I models the cohomology of S^I.

Transfer maps run along nested partitions: pullback (restriction to a
multidiagonal) multiplies the factors of each fiber, pushforward is its
adjoint for the Koszul-signed product pairing, computed by solving against
the Gram matrix.  One uniform sign convention is used throughout: reordering
homogeneous factors costs (-1) per transposed pair of odd factors, and
componentwise products pick up the usual cross sign.  The convention is
pinned by the exactness property tests, not by any external normalization.

All coefficients are fractions.Fraction; nothing here is approximate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .permgroup import OrbitPartition


def frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"not an exact rational: {value!r}")


def frac_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _vector(values) -> tuple[Fraction, ...]:
    return tuple(frac(v) for v in values)


@dataclass
class ValidationReport:
    """Outcome of axiom checking; failures carry the violating witness."""

    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, axiom: str, witness) -> None:
        self.failures.append({"axiom": axiom, "witness": witness})

    def to_json_dict(self):
        return {"valid": self.ok, "failures": self.failures}


class FrobeniusAlgebra:
    """Graded Frobenius algebra with exact rational structure constants.

    basis:    labels with degrees in [0, 2d]
    unit:     coefficient vector of 1
    struct:   sparse multiplication table {(i, j): {k: coeff}}
    integral: the degree functional, nonzero only in degree 2d
    euler:    coefficient vector of the Euler class (degree 2d)
    """

    def __init__(self, name, d, basis, unit, struct, integral, euler):
        self.name = str(name)
        self.d = int(d)
        if self.d < 0:
            raise ValueError("dimension must be nonnegative")
        self.labels = tuple(str(label) for label, _ in basis)
        self.degrees = tuple(int(deg) for _, deg in basis)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("duplicate basis labels")
        self.dim = len(self.labels)
        self.unit = self._sparse(_vector(unit))
        self.integral = _vector(integral)
        self.euler = self._sparse(_vector(euler))
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i, j, k, c in struct:
            c = frac(c)
            if c == 0:
                continue
            row = table.setdefault((int(i), int(j)), {})
            row[int(k)] = row.get(int(k), Fraction(0)) + c
        self.struct = {
            key: {k: c for k, c in row.items() if c != 0} for key, row in table.items()
        }
        self.struct = {key: row for key, row in self.struct.items() if row}
        self._gram = None
        self._gram_inv = None
        self._diag_push = {}

    # -- basic structure ---------------------------------------------------

    @property
    def top_degree(self) -> int:
        return 2 * self.d

    def parity(self, i: int) -> int:
        return self.degrees[i] & 1

    @staticmethod
    def _sparse(vec) -> dict[int, Fraction]:
        return {i: c for i, c in enumerate(vec) if c != 0}

    def basis_vector(self, i: int) -> dict[int, Fraction]:
        return {i: Fraction(1)}

    def mul_basis(self, i: int, j: int) -> dict[int, Fraction]:
        return self.struct.get((i, j), {})

    def mul(self, a: dict, b: dict) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, ca in a.items():
            for j, cb in b.items():
                row = self.struct.get((i, j))
                if not row:
                    continue
                cab = ca * cb
                for k, c in row.items():
                    v = out.get(k, Fraction(0)) + cab * c
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
        return out

    def integrate(self, a: dict) -> Fraction:
        return sum((c * self.integral[i] for i, c in a.items()), Fraction(0))

    def pairing(self, a: dict, b: dict) -> Fraction:
        return self.integrate(self.mul(a, b))

    def euler_power(self, k: int) -> dict[int, Fraction]:
        """e^k; e^0 is the unit.  Degree overflow collapses to zero."""
        if k < 0:
            raise ValueError("negative power")
        if k == 0:
            return dict(self.unit)
        out = dict(self.euler)
        for _ in range(k - 1):
            out = self.mul(out, self.euler)
        return out

    def element_degree(self, a: dict) -> int | None:
        """Degree of a homogeneous element, None for 0, error if mixed."""
        degs = {self.degrees[i] for i in a}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    # -- pairing data --------------------------------------------------------

    def gram(self):
        if self._gram is None:
            self._gram = [
                [self.pairing(self.basis_vector(i), self.basis_vector(j)) for j in range(self.dim)]
                for i in range(self.dim)
            ]
        return self._gram

    def gram_inverse(self):
        """Inverse Gram matrix, or None when the pairing is degenerate."""
        if self._gram_inv is None:
            self._gram_inv = _invert(self.gram())
        return self._gram_inv

    # -- validation ----------------------------------------------------------

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        top = self.top_degree
        for i, deg in enumerate(self.degrees):
            if not 0 <= deg <= top:
                report.add("degree_range", {"basis": self.labels[i], "degree": deg})
        for (i, j), row in self.struct.items():
            want = self.degrees[i] + self.degrees[j]
            for k in row:
                if self.degrees[k] != want:
                    report.add("graded", {"triple": [i, j, k]})
        for i in range(self.dim):
            for j in range(self.dim):
                sign = -1 if self.parity(i) and self.parity(j) else 1
                lhs = self.mul_basis(i, j)
                rhs = {k: sign * c for k, c in self.mul_basis(j, i).items()}
                if lhs != rhs:
                    report.add("commutative", {"pair": [i, j]})
        for i in range(self.dim):
            bi = self.basis_vector(i)
            if self.mul(self.unit, bi) != bi or self.mul(bi, self.unit) != bi:
                report.add("unit", {"basis": i})
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.mul_basis(i, j)
                for k in range(self.dim):
                    bk = self.basis_vector(k)
                    lhs = self.mul(ij, bk)
                    rhs = self.mul(self.basis_vector(i), self.mul_basis(j, k))
                    if lhs != rhs:
                        report.add("associative", {"triple": [i, j, k]})
        for i, c in enumerate(self.integral):
            if c != 0 and self.degrees[i] != top:
                report.add("integral_degree", {"basis": i})
        if self.gram_inverse() is None:
            report.add("nondegenerate", {"gram_rank": _rank(self.gram())})
        for i in self.euler:
            if self.degrees[i] != top:
                report.add("euler_degree", {"basis": i})
        if self.gram_inverse() is not None:
            derived = diagonal_euler(self)
            if derived != self.euler:
                report.add(
                    "euler_diagonal",
                    {
                        "declared": {k: frac_str(c) for k, c in self.euler.items()},
                        "derived": {k: frac_str(c) for k, c in derived.items()},
                    },
                )
        return report

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        struct = sorted(
            (i, j, k, frac_str(c))
            for (i, j), row in self.struct.items()
            for k, c in row.items()
        )
        unit = [Fraction(0)] * self.dim
        for i, c in self.unit.items():
            unit[i] = c
        euler = [Fraction(0)] * self.dim
        for i, c in self.euler.items():
            euler[i] = c
        return {
            "name": self.name,
            "d": self.d,
            "basis": [
                {"label": label, "degree": deg}
                for label, deg in zip(self.labels, self.degrees)
            ],
            "unit": [frac_str(c) for c in unit],
            "struct": [[i, j, k, c] for i, j, k, c in struct],
            "integral": [frac_str(c) for c in self.integral],
            "euler": [frac_str(c) for c in euler],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FrobeniusAlgebra":
        return cls(
            name=data["name"],
            d=data["d"],
            basis=[(b["label"], b["degree"]) for b in data["basis"]],
            unit=data["unit"],
            struct=data["struct"],
            integral=data["integral"],
            euler=data["euler"],
        )

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown basis label {label!r}") from None


def _invert(matrix):
    """Exact inverse by Gauss-Jordan, or None when singular."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _rank(matrix) -> int:
    rows = [list(map(Fraction, row)) for row in matrix]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / lead
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
    return rank


# -- tensor classes ------------------------------------------------------------


class TensorClass:
    """Element of A^{(x) I} for an orbit partition I, as a sparse sum of
    basis tuples.  Tuples follow the canonical block order of the partition;
    zero coefficients are never stored."""

    __slots__ = ("partition", "terms")

    def __init__(self, partition: OrbitPartition, terms=None):
        self.partition = partition
        clean: dict[tuple[int, ...], Fraction] = {}
        for key, c in (terms or {}).items():
            c = frac(c)
            if c == 0:
                continue
            key = tuple(int(i) for i in key)
            if len(key) != len(partition):
                raise ValueError("tuple length does not match partition")
            clean[key] = clean.get(key, Fraction(0)) + c
        self.terms = {k: c for k, c in clean.items() if c != 0}

    @classmethod
    def zero(cls, partition) -> "TensorClass":
        return cls(partition, {})

    @classmethod
    def pure(cls, partition, indices, coeff=1) -> "TensorClass":
        return cls(partition, {tuple(indices): frac(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TensorClass") -> "TensorClass":
        if self.partition != other.partition:
            raise ValueError("partition mismatch")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            v = terms.get(k, Fraction(0)) + c
            if v:
                terms[k] = v
            elif k in terms:
                del terms[k]
        return TensorClass(self.partition, terms)

    def __sub__(self, other: "TensorClass") -> "TensorClass":
        return self + other.scale(-1)

    def scale(self, c) -> "TensorClass":
        c = frac(c)
        return TensorClass(self.partition, {k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, TensorClass)
            and self.partition == other.partition
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"TensorClass({self.partition!r}, {self.terms!r})"


def reorder_sign(parities, new_positions) -> int:
    """Koszul sign for moving factor p to slot new_positions[p]: one -1 per
    inverted pair of odd factors."""
    sign = 1
    k = len(parities)
    for p in range(k):
        if not parities[p]:
            continue
        for q in range(p + 1, k):
            if parities[q] and new_positions[p] > new_positions[q]:
                sign = -sign
    return sign


def _expand(partition, factors, base_coeff) -> dict[tuple[int, ...], Fraction]:
    """Distribute a list of per-slot sparse A-elements into tuple terms.
    Bilinear expansion carries no sign; signs belong to factor reorderings."""
    terms = {(): base_coeff}
    for factor in factors:
        if not factor:
            return {}
        nxt = {}
        for key, c in terms.items():
            for i, ci in factor.items():
                nxt[key + (i,)] = c * ci
        terms = nxt
    return terms


def tensor_unit(algebra: FrobeniusAlgebra, partition: OrbitPartition) -> TensorClass:
    factors = [dict(algebra.unit) for _ in range(len(partition))]
    return TensorClass(partition, _expand(partition, factors, Fraction(1)))


def tensor_from_factors(algebra, partition, factors) -> TensorClass:
    """Tensor of homogeneous per-slot elements (no interleaving signs)."""
    if len(factors) != len(partition):
        raise ValueError("factor count does not match partition")
    return TensorClass(partition, _expand(partition, list(factors), Fraction(1)))


def tensor_mul(algebra: FrobeniusAlgebra, a: TensorClass, b: TensorClass) -> TensorClass:
    """Componentwise product with the Koszul cross sign."""
    if a.partition != b.partition:
        raise ValueError("partition mismatch")
    k = len(a.partition)
    out: dict[tuple[int, ...], Fraction] = {}
    for ka, ca in a.terms.items():
        pa = [algebra.parity(i) for i in ka]
        for kb, cb in b.terms.items():
            sign = 1
            odd_a_above = 0
            for s in range(k - 1, -1, -1):
                if algebra.parity(kb[s]) and odd_a_above & 1:
                    sign = -sign
                if pa[s]:
                    odd_a_above += 1
            # sign = (-1)^{sum_{s < t} |b_s| |a_t|}
            factors = [algebra.mul_basis(ka[s], kb[s]) for s in range(k)]
            for key, c in _expand(a.partition, factors, ca * cb * sign).items():
                v = out.get(key, Fraction(0)) + c
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
    return TensorClass(a.partition, out)


def integrate_tensor(algebra: FrobeniusAlgebra, x: TensorClass) -> Fraction:
    """Product of per-factor integrals (factors land in even top degree)."""
    total = Fraction(0)
    for key, c in x.terms.items():
        for i in key:
            c = c * algebra.integral[i]
            if c == 0:
                break
        total += c
    return total


def pair_tensors(algebra, a: TensorClass, b: TensorClass) -> Fraction:
    return integrate_tensor(algebra, tensor_mul(algebra, a, b))


def relabel(algebra, x: TensorClass, block_image: dict) -> TensorClass:
    """Transport along a bijection of blocks; Koszul sign for the reordering."""
    source = x.partition
    images = [tuple(sorted(block_image[b])) for b in source.blocks]
    target = OrbitPartition(images)
    if len(target) != len(source):
        raise ValueError("block map is not a bijection")
    new_positions = [target.block_of(b[0]) for b in images]
    out: dict[tuple[int, ...], Fraction] = {}
    for key, c in x.terms.items():
        parities = [algebra.parity(i) for i in key]
        sign = reorder_sign(parities, new_positions)
        new_key = [0] * len(key)
        for p, i in enumerate(key):
            new_key[new_positions[p]] = i
        new_key = tuple(new_key)
        v = out.get(new_key, Fraction(0)) + sign * c
        if v:
            out[new_key] = v
        elif new_key in out:
            del out[new_key]
    return TensorClass(target, out)


def _grouping(fine: OrbitPartition, coarse: OrbitPartition):
    """Fiber data of the containment surjection: for each coarse block, the
    fine positions above it, plus the position permutation fine-canonical ->
    fiber-grouped and its inverse."""
    phi = fine.refinement_to(coarse)
    fibers = [[] for _ in range(len(coarse))]
    for p, q in enumerate(phi):
        fibers[q].append(p)
    grouped = [p for fiber in fibers for p in fiber]
    to_grouped = [0] * len(phi)
    for slot, p in enumerate(grouped):
        to_grouped[p] = slot
    return fibers, grouped, to_grouped


def pullback(algebra, x: TensorClass, coarse: OrbitPartition) -> TensorClass:
    """Restriction along the multidiagonal S^coarse -> S^fine: group the
    factors by fiber (Koszul sign) and multiply each fiber in order."""
    fine = x.partition
    fibers, _, to_grouped = _grouping(fine, coarse)
    out: dict[tuple[int, ...], Fraction] = {}
    for key, c in x.terms.items():
        parities = [algebra.parity(i) for i in key]
        sign = reorder_sign(parities, to_grouped)
        factors = []
        for fiber in fibers:
            value = None
            for p in fiber:
                value = (
                    algebra.basis_vector(key[p])
                    if value is None
                    else algebra.mul(value, algebra.basis_vector(key[p]))
                )
            factors.append(value if value is not None else dict(algebra.unit))
        for new_key, cc in _expand(coarse, factors, sign * c).items():
            v = out.get(new_key, Fraction(0)) + cc
            if v:
                out[new_key] = v
            elif new_key in out:
                del out[new_key]
    return TensorClass(coarse, out)


def diagonal_euler(algebra: FrobeniusAlgebra) -> dict[int, Fraction]:
    """The diagonal self-intersection m(D(1)): push the unit along the
    two-fold diagonal and pull it back.  For the cohomology of a closed
    manifold this is the Euler class of the tangent bundle; twisted
    products are associative exactly when the declared Euler class agrees
    with it."""
    two = OrbitPartition([(1,), (2,)])
    one = OrbitPartition([(1, 2)])
    pushed = pushforward(algebra, tensor_unit(algebra, one), two)
    pulled = pullback(algebra, pushed, one)
    return {key[0]: c for key, c in pulled.terms.items()}


def _diagonal_push(algebra: FrobeniusAlgebra, c: int):
    """Matrix of the c-fold diagonal pushforward A -> A^{(x) c}, solved
    degree-by-degree against the Gram matrix of A^{(x) c} (in factored form:
    the tensor Gram is the row-signed tensor power of the Gram of A)."""
    cache = algebra._diag_push
    if c in cache:
        return cache[c]
    ginv = algebra.gram_inverse()
    if ginv is None:
        raise ValueError("pushforward undefined")
    m = algebra.dim
    # r_y[t] = <y, t_1 ... t_c> for basis y; built once per tuple.
    products = {}
    for t in itertools.product(range(m), repeat=c):
        value = algebra.basis_vector(t[0])
        for i in t[1:]:
            value = algebra.mul(value, algebra.basis_vector(i))
            if not value:
                break
        if value:
            products[t] = value
    columns = []
    ginv_t_cols = [
        {a: ginv[t][a] for a in range(m) if ginv[t][a] != 0} for t in range(m)
    ]
    for y in range(m):
        r = {}
        for t, value in products.items():
            v = algebra.integrate(algebra.mul(algebra.basis_vector(y), value))
            if v:
                r[t] = v
        # z = ((G^T)^{-1})^{(x) c} r, applied one tensor mode at a time.
        z = r
        for mode in range(c):
            nxt: dict[tuple, Fraction] = {}
            for key, v in z.items():
                for a, g in ginv_t_cols[key[mode]].items():
                    nk = key[:mode] + (a,) + key[mode + 1 :]
                    w = nxt.get(nk, Fraction(0)) + g * v
                    if w:
                        nxt[nk] = w
                    elif nk in nxt:
                        del nxt[nk]
            z = nxt
        column = {}
        for key, v in z.items():
            odd = sum(algebra.parity(i) for i in key)
            sign = -1 if (odd * (odd - 1) // 2) & 1 else 1
            column[key] = sign * v
        columns.append(column)
    cache[c] = columns
    return columns


def pushforward(algebra, y: TensorClass, fine: OrbitPartition) -> TensorClass:
    """Adjoint of pullback along the same containment surjection:
    <pushforward(y), t> = <y, pullback(t)> for every basis tuple t."""
    coarse = y.partition
    fibers, grouped, _ = _grouping(fine, coarse)
    out: dict[tuple[int, ...], Fraction] = {}
    for key, c in y.terms.items():
        pieces = [_diagonal_push(algebra, len(fibers[q]))[key[q]] for q in range(len(key))]
        partial = {(): c}
        for piece in pieces:
            if not piece:
                partial = {}
                break
            nxt = {}
            for acc_key, acc_c in partial.items():
                for sub_key, sub_c in piece.items():
                    nxt[acc_key + sub_key] = acc_c * sub_c
            partial = nxt
        for gkey, cc in partial.items():
            # gkey lists factors fiber-grouped; scatter to canonical positions.
            new_key = [0] * len(grouped)
            positions = [0] * len(grouped)
            for slot, p in enumerate(grouped):
                new_key[p] = gkey[slot]
                positions[slot] = p
            parities = [algebra.parity(i) for i in gkey]
            sign = reorder_sign(parities, positions)
            tk = tuple(new_key)
            v = out.get(tk, Fraction(0)) + sign * cc
            if v:
                out[tk] = v
            elif tk in out:
                del out[tk]
    return TensorClass(fine, out)
