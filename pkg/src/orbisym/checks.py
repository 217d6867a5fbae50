"""Certified ring checks: associativity, skew commutativity, pairing rank.

Two associativity engines produce the same verdict:

  * plain: evaluate (a b) c and a (b c) through the public product for
    every (or for sampled) basis triple.  Used when the cube of the ring
    dimension is small.
  * composed: build the sector product tensors M[g,h] once, then compare,
    for every sector triple (g, h, k), the two compositions joined on the
    middle index.  Equality of the composed trilinear tensors is equality
    of all basis triple products, so the verified count is still dim^3.

Joins run in numpy int64 when every coefficient is an integer and the
packed keys and accumulated values provably fit; otherwise an exact
dictionary join is used.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .frobenius import (
    TensorClass,
    _diagonal_push,
    _grouping,
    _rank,
    pair_tensors,
    reorder_sign,
)
from .orbifold import (
    OrbifoldClass,
    epsilon_sign,
    even_odd_split,
    multiply,
    pair_partition,
    sector_partition,
    symmetrize,
)
from .permgroup import graph_defect, symmetric_group

DEFAULT_MAX_DIM = 200
PLAIN_TRIPLE_BOUND = 3_000_000
DENSE_RANK_BOUND = 1000


@dataclass
class Certificate:
    """Outcome of a check run; witness carries the first counterexample."""

    check: str
    mode: str
    passed: bool
    count: int
    seed: int | None = None
    witness: dict | None = None
    detail: dict = field(default_factory=dict)

    def to_json_dict(self):
        out = {
            "check": self.check,
            "mode": self.mode,
            "passed": self.passed,
            "count": self.count,
            "seed": self.seed,
            "witness": self.witness,
        }
        out.update(self.detail)
        return out


def ring_basis(group, algebra):
    """All (sector, tuple) basis pairs in canonical order."""
    basis = []
    for g in group.elements:
        part = sector_partition(g)
        for key in itertools.product(range(algebra.dim), repeat=len(part)):
            basis.append((g, key))
    return basis


def _basis_class(group, algebra, element):
    g, key = element
    return OrbifoldClass.pure(group, algebra, g, key)


def _witness(algebra, elements):
    return {
        "elements": [
            {"perm": str(g), "tuple": [algebra.labels[i] for i in key]}
            for g, key in elements
        ]
    }


# -- sector product tensors ------------------------------------------------------


def sector_entries(algebra, g, h, signed: bool = False):
    """Structure entries of the product restricted to sectors (g, h): a list
    of (a_tuple, b_tuple, t_tuple, coeff) with a over O(g), b over O(h) and
    t over O(gh), matching multiply on pure classes.

    Built slotwise over O(<g,h>) and assembled with the same Koszul signs
    the transfer maps use: grouping reorders for both inputs and the
    output, plus the componentwise cross sign.
    """
    gh = g * h
    coarse = pair_partition(g, h)
    part_a, part_b, part_t = sector_partition(g), sector_partition(h), sector_partition(gh)
    fibers_a, _, to_grouped_a = _grouping(part_a, coarse)
    fibers_b, _, to_grouped_b = _grouping(part_b, coarse)
    fibers_t, grouped_t, _ = _grouping(part_t, coarse)
    parities = [d & 1 for d in algebra.degrees]
    dim = algebra.dim

    def slot_products(count):
        """In-fiber-order products of all basis subtuples, zero ones dropped."""
        out = []
        for sub in itertools.product(range(dim), repeat=count):
            value = algebra.basis_vector(sub[0]) if sub else dict(algebra.unit)
            for i in sub[1:]:
                value = algebra.mul(value, algebra.basis_vector(i))
                if not value:
                    break
            if value:
                out.append((sub, value, sum(parities[i] for i in sub) & 1))
        return out

    per_slot = []
    for c, block in enumerate(coarse.blocks):
        eul = algebra.euler_power(graph_defect(g, h, block))
        push_cols = _diagonal_push(algebra, len(fibers_t[c]))
        entries = []
        for a_sub, va, pa in slot_products(len(fibers_a[c])):
            for b_sub, vb, pb in slot_products(len(fibers_b[c])):
                u = algebra.mul(algebra.mul(va, vb), eul)
                for m, cm in u.items():
                    for t_sub, ct in push_cols[m].items():
                        entries.append((a_sub, b_sub, t_sub, cm * ct, pa, pb))
        per_slot.append(entries)

    flip = signed and epsilon_sign(g, h) & 1
    ka, kb, kt = len(part_a), len(part_b), len(part_t)
    out = []
    for combo in itertools.product(*per_slot):
        coeff = Fraction(-1) if flip else Fraction(1)
        cross = 0
        cum_pb = 0
        a_key = [0] * ka
        b_key = [0] * kb
        t_grouped = []
        for c, (a_sub, b_sub, t_sub, value, pa, pb) in enumerate(combo):
            coeff *= value
            cross ^= cum_pb & pa
            cum_pb ^= pb
            for pos, i in zip(fibers_a[c], a_sub):
                a_key[pos] = i
            for pos, i in zip(fibers_b[c], b_sub):
                b_key[pos] = i
            t_grouped.extend(t_sub)
        if cross:
            coeff = -coeff
        coeff *= reorder_sign([parities[i] for i in a_key], to_grouped_a)
        coeff *= reorder_sign([parities[i] for i in b_key], to_grouped_b)
        t_key = [0] * kt
        positions = [0] * kt
        for slot, p in enumerate(grouped_t):
            t_key[p] = t_grouped[slot]
            positions[slot] = p
        coeff *= reorder_sign([parities[i] for i in t_grouped], positions)
        out.append((tuple(a_key), tuple(b_key), tuple(t_key), coeff))
    return out


# -- composed-tensor equality ------------------------------------------------------


def _code(key, dim):
    value = 0
    for i in key:
        value = value * dim + i
    return value


def _int_columns(entries, dims):
    """Integer-coded numpy columns for (x, y, z, coeff) entries, or None if
    any coefficient is non-integral or too large for safe int64 products."""
    dx, dy, dz = dims
    values = []
    for _, _, _, c in entries:
        if c.denominator != 1 or abs(c.numerator) > 1 << 30:
            return None
        values.append(c.numerator)
    n = len(entries)
    x = np.fromiter((_code(e[0], dx) for e in entries), dtype=np.int64, count=n)
    y = np.fromiter((_code(e[1], dy) for e in entries), dtype=np.int64, count=n)
    z = np.fromiter((_code(e[2], dz) for e in entries), dtype=np.int64, count=n)
    v = np.fromiter(values, dtype=np.int64, count=n)
    return x, y, z, v


def _join_numpy(first, second, packer, caps):
    """Join two entry-column sets on the middle index and accumulate packed
    output keys.  first = (x1, y1, m, v1) joined with second = (m, y2, z2, v2)
    on m; packer builds the packed key from the four surviving columns.
    Returns (keys, sums) sorted and zero-pruned, or None when value bounds
    cannot be certified."""
    x1, y1, m1, v1 = first
    m2, y2, z2, v2 = second
    if caps >= 1 << 62:
        return None
    order1 = np.argsort(m1, kind="stable")
    x1, y1, m1, v1 = x1[order1], y1[order1], m1[order1], v1[order1]
    order2 = np.argsort(m2, kind="stable")
    m2, y2, z2, v2 = m2[order2], y2[order2], z2[order2], v2[order2]
    um1, start1, count1 = np.unique(m1, return_index=True, return_counts=True)
    um2, start2, count2 = np.unique(m2, return_index=True, return_counts=True)
    common, i1, i2 = np.intersect1d(um1, um2, return_indices=True)
    sizes = count1[i1] * count2[i2]
    total = int(np.sum(sizes))
    top1 = int(np.max(np.abs(v1))) if len(v1) else 0
    top2 = int(np.max(np.abs(v2))) if len(v2) else 0
    if top1 * top2 * max(total, 1) >= 1 << 62:
        return None
    keys = np.empty(total, dtype=np.int64)
    vals = np.empty(total, dtype=np.int64)
    pos = 0
    for idx in range(len(common)):
        s1, c1 = int(start1[i1[idx]]), int(count1[i1[idx]])
        s2, c2 = int(start2[i2[idx]]), int(count2[i2[idx]])
        size = c1 * c2
        left = np.repeat(np.arange(s1, s1 + c1), c2)
        right = np.tile(np.arange(s2, s2 + c2), c1)
        keys[pos : pos + size] = packer(x1[left], y1[left], y2[right], z2[right])
        vals[pos : pos + size] = v1[left] * v2[right]
        pos += size
    order = np.argsort(keys, kind="stable")
    keys, vals = keys[order], vals[order]
    if not len(keys):
        return keys, vals
    bounds = np.flatnonzero(np.concatenate(([True], keys[1:] != keys[:-1])))
    sums = np.add.reduceat(vals, bounds)
    keys = keys[bounds]
    keep = sums != 0
    return keys[keep], sums[keep]


def _join_dict(first, second):
    """Exact join on the middle element: first rows (x, y, m, c), second rows
    (m, y2, z, c); output {(x, y, y2, z): sum}."""
    by_m: dict = {}
    for x, y, m, c in first:
        by_m.setdefault(m, []).append((x, y, c))
    out: dict = {}
    for m, y2, z, c2 in second:
        for x, y, c1 in by_m.get(m, ()):
            key = (x, y, y2, z)
            v = out.get(key, Fraction(0)) + c1 * c2
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _sector_triple_compare(algebra, g, h, k, signed, cache):
    """Compare ((x y) z) and (x (y z)) as composed structure tensors over
    the sector triple (g, h, k); returns (equal, left join nonzero)."""

    def entries(p, q):
        key = (p.images, q.images)
        if key not in cache:
            cache[key] = sector_entries(algebra, p, q, signed)
        return cache[key]

    e_gh = entries(g, h)
    e_ghk = entries(g * h, k)
    e_hk = entries(h, k)
    e_g_hk = entries(g, h * k)

    dim = algebra.dim

    def size(p):
        return dim ** len(sector_partition(p))

    da, db, dk, dw = size(g), size(h), size(k), size(g * h * k)
    dm_left, dm_right = size(g * h), size(h * k)
    caps = da * db * dk * dw

    cols_gh = _int_columns(e_gh, (da, db, dm_left))
    cols_ghk = _int_columns(e_ghk, (dm_left, dk, dw))
    cols_hk = _int_columns(e_hk, (db, dk, dm_right))
    cols_g_hk = _int_columns(e_g_hk, (da, dm_right, dw))

    if None not in (cols_gh, cols_ghk, cols_hk, cols_g_hk):
        # left: (a, b, m) x (m, l, w) -> key (a, b, l, w)
        x1, y1, m1, v1 = cols_gh

        def pack_left(a, b, l, w):
            return ((a * db + b) * dk + l) * dw + w

        t1 = _join_numpy((x1, y1, m1, v1), cols_ghk, pack_left, caps)
        if t1 is not None:
            # right: (b, l, m) x (a, m, w) joined on m; swap second's columns
            # so the join sees (m, a, w).
            xb, yl, mr, vr = cols_hk
            xa, ym, zw, vv = cols_g_hk

            def pack_right(b, l, a, w):
                return ((a * db + b) * dk + l) * dw + w

            t2 = _join_numpy((xb, yl, mr, vr), (ym, xa, zw, vv), pack_right, caps)
            if t2 is not None:
                equal = (
                    len(t1[0]) == len(t2[0])
                    and np.array_equal(t1[0], t2[0])
                    and np.array_equal(t1[1], t2[1])
                )
                return equal, len(t1[0]) > 0

    t1 = _join_dict(e_gh, e_ghk)
    t2_raw = _join_dict(
        [(b, l, m, c) for b, l, m, c in e_hk],
        [(m, a, w, c) for a, m, w, c in e_g_hk],
    )
    t2 = {(a, b, l, w): c for (b, l, a, w), c in t2_raw.items()}
    return t1 == t2, bool(t1)


# -- associativity -----------------------------------------------------------------


def check_associativity(
    group,
    algebra,
    mode: str = "exhaustive",
    seed: int | None = None,
    samples: int = 1000,
    signed: bool = False,
    max_dim: int = DEFAULT_MAX_DIM,
) -> Certificate:
    """Certify (a b) c = a (b c) over basis triples.

    Exhaustive mode refuses rings larger than max_dim; below the plain
    triple bound it evaluates each triple through the public product, above
    it the composed-tensor engine compares sector structure tensors (the
    same triples, counted identically).  Sampled mode draws triples from
    random.Random(seed).
    """
    basis = ring_basis(group, algebra)
    dim = len(basis)
    name = "associativity_signed" if signed else "associativity"

    if mode == "sampled":
        rng = random.Random(seed)
        for _ in range(samples):
            triple = [basis[rng.randrange(dim)] for _ in range(3)]
            a, b, c = (_basis_class(group, algebra, e) for e in triple)
            lhs = multiply(multiply(a, b, signed), c, signed)
            rhs = multiply(a, multiply(b, c, signed), signed)
            if lhs != rhs:
                return Certificate(name, mode, False, samples, seed, _witness(algebra, triple))
        return Certificate(name, mode, True, samples, seed)

    if mode != "exhaustive":
        raise ValueError(f"unknown mode {mode!r}")
    if dim > max_dim:
        raise ValueError(f"ring dimension {dim} exceeds the exhaustive bound {max_dim}")

    count = dim**3
    if count <= PLAIN_TRIPLE_BOUND:
        classes = [_basis_class(group, algebra, e) for e in basis]
        table = {
            (i, j): multiply(a, b, signed)
            for i, a in enumerate(classes)
            for j, b in enumerate(classes)
        }
        for i, a in enumerate(classes):
            for j in range(dim):
                ab = table[i, j]
                for l, c in enumerate(classes):
                    if multiply(ab, c, signed) != multiply(a, table[j, l], signed):
                        return Certificate(
                            name, "exhaustive", False, count, None,
                            _witness(algebra, (basis[i], basis[j], basis[l])),
                            detail={"engine": "plain"},
                        )
        return Certificate(name, "exhaustive", True, count, detail={"engine": "plain"})

    cache: dict = {}
    for g in group.elements:
        for h in group.elements:
            for k in group.elements:
                equal, _ = _sector_triple_compare(algebra, g, h, k, signed, cache)
                if not equal:
                    return Certificate(
                        name, "exhaustive", False, count, None,
                        {"sectors": [str(g), str(h), str(k)]},
                        detail={"engine": "composed"},
                    )
    return Certificate(name, "exhaustive", True, count, detail={"engine": "composed"})


def check_kummer_associativity(n: int, rank: int = 4) -> Certificate:
    """Certify associativity of the division-point ring over all basis
    triples, for every torsion rank at once.

    The structure tensor of a sector pair factors as (orbifold tensor part)
    x (division counting part), and joins over the middle index factor the
    same way.  A sector triple is therefore associative exactly when the
    orbifold joins agree and, wherever they are not identically zero, the
    division joins agree as well.  Division weights multiply over the
    coordinates of a point, so rank one decides every rank.
    """
    from .kummer import division_count, m_of, surface_algebra

    def weight(p, q, x, y, z):
        # one coordinate of the normalized count used by kummer_multiply
        return division_count(p, q, (x,), (y,), (z,)) * Fraction(m_of(p * q), m_of([p, q]))

    group = symmetric_group(n)
    algebra = surface_algebra()
    dim = sum(
        m_of(g) ** rank * algebra.dim ** len(sector_partition(g)) for g in group.elements
    )
    count = dim**3
    cache: dict = {}
    for g in group.elements:
        for h in group.elements:
            gh = g * h
            for k in group.elements:
                equal, nonzero = _sector_triple_compare(algebra, g, h, k, False, cache)
                if not equal:
                    return Certificate(
                        "kummer_associativity", "exhaustive", False, count, None,
                        {"sectors": [str(g), str(h), str(k)], "part": "tensor"},
                    )
                if not nonzero:
                    continue
                hk = h * k
                ghk = gh * k
                for x in range(m_of(g)):
                    for y in range(m_of(h)):
                        for z in range(m_of(k)):
                            for w in range(m_of(ghk)):
                                lhs = sum(
                                    weight(g, h, x, y, z1) * weight(gh, k, z1, z, w)
                                    for z1 in range(m_of(gh))
                                )
                                rhs = sum(
                                    weight(h, k, y, z, z2) * weight(g, hk, x, z2, w)
                                    for z2 in range(m_of(hk))
                                )
                                if lhs != rhs:
                                    return Certificate(
                                        "kummer_associativity", "exhaustive", False,
                                        count, None,
                                        {
                                            "sectors": [str(g), str(h), str(k)],
                                            "part": "division",
                                            "points": [x, y, z, w],
                                        },
                                    )
    return Certificate("kummer_associativity", "exhaustive", True, count, detail={"rank": rank})


# -- skew commutativity --------------------------------------------------------------


def check_skew(group, algebra, seed: int = 0, pairs: int = 200) -> Certificate:
    """Invariant, parity-homogeneous alpha against arbitrary pure beta:
    alpha beta = (-1)^{|alpha| |beta|} beta alpha."""
    rng = random.Random(seed)
    basis = ring_basis(group, algebra)
    checked = 0
    while checked < pairs:
        g, key = basis[rng.randrange(len(basis))]
        alpha = symmetrize(OrbifoldClass.pure(group, algebra, g, key))
        even, odd = even_odd_split(alpha)
        halves = [h for h in (even, odd) if not h.is_zero()]
        if not halves:
            continue
        alpha = halves[rng.randrange(len(halves))]
        parity_a = 0 if even_odd_split(alpha)[1].is_zero() else 1
        h, bkey = basis[rng.randrange(len(basis))]
        beta = OrbifoldClass.pure(group, algebra, h, bkey)
        parity_b = sum(algebra.degrees[i] for i in bkey) & 1
        lhs = multiply(alpha, beta)
        rhs = multiply(beta, alpha)
        if parity_a and parity_b:
            rhs = rhs.scale(-1)
        if lhs != rhs:
            witness = _witness(algebra, [(g, key), (h, bkey)])
            return Certificate("skew_commutativity", "sampled", False, checked + 1, seed, witness)
        checked += 1
    return Certificate("skew_commutativity", "sampled", True, pairs, seed)


# -- pairing ----------------------------------------------------------------------


def check_pairing(group, algebra) -> Certificate:
    """Certify the duality pairing.  Off-diagonal sector blocks vanish
    structurally: a g-term times an h-term is supported at gh, and the
    integral reads the identity component, so only h = g^{-1} contributes.
    Each diagonal block <(.)_g, (.)_{g^{-1}}> restricts to the tensor
    pairing on A^{(x) O(g)}, whose entry at (a, t) vanishes unless every
    factor pairing <a_i, t_i> is nonzero; rows are enumerated over exactly
    those candidate columns and evaluated through the full Koszul pairing.

    Blocks whose rows each hold a single nonzero entry are certified by
    exhibiting the column bijection; others fall back to exact dense rank.
    """
    gram = algebra.gram()
    candidates_of = [
        [t for t in range(algebra.dim) if gram[i][t] != 0] for i in range(algebra.dim)
    ]
    blocks = 0
    for g in group.elements:
        part = sector_partition(g)
        k = len(part)
        rows = {}
        single = True
        for key in itertools.product(range(algebra.dim), repeat=k):
            row = {}
            for tkey in itertools.product(*[candidates_of[i] for i in key]):
                value = pair_tensors(
                    algebra, TensorClass.pure(part, key), TensorClass.pure(part, tkey)
                )
                if value:
                    row[tkey] = value
            if not row:
                return Certificate(
                    "pairing", "structural", False, blocks, None,
                    {"sector": str(g), "zero_row": [algebra.labels[i] for i in key]},
                )
            if len(row) > 1:
                single = False
            rows[key] = row
        if single:
            images = [next(iter(r)) for r in rows.values()]
            if len(set(images)) != len(images):
                return Certificate(
                    "pairing", "signed_permutation", False, blocks, None,
                    {"sector": str(g), "reason": "column collision"},
                )
        else:
            if len(rows) > DENSE_RANK_BOUND:
                raise ValueError("block too large for dense rank certification")
            index = {key: i for i, key in enumerate(rows)}
            dense = [[Fraction(0)] * len(rows) for _ in rows]
            for key, row in rows.items():
                for tkey, value in row.items():
                    dense[index[key]][index[tkey]] = value
            if _rank(dense) != len(rows):
                return Certificate(
                    "pairing", "exact_rank", False, blocks, None, {"sector": str(g)}
                )
        blocks += 1
    total = sum(algebra.dim ** len(sector_partition(g)) for g in group.elements)
    return Certificate("pairing", "block_antidiagonal", True, total)


def check_inverse_obstruction(n: int) -> Certificate:
    """Every g in S_n has unit obstruction against its inverse: all graph
    defects of (g, g^{-1}) vanish.  Checked exhaustively."""
    group = symmetric_group(n)
    count = 0
    for g in group.elements:
        ginv = g.inverse()
        for block in pair_partition(g, ginv).blocks:
            count += 1
            if graph_defect(g, ginv, block) != 0:
                return Certificate(
                    "inverse_obstruction", "exhaustive", False, count, None,
                    {"perm": str(g), "orbit": list(block)},
                )
    return Certificate("inverse_obstruction", "exhaustive", True, count)
