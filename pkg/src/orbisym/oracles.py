"""Independent verification routes.

Everything here recomputes a quantity the main engine produces, by a
different method: the Hilbert-scheme Betti generating function against the
invariant-dimension count, Koszul-signed character traces against explicit
symmetrization, and the iterated-coproduct adjoint against the Gram-solve
pushforward.  Tests freeze the agreements; nothing in this module is used
by the paths it verifies.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb

from .frobenius import TensorClass, _grouping, reorder_sign
from .orbifold import sector_partition
from .permgroup import min_transpositions
from .poincare import PoincarePolynomial


def goettsche_series(betti, n_max: int):
    """Betti polynomials of the Hilbert schemes of a surface with Betti
    numbers b0..b4, for 0 <= n <= n_max, in doubled degrees.

    Expands prod_{m>=1} prod_{i=0..4} (1 - (-1)^i t^{2m-2+i} q^m)^{-(-1)^i b_i}
    with exact integer arithmetic truncated at q^n_max.  Odd-i factors are
    binomial (1 + t^e q^m)^{b_i}; even-i factors are geometric.
    """
    betti = [int(b) for b in betti]
    if len(betti) != 5:
        raise ValueError("need exactly five Betti numbers")
    if n_max > 10:
        raise ValueError("n_max larger than 10 is not supported")
    series = [{0: 1}] + [{} for _ in range(n_max)]
    for m in range(1, n_max + 1):
        for i, b in enumerate(betti):
            if b == 0:
                continue
            exponent = 2 * (2 * m - 2 + i)  # doubled t-degree
            terms = {}
            j = 0
            while j * m <= n_max:
                if i % 2:
                    if j > b:
                        break
                    terms[j] = comb(b, j)
                else:
                    terms[j] = comb(b - 1 + j, j)
                j += 1
            new = [{} for _ in range(n_max + 1)]
            for n in range(n_max + 1):
                poly = series[n]
                if not poly:
                    continue
                for j, c in terms.items():
                    target = n + j * m
                    if target > n_max:
                        break
                    bucket = new[target]
                    shift = j * exponent
                    for deg, v in poly.items():
                        bucket[deg + shift] = bucket.get(deg + shift, 0) + v * c
            series = new
    return [PoincarePolynomial(coeffs) for coeffs in series]


# -- invariant dimensions by traces ------------------------------------------------


def _cycle_lengths(positions):
    """Cycle lengths of a permutation given as a position map p -> positions[p]."""
    seen = [False] * len(positions)
    out = []
    for start in range(len(positions)):
        if seen[start]:
            continue
        length = 0
        p = start
        while not seen[p]:
            seen[p] = True
            p = positions[p]
            length += 1
        out.append(length)
    return out


def invariant_dims_by_trace(group, algebra) -> dict[int, int]:
    """Invariant dimensions per doubled orbifold degree from the character:
    dim inv = (1/|G|) sum_h tr(h).  Only commuting pairs contribute, and on
    a fixed sector the trace factors over the cycles of the block
    permutation; a length-L cycle contributes sum_b (-1)^{(L-1)|b|} t^{L deg b}
    since only cycle-constant tensor monomials hit the diagonal."""
    degrees = algebra.degrees
    cycle_poly_cache: dict[int, dict[int, int]] = {}

    def cycle_poly(length):
        if length not in cycle_poly_cache:
            poly: dict[int, int] = {}
            for b, deg in enumerate(degrees):
                sign = -1 if (length - 1) & 1 and deg & 1 else 1
                key = 2 * length * deg
                poly[key] = poly.get(key, 0) + sign
            cycle_poly_cache[length] = {k: v for k, v in poly.items() if v}
        return cycle_poly_cache[length]

    total: dict[int, Fraction] = {}
    d = algebra.d
    for g in group.elements:
        part = sector_partition(g)
        shift = 2 * d * min_transpositions(g)
        for h in group.centralizer(g):
            positions = [part.block_of(h(block[0])) for block in part.blocks]
            trace = {0: 1}
            for length in _cycle_lengths(positions):
                poly = cycle_poly(length)
                nxt: dict[int, int] = {}
                for da, ca in trace.items():
                    for db, cb in poly.items():
                        nxt[da + db] = nxt.get(da + db, 0) + ca * cb
                trace = nxt
            for deg, c in trace.items():
                key = deg + shift
                total[key] = total.get(key, Fraction(0)) + c
    order = group.order
    out = {}
    for deg, value in total.items():
        value = value / order
        if value:
            if value.denominator != 1 or value < 0:
                raise AssertionError(f"trace average is not a nonnegative integer at {deg}")
            out[deg] = int(value)
    return out


def invariant_dim_two_ways(group, algebra, degree: int):
    """(symmetrization count, trace average) for one doubled degree."""
    from .orbifold import invariant_dims

    return (
        invariant_dims(group, algebra).get(degree, 0),
        invariant_dims_by_trace(group, algebra).get(degree, 0),
    )


# -- pushforward by iterated coproduct ----------------------------------------------


def _coproduct(algebra):
    """Basis coproduct D(u) = sum_i (-1)^{|b_i|} (u b_i) (x) b^i with the
    right dual basis b^i = sum_l Ginv[l][i] b_l, as {u: {(k, l): coeff}}."""
    ginv = algebra.gram_inverse()
    if ginv is None:
        raise ValueError("pushforward undefined")
    dual = [
        {l: ginv[l][i] for l in range(algebra.dim) if ginv[l][i] != 0}
        for i in range(algebra.dim)
    ]
    table = []
    for u in range(algebra.dim):
        terms: dict[tuple[int, int], Fraction] = {}
        for i in range(algebra.dim):
            sign = -1 if algebra.degrees[i] & 1 else 1
            for k, ck in algebra.mul_basis(u, i).items():
                for l, cl in dual[i].items():
                    v = terms.get((k, l), Fraction(0)) + sign * ck * cl
                    if v:
                        terms[k, l] = v
                    else:
                        terms.pop((k, l), None)
        table.append(terms)
    return table


def _iterated_coproduct(algebra, u: int, count: int):
    """count-fold tuples of the coproduct iterated on the first slot."""
    if count < 1:
        raise ValueError("fiber must be nonempty")
    table = _coproduct(algebra) if count > 1 else None
    terms = {(u,): Fraction(1)}
    for _ in range(count - 1):
        nxt: dict[tuple, Fraction] = {}
        for key, c in terms.items():
            for (k, l), ck in table[key[0]].items():
                nk = (k, l) + key[1:]
                v = nxt.get(nk, Fraction(0)) + c * ck
                if v:
                    nxt[nk] = v
                else:
                    nxt.pop(nk, None)
        terms = nxt
    return terms


def pushforward_bruteforce(algebra, y: TensorClass, fine) -> TensorClass:
    """Adjoint of pullback computed through the coproduct instead of the
    Gram solve; same fiber assembly and scatter as the main path."""
    coarse = y.partition
    fibers, grouped, _ = _grouping(fine, coarse)
    out: dict[tuple[int, ...], Fraction] = {}
    for key, c in y.terms.items():
        pieces = [_iterated_coproduct(algebra, key[q], len(fibers[q])) for q in range(len(key))]
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
            new_key = [0] * len(grouped)
            positions = [0] * len(grouped)
            for slot, p in enumerate(grouped):
                new_key[p] = gkey[slot]
                positions[slot] = p
            sign = reorder_sign([algebra.parity(i) for i in gkey], positions)
            tk = tuple(new_key)
            v = out.get(tk, Fraction(0)) + sign * cc
            if v:
                out[tk] = v
            elif tk in out:
                del out[tk]
    return TensorClass(fine, out)
