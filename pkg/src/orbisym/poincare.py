"""Poincare polynomials in doubled degrees, and invariant dimensions of
signed permutation actions.

Degrees are stored doubled so that half-integer orbifold degrees (odd d)
stay integers.  Coefficients are plain ints.
"""

from __future__ import annotations


class PoincarePolynomial:
    """Finitely supported map doubled-degree -> dimension."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for deg, c in (coeffs or {}).items():
            c = int(c)
            if c:
                clean[int(deg)] = clean.get(int(deg), 0) + c
        self.coeffs = {d: c for d, c in clean.items() if c}

    def __getitem__(self, deg: int) -> int:
        return self.coeffs.get(deg, 0)

    def __eq__(self, other):
        return isinstance(other, PoincarePolynomial) and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return PoincarePolynomial(out)

    def __mul__(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        out: dict[int, int] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return PoincarePolynomial(out)

    def shifted(self, doubled_shift: int) -> "PoincarePolynomial":
        """Subtract a doubled amount from every degree."""
        if not doubled_shift:
            return self
        return PoincarePolynomial({d - doubled_shift: c for d, c in self.coeffs.items()})

    def total(self) -> int:
        return sum(self.coeffs.values())

    def degrees(self):
        return sorted(self.coeffs)

    def divide_exact(self, other: "PoincarePolynomial") -> "PoincarePolynomial":
        """Exact quotient by another polynomial; error on any remainder."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return PoincarePolynomial({})
        rem = dict(self.coeffs)
        lead = min(other.coeffs)
        lead_c = other.coeffs[lead]
        # an exact quotient cannot reach past the top degrees; crossing the
        # cap is the low-end division signature of a nonzero remainder
        cap = max(self.coeffs) - max(other.coeffs)
        out: dict[int, int] = {}
        while rem:
            low = min(rem)
            q, r = divmod(rem[low], lead_c)
            if r or low - lead > cap:
                raise ValueError("division leaves a remainder")
            out[low - lead] = q
            for d, c in other.coeffs.items():
                v = rem.get(low - lead + d, 0) - q * c
                if v:
                    rem[low - lead + d] = v
                else:
                    rem.pop(low - lead + d, None)
        return PoincarePolynomial(out)

    def to_json_dict(self):
        return {str(d): self.coeffs[d] for d in sorted(self.coeffs)}

    def __repr__(self):
        return f"PoincarePolynomial({dict(sorted(self.coeffs.items()))})"


def invariant_dimensions(basis, act, generators) -> dict[int, int]:
    """Dimension of the invariant subspace per degree, for a group acting on
    a basis by signed permutations.

    basis yields (key, degree) pairs; act(s, key) -> (new_key, sign) for a
    generator s, with sign in {+1, -1}.  The symmetrized vectors of two basis
    keys in one orbit coincide up to sign, and those of different orbits have
    disjoint support, so row reduction is implicit: the invariant dimension
    in each degree equals the number of orbits carrying a consistent sign
    labeling (no group word fixes a key while flipping its sign).  Conflicts
    are detected on generator edges, which suffices since every element is a
    word in the generators.
    """
    dims: dict[int, int] = {}
    seen: set = set()
    for key, degree in basis:
        if key in seen:
            continue
        sign_of = {key: 1}
        queue = [key]
        consistent = True
        while queue:
            k = queue.pop()
            for s in generators:
                nk, sign = act(s, k)
                want = sign_of[k] * sign
                have = sign_of.get(nk)
                if have is None:
                    sign_of[nk] = want
                    queue.append(nk)
                elif have != want:
                    consistent = False
        seen.update(sign_of)
        if consistent:
            dims[degree] = dims.get(degree, 0) + 1
    return dims
