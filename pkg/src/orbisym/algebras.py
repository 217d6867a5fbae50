"""Built-in model algebras and the algebra-spec file format.

mock2    two classes 1, p (a four-sphere); the smallest algebra whose
         twisted products see a nontrivial obstruction, Euler class 2p
k3       1, twenty-two middle classes, and the point class; the intersection
         form on the middle is a configurable full-rank symmetric matrix
         (identity by default; only dimensions enter the frozen expectations)
abelian  exterior algebra on four degree-1 generators with zero Euler class,
         the cohomology of a 2-torus
trivial  the rationals in degree zero (d = 0)

Algebra spec files are JSON with zero-based indices and rationals written
"num/den"; serialization is canonical, so load(dump(A)) round-trips exactly.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction

from .frobenius import FrobeniusAlgebra, frac


def mock2_algebra() -> FrobeniusAlgebra:
    # The Euler class must be the diagonal self-intersection m(D(1)) = 2p
    # (chi = 2): twisted products are associative only for that value.
    basis = [("1", 0), ("p", 4)]
    struct = [
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (1, 0, 1, 1),
    ]
    return FrobeniusAlgebra(
        name="mock2",
        d=2,
        basis=basis,
        unit=[1, 0],
        struct=struct,
        integral=[0, 1],
        euler=[0, 2],
    )


def k3_algebra(form=None) -> FrobeniusAlgebra:
    """K3 cohomology with a configurable middle intersection form."""
    if form is None:
        form = [[1 if i == j else 0 for j in range(22)] for i in range(22)]
    if len(form) != 22 or any(len(row) != 22 for row in form):
        raise ValueError("form must be 22x22")
    form = [[frac(v) for v in row] for row in form]
    for i in range(22):
        for j in range(22):
            if form[i][j] != form[j][i]:
                raise ValueError("form must be symmetric")
    basis = [("1", 0)] + [(f"a{i}", 2) for i in range(1, 23)] + [("p", 4)]
    point = 23
    struct = [(0, 0, 0, 1), (0, point, point, 1), (point, 0, point, 1)]
    for i in range(22):
        struct.append((0, i + 1, i + 1, 1))
        struct.append((i + 1, 0, i + 1, 1))
        for j in range(22):
            if form[i][j]:
                struct.append((i + 1, j + 1, point, form[i][j]))
    integral = [0] * 24
    integral[point] = 1
    euler = [0] * 24
    euler[point] = 24
    return FrobeniusAlgebra(
        name="k3", d=2, basis=basis, unit=[1] + [0] * 23,
        struct=struct, integral=integral, euler=euler,
    )


def abelian_algebra() -> FrobeniusAlgebra:
    """Exterior algebra on x1..x4 in degree 1; Euler class zero."""
    subsets = [tuple(s) for r in range(5) for s in itertools.combinations(range(1, 5), r)]
    index = {s: i for i, s in enumerate(subsets)}
    labels = ["1"] + ["".join(f"x{i}" for i in s) for s in subsets[1:]]
    basis = list(zip(labels, (len(s) for s in subsets)))
    struct = []
    for s, i in index.items():
        for t, j in index.items():
            if set(s) & set(t):
                continue
            inversions = sum(1 for a in s for b in t if a > b)
            sign = -1 if inversions & 1 else 1
            struct.append((i, j, index[tuple(sorted(s + t))], sign))
    integral = [0] * 16
    integral[index[(1, 2, 3, 4)]] = 1
    return FrobeniusAlgebra(
        name="abelian", d=2, basis=basis, unit=[1] + [0] * 15,
        struct=struct, integral=integral, euler=[0] * 16,
    )


def trivial_algebra() -> FrobeniusAlgebra:
    """The rationals concentrated in degree zero (a point, d = 0)."""
    return FrobeniusAlgebra(
        name="trivial", d=0, basis=[("1", 0)], unit=[1],
        struct=[(0, 0, 0, 1)], integral=[1], euler=[1],
    )


_BUILTINS = {
    "mock2": mock2_algebra,
    "k3": k3_algebra,
    "abelian": abelian_algebra,
    "trivial": trivial_algebra,
}
_cache: dict[str, FrobeniusAlgebra] = {}


def builtin_names():
    return tuple(sorted(_BUILTINS))


def builtin_algebra(name: str) -> FrobeniusAlgebra:
    if name not in _BUILTINS:
        raise ValueError(f"unknown builtin algebra {name!r}")
    if name not in _cache:
        _cache[name] = _BUILTINS[name]()
    return _cache[name]


def load_algebra(name_or_path: str) -> FrobeniusAlgebra:
    """A builtin by name, or a JSON spec file by path."""
    if name_or_path in _BUILTINS:
        return builtin_algebra(name_or_path)
    with open(name_or_path, "r", encoding="utf-8") as fh:
        return FrobeniusAlgebra.from_json_dict(json.load(fh))


def dump_algebra(algebra: FrobeniusAlgebra, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(algebra.to_json_dict(), fh, indent=1, sort_keys=True)
        fh.write("\n")
