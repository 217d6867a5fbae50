"""Run the ring engine on an algebra defined from scratch.

The input format is a plain JSON dict: a graded basis, the structure
constants, and the integral.  The validator checks every Frobenius
axiom and reports a witness when one fails, so a typo in a structure
constant is caught before any ring computation runs.
"""

import json
import tempfile

from orbisym import load_algebra, orbifold_poincare, symmetric_group

# a rational surface: 1, one middle class h with h^2 = p, and the point
SURFACE = {
    "name": "demo-surface",
    "d": 2,
    "basis": [
        {"label": "1", "degree": 0},
        {"label": "h", "degree": 2},
        {"label": "p", "degree": 4},
    ],
    "unit": ["1/1", "0/1", "0/1"],
    "euler": ["0/1", "0/1", "3/1"],
    "integral": ["0/1", "0/1", "1/1"],
    "struct": [
        [0, 0, 0, "1/1"], [0, 1, 1, "1/1"], [0, 2, 2, "1/1"],
        [1, 0, 1, "1/1"], [1, 1, 2, "1/1"],
        [2, 0, 2, "1/1"],
    ],
}


def main():
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        json.dump(SURFACE, fh)
        path = fh.name
    algebra = load_algebra(path)
    report = algebra.validate()
    print("axioms satisfied:", report.ok)
    for n in (1, 2, 3):
        poly = orbifold_poincare(symmetric_group(n), algebra)
        print(f"n = {n}: {dict(sorted(poly.coeffs.items()))}  total {poly.total()}")


if __name__ == "__main__":
    main()
