"""Betti numbers of symmetric powers, two ways.

The ring engine counts invariant classes sector by sector; the product
formula expands an infinite product from the five Betti numbers of the
surface.  The two columns must agree line by line.
"""

from orbisym import builtin_algebra, goettsche_series, orbifold_poincare, symmetric_group

K3_BETTI = [1, 0, 22, 0, 1]


def main():
    algebra = builtin_algebra("k3")
    series = goettsche_series(K3_BETTI, 3)
    for n in (1, 2, 3):
        engine = orbifold_poincare(symmetric_group(n), algebra)
        formula = series[n]
        print(f"n = {n}  (total dimension {engine.total()})")
        for degree in engine.degrees():
            print(f"  degree {degree:3d}: ring {engine[degree]:5d}   formula {formula[degree]:5d}")
        assert engine == formula
        print()
    print("ring dimensions match the product formula for n = 1, 2, 3")


if __name__ == "__main__":
    main()
