"""A product of twisted sectors, worked by hand.

Two transposition classes at n = 3 multiply into the 3-cycle sector,
and a third transposition lands the product back in the untwisted
sector, picking up the point class.  The sign-twisted product differs
exactly when the degree-shift parity says it should.
"""

from orbisym import OrbifoldClass, builtin_algebra, multiply, symmetric_group
from orbisym.permgroup import Permutation


def show(label, cls):
    print(f"{label}:")
    for g in sorted(cls.components, key=lambda p: p.images):
        print(f"  sector {g}: {cls.components[g].terms}")


def main():
    group = symmetric_group(3)
    algebra = builtin_algebra("mock2")
    t12 = OrbifoldClass.pure(group, algebra, Permutation.parse("(1 2)", 3), (0, 0))
    t23 = OrbifoldClass.pure(group, algebra, Permutation.parse("(2 3)", 3), (0, 0))

    ab = multiply(t12, t23)
    show("(1 2) times (2 3)", ab)
    print()

    abc = multiply(ab, t12)
    show("then times (1 2) again", abc)
    print()

    signed = multiply(ab, t12, signed=True)
    print("sign-twisted variant equal to the plain one:", signed == abc)
    flipped = multiply(t23, t12, signed=True)
    print("reversed sign-twisted product:", flipped == multiply(t23, t12))

    square = multiply(t12, t12)
    show("a transposition squared (unit obstruction, diagonal classes)", square)


if __name__ == "__main__":
    main()
