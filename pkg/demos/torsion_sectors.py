"""Division points and exceptional classes.

Sectors of the quotient of a torus power carry torsion data: each
component is indexed by a division point of the subtorus the sector
fixes.  The exceptional classes sitting over 2-torsion points multiply
like disjoint (-2)-curves: the square of each deposits a sixteenth of
the diagonal class, and distinct points never meet.
"""

from orbisym import KummerClass, kummer_multiply, kummer_poincare, kummer_poincare_reduced, symmetric_group
from orbisym.permgroup import Permutation


def main():
    group = symmetric_group(2)
    swap = Permutation.parse("(1 2)", 2)

    ex = KummerClass.pure(group, 4, swap, (0, 0, 0, 0), (0,))
    ey = KummerClass.pure(group, 4, swap, (1, 0, 0, 0), (0,))

    square = kummer_multiply(ex, ex)
    print("E_x squared lands in the untwisted sector, degrees", square.doubled_degrees())
    some = sorted(square.components[next(iter(square.components))].terms.items())[:4]
    print("first few diagonal terms (all with coefficient 1/16 up to sign):")
    for key, coeff in some:
        print(" ", key, coeff)
    print("E_x E_y for distinct torsion points x, y:", kummer_multiply(ex, ey))
    print()

    full = kummer_poincare(2)
    print("rank-4 invariants at n = 2:", dict(sorted(full.coeffs.items())))
    print("total:", full.total())
    print("after dividing off the surface factor:", dict(sorted(kummer_poincare_reduced(2).coeffs.items())))


if __name__ == "__main__":
    main()
