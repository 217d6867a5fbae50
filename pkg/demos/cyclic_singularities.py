"""Twisted sectors of a cyclic quotient against the resolution lattice.

For the order-two quotient the single twisted class matches the
exceptional curve after rescaling by 2 and flipping the obstruction
sign.  From order three on, twisted classes square to zero while the
resolution lattice is negative definite, so no rescaling can match
them; the verdict carries the leading minors as the certificate.
"""

from orbisym.rdp import orbifold_gram, rescaling_obstruction, resolution_gram


def main():
    for n in (1, 2, 3, 6):
        print(f"n = {n}")
        print("  twisted gram:   ", [[str(v) for v in row] for row in orbifold_gram(n)])
        print("  resolution gram:", resolution_gram(n))
        verdict = rescaling_obstruction(n)
        if verdict["matched"]:
            print("  matched:", verdict["check"])
        else:
            print(
                "  obstructed: isotropic classes",
                verdict["isotropic_classes"],
                "against leading minors",
                verdict["leading_minors"],
            )
        print()


if __name__ == "__main__":
    main()
