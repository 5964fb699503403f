"""Which words are worth feeding to homogeneity?

Counts symmetry classes of short words, then scores a few families a*b^k by
the usefulness ratio L(g) / (L(g^n) / n): near 1 means taking powers gains
nothing.
"""

from freelength import COMMUTATOR, Word, enumerate_classes, usefulness_ratio
from freelength.exploration import family_scan, format_report

if __name__ == "__main__":
    for n in range(1, 7):
        classes = enumerate_classes(n)
        print(f"length {n}: {len(classes):>3} classes  e.g. {', '.join(str(c.representative) for c in classes[:4])}")

    print(f"\nrho(abAB, 17) = {usefulness_ratio(COMMUTATOR, 17):.4f}")
    print(f"rho(abb, 10)  = {usefulness_ratio(Word('abb'), 10):.4f}")

    a = Word("a")
    families = [(a, Word(b)) for b in ("b", "ab", "aab", "abb")] + [(a, COMMUTATOR)]
    print()
    print(format_report(family_scan(families, (2, 4, 6), (2, 4, 6))), end="")
