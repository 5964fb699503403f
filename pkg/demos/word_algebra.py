"""Reduced words in F(a, b): products, inverses, powers and cyclic cores.

Capital letters are inverses, so ``A`` is a^-1 and ``abAB`` is the commutator.
"""

from freelength import COMMUTATOR, Word, concat, conjugate, cyclically_reduce, invert, power


def show(label: str, w: Word) -> None:
    print(f"{label:<28} {str(w) or '(e)':<16} length {len(w)}")


if __name__ == "__main__":
    # input is reduced as it is read
    show("abBabA", Word("abBabA"))

    u, v = Word("ab"), Word("BA")
    show("ab * BA", concat(u, v))
    show("inverse of abAB", invert(COMMUTATOR))
    show("(abAB)^3", power(COMMUTATOR, 3))

    # conjugating changes the word but not its cyclic core
    g = conjugate(COMMUTATOR, Word("bb"))
    show("bb (abAB) BB", g)
    show("cyclic core", cyclically_reduce(g))

    # a*(abAB)^k, the family whose powers drive the commutator bound down
    for k in (1, 2, 6):
        show(f"a(abAB)^{k}", concat(Word("a"), power(COMMUTATOR, k)))
