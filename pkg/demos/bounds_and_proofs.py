"""Bounding single words and reading, saving and checking their proofs."""

from fractions import Fraction

from freelength import COMMUTATOR, Word, bound, power, with_elementary_bounds
from freelength.proofs import deserialize, render_text, serialize, verify

if __name__ == "__main__":
    value, proof = bound(Word("ABabAB"))
    print(f"|ABabAB| <= {value}")
    for line in render_text(proof, "rational"):
        print("   ", line)

    # the machine-readable form keeps the conjugators the lines leave out
    text = serialize(proof)
    print()
    print(text)
    print("verifier:", "ok" if verify(deserialize(text)) else "rejected")

    # with |abAB| <= 1/2 assumed, squares of the commutator get cheaper,
    # but the resulting proof only stands together with that assumption
    ctx = with_elementary_bounds([(COMMUTATOR, Fraction(1, 2))])
    c2 = power(COMMUTATOR, 2)
    value, proof = bound(c2, ctx)
    print(f"\n|{c2}| <= {value} with |abAB| <= 1/2 (plain engine: {bound(c2)[0]})")
    print("without the assumption:", verify(proof).reason)
    print("with it:", verify(proof, [(COMMUTATOR, Fraction(1, 2))]).certified)
