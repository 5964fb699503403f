import re
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import words
from freelength.bounds import bound, with_elementary_bounds
from freelength.freegroup import COMMUTATOR, Word, power
from freelength.proofs import (
    EMPTY,
    Conjugacy,
    ElementaryAxiom,
    NormalizedAxiom,
    PowerJustification,
    ProofParseError,
    ProofStructureError,
    Triangle,
    conjugacy,
    count_nodes,
    deserialize,
    elementary,
    evaluate,
    from_power,
    normalized,
    render_text,
    serialize,
    triangle,
)

A, B = Word("a"), Word("b")

# |abAB| <= 2 from |a| <= 1 and |bAB| <= |A| <= 1
SMALL = triangle(normalized("a"), conjugacy(B, normalized("A")))

_STATEMENT = re.compile(r"\|[abAB]*\| <= [0-9./e+-]+")


def test_small_tree_shape():
    assert SMALL.subject == COMMUTATOR and SMALL.value == 2.0
    assert isinstance(SMALL.second, Conjugacy)
    assert SMALL.second.subject == Word("bAB")
    assert count_nodes(SMALL) == 4


def test_render_small_tree_rational():
    assert render_text(SMALL, "rational") == [
        "|a| <= 1",
        "|A| <= 1",
        "|bAB| <= 1 using |A| <= 1",
        "|abAB| <= 2 using |a| <= 1 and |bAB| <= 1",
    ]


def test_render_float_and_empty():
    assert render_text(EMPTY, "rational") == ["|| <= 0"]
    assert render_text(normalized("B")) == ["|B| <= 1.0"]


def test_render_power_line():
    p = from_power(COMMUTATOR, 2, bound(power(COMMUTATOR, 2))[1])
    assert p.value == 2.0
    assert render_text(p, "rational")[-1] == "|abAB| <= 2 using |abABabAB| <= 4 by taking 2th power"


def test_evaluate_modes():
    assert evaluate(normalized("a"), "rational") == Fraction(1)
    assert evaluate(SMALL, "rational") == 2
    pj = from_power(COMMUTATOR, 17, bound(power(COMMUTATOR, 17))[1])
    assert evaluate(pj, "rational") == Fraction(bound(power(COMMUTATOR, 17))[0]) / 17
    with pytest.raises(ValueError):
        evaluate(SMALL, "decimal")


def test_evaluate_uses_assumed_value_exactly():
    assert evaluate(elementary(COMMUTATOR, 0.1), "rational") == Fraction(0.1)


def test_structure_errors():
    with pytest.raises(ProofStructureError):
        evaluate(NormalizedAxiom(Word("ab")))
    bad = ElementaryAxiom(A, 1.0, PowerJustification(A, 0, normalized("a")))
    with pytest.raises(ProofStructureError):
        evaluate(bad)
    with pytest.raises(ValueError):
        from_power(A, 2, normalized("a"))


def test_headline_rational_value(headline):
    value, proof = headline
    assert evaluate(proof, "rational") == Fraction(328, 405)
    assert evaluate(proof) == value


def test_headline_rendering(headline):
    _, proof = headline
    for mode in ("float", "rational"):
        lines = render_text(proof, mode)
        assert 100 <= len(lines) <= 300
        heads = [line.split(" using ", 1)[0] for line in lines]
        assert len(set(heads)) == len(heads)
        seen: set[str] = set()
        for line, head in zip(lines, heads):
            refs = _STATEMENT.findall(line)[1:]
            assert all(r in seen for r in refs), line
            seen.add(head)
    assert lines[-1].startswith("|abAB| <= 328/405 using ")


def test_headline_is_a_dag_with_shared_subtrees(headline):
    _, proof = headline
    assert count_nodes(proof) < count_nodes(proof, expanded=True)


def test_serialize_small_tree():
    text = serialize(SMALL)
    assert text == (
        "bound: |abAB| <= 2.0\n"
        "proof: triangle-inequality\n"
        "first:\n"
        "  bound: |a| <= 1.0\n"
        "  proof: length-is-normalized\n"
        "second:\n"
        "  bound: |bAB| <= 1.0\n"
        "  proof: conjugacy-invariance\n"
        "  conjugated-by: b\n"
        "  base:\n"
        "    bound: |A| <= 1.0\n"
        "    proof: length-is-normalized\n"
    )
    assert deserialize(text) == SMALL


def test_round_trip_headline(headline):
    _, proof = headline
    text = serialize(proof)
    back = deserialize(text)
    assert back == proof
    assert serialize(back) == text
    assert evaluate(back, "rational") == Fraction(328, 405)


def test_round_trip_rationals_and_assumptions():
    tree = Triangle(Word("aab"), Fraction(5, 3), elementary(Word("aa"), Fraction(2, 3)), NormalizedAxiom(B, 1))
    back = deserialize(serialize(tree))
    assert back == tree
    assert back.value == Fraction(5, 3) and not isinstance(back.value, float)


def test_empty_conjugator_round_trip():
    tree = Conjugacy(A, 1.0, Word(""), normalized("a"))
    assert deserialize(serialize(tree)) == tree


@given(words)
@settings(max_examples=40)
def test_round_trip_engine_proofs(g):
    ctx = with_elementary_bounds([(COMMUTATOR, 0.75)])
    _, proof = bound(g, ctx)
    assert deserialize(serialize(proof)) == proof


@given(words)
@settings(max_examples=40)
def test_float_and_rational_agree(g):
    _, proof = bound(power(g, 3))
    f, q = evaluate(proof, "float"), evaluate(proof, "rational")
    assert abs(f - float(q)) <= 1e-9 * max(1.0, abs(f))


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("bound: |a| <= 1.0\n proof: length-is-normalized\n", 2),
        ("bound: |a| <= 1.0\nproof: length-is-normalized\nfirst:\nbound: |a| <= 1\n", 4),
        ("bound: |a| <= 1.0\nproof: wishful\n", 2),
        ("bound: |ax| <= 1.0\nproof: length-is-normalized\n", 1),
        ("bound: |a| <= 1.0\nproof: length-is-normalized\nexponent: 3\n", 3),
        ("bound: |a| <= one\nproof: length-is-normalized\n", 1),
        ("", 1),
    ],
)
def test_malformed_input_names_the_line(text, lineno):
    with pytest.raises(ProofParseError) as info:
        deserialize(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_missing_children_rejected():
    with pytest.raises(ProofParseError):
        deserialize("bound: |ab| <= 2.0\nproof: triangle-inequality\nfirst:\n  bound: |a| <= 1.0\n  proof: length-is-normalized\n")
