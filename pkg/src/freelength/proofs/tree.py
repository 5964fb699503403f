"""Proof certificate nodes and bottom-up evaluation.

Every node records the statement it proves, ``|subject| <= value``.  The
engine builds these with the helper constructors below, which compute the
statement from the children; a deserialized tree keeps whatever statement
was written down, and only :func:`freelength.proofs.verify` decides whether
it follows.

Trees coming out of the engine share subtrees heavily (the memo hands out
the same proof object many times), so all traversals here are iterative and
visit each distinct node object once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Literal, Optional, Union

from ..freegroup import IDENTITY, Letter, Word, concat, conjugate, power

Number = Union[float, int, Fraction]
Mode = Literal["float", "rational"]


class ProofStructureError(ValueError):
    """A node breaks a structural invariant of its kind."""

    def __init__(self, node: "ProofTree", message: str):
        self.node = node
        super().__init__(f"{message} (at |{node.subject}| <= {node.value!r})")


class _Node:
    __slots__ = ()

    def children(self) -> tuple["ProofTree", ...]:
        return ()

    def __eq__(self, other):
        if not isinstance(other, _Node):
            return NotImplemented
        return structurally_equal(self, other)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True, eq=False)
class EmptyWordAxiom(_Node):
    subject: Word = IDENTITY
    value: Number = 0.0


@dataclass(frozen=True, eq=False)
class NormalizedAxiom(_Node):
    subject: Word
    value: Number = 1.0

    @property
    def letter(self) -> Letter:
        return self.subject[0]


@dataclass(frozen=True, eq=False)
class PowerJustification:
    """``|base| <= |base^exponent| / exponent``, with a proof for the power."""

    base: Word
    exponent: int
    proof: "ProofTree"


@dataclass(frozen=True, eq=False)
class ElementaryAxiom(_Node):
    subject: Word
    value: Number
    origin: Optional[PowerJustification] = None

    def children(self):
        return () if self.origin is None else (self.origin.proof,)


@dataclass(frozen=True, eq=False)
class Triangle(_Node):
    subject: Word
    value: Number
    first: "ProofTree"
    second: "ProofTree"

    def children(self):
        return (self.first, self.second)


@dataclass(frozen=True, eq=False)
class Conjugacy(_Node):
    subject: Word
    value: Number
    conjugator: Word
    inner: "ProofTree"

    def children(self):
        return (self.inner,)


ProofTree = Union[EmptyWordAxiom, NormalizedAxiom, ElementaryAxiom, Triangle, Conjugacy]

EMPTY = EmptyWordAxiom()


def normalized(letter: Union[Letter, str, Word]) -> NormalizedAxiom:
    w = letter if isinstance(letter, Word) else Word(str(letter))
    if len(w) != 1:
        raise ValueError(f"not a single letter: {w}")
    return NormalizedAxiom(w, 1.0)


def triangle(first: ProofTree, second: ProofTree) -> Triangle:
    return Triangle(concat(first.subject, second.subject), first.value + second.value, first, second)


def conjugacy(by: Word, inner: ProofTree) -> Conjugacy:
    return Conjugacy(conjugate(inner.subject, by), inner.value, by, inner)


def elementary(element: Word, bound: Number) -> ElementaryAxiom:
    return ElementaryAxiom(element, bound, None)


def from_power(base: Word, exponent: int, proof: ProofTree) -> ElementaryAxiom:
    """Conclude ``|base| <= v / exponent`` from a proof of ``|base^exponent| <= v``."""
    if exponent < 1:
        raise ValueError("exponent must be positive")
    if proof.subject != power(base, exponent):
        raise ValueError(f"power proof is about {proof.subject}, not {base}^{exponent}")
    return ElementaryAxiom(base, proof.value / exponent, PowerJustification(base, exponent, proof))


def postorder(tree: ProofTree) -> Iterator[ProofTree]:
    """Yield each distinct node object once, children before parents."""
    seen: set[int] = set()
    stack: list[tuple[ProofTree, bool]] = [(tree, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            yield node
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        for child in reversed(node.children()):
            if id(child) not in seen:
                stack.append((child, False))


def structurally_equal(a: ProofTree, b: ProofTree) -> bool:
    stack = [(a, b)]
    checked: set[tuple[int, int]] = set()
    while stack:
        x, y = stack.pop()
        if x is y or (id(x), id(y)) in checked:
            continue
        checked.add((id(x), id(y)))
        if type(x) is not type(y) or x.subject != y.subject or x.value != y.value:
            return False
        if isinstance(x, Conjugacy) and x.conjugator != y.conjugator:
            return False
        if isinstance(x, ElementaryAxiom):
            if (x.origin is None) != (y.origin is None):
                return False
            if x.origin is not None and (
                x.origin.base != y.origin.base or x.origin.exponent != y.origin.exponent
            ):
                return False
        stack.extend(zip(x.children(), y.children()))
    return True


def count_nodes(tree: ProofTree, expanded: bool = False) -> int:
    """Number of distinct node objects, or of nodes in the fully expanded tree."""
    if not expanded:
        return sum(1 for _ in postorder(tree))
    sizes: dict[int, int] = {}
    for node in postorder(tree):
        sizes[id(node)] = 1 + sum(sizes[id(c)] for c in node.children())
    return sizes[id(tree)]


def _converter(mode: Mode) -> Callable[[Number], Number]:
    if mode == "float":
        return float
    if mode == "rational":
        return Fraction
    raise ValueError(f"unknown evaluation mode {mode!r}")


def node_values(tree: ProofTree, mode: Mode = "float") -> dict[int, Number]:
    """Recompute every node's value bottom-up; keyed by ``id(node)``.

    In ``"rational"`` mode all arithmetic is done in :class:`Fraction`, so
    the root value is exact.  Assumed elementary bounds enter at their exact
    stored value (a float converts to the rational it denotes).
    """
    conv = _converter(mode)
    one, zero = conv(1), conv(0)
    values: dict[int, Number] = {}
    for node in postorder(tree):
        if isinstance(node, EmptyWordAxiom):
            if node.subject:
                raise ProofStructureError(node, "empty-word axiom about a nonempty word")
            v = zero
        elif isinstance(node, NormalizedAxiom):
            if len(node.subject) != 1:
                raise ProofStructureError(node, "normalization axiom needs a single letter")
            v = one
        elif isinstance(node, Triangle):
            v = values[id(node.first)] + values[id(node.second)]
        elif isinstance(node, Conjugacy):
            v = values[id(node.inner)]
        elif isinstance(node, ElementaryAxiom):
            if node.origin is None:
                v = conv(node.value)
            else:
                pj = node.origin
                if pj.exponent < 1:
                    raise ProofStructureError(node, f"nonpositive exponent {pj.exponent}")
                v = values[id(pj.proof)] / pj.exponent
        else:
            raise TypeError(f"not a proof node: {node!r}")
        values[id(node)] = v
    return values


def evaluate(tree: ProofTree, mode: Mode = "float") -> Number:
    return node_values(tree, mode)[id(tree)]
