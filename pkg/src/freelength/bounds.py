"""Memoized upper bounds for normalized conjugacy-invariant pseudo-lengths.

For a reduced word ``g = x1 x2 ... xn`` the engine takes the smaller of

* ``1 + L(x2 ... xn)``  (triangle inequality plus normalization), and
* ``L(x2 ... x(k-1)) + L(x(k+1) ... xn)`` for every ``k`` with
  ``xk = x1^-1``  (triangle inequality plus conjugacy invariance),

recursing on contiguous subwords.  Results, with their proofs, are stored in
a :class:`BoundContext` keyed by word; the same table also holds any
elementary bounds ``|g| <= x`` assumed up front or derived by homogeneity,
and a table entry always wins over recomputation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .freegroup import Word
from .proofs.tree import (
    EMPTY,
    Conjugacy,
    ElementaryAxiom,
    NormalizedAxiom,
    Number,
    ProofTree,
    Triangle,
)

_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
_LETTER_PROOF = {ch: NormalizedAxiom(Word._trusted(ch), 1.0) for ch in "abAB"}
_LETTER_WORD = {ch: Word._trusted(ch) for ch in "abAB"}

Entry = tuple[Number, ProofTree]


@dataclass(frozen=True)
class ElementaryBound:
    element: Word
    bound: Number

    def __post_init__(self):
        if not isinstance(self.element, Word):
            object.__setattr__(self, "element", Word(self.element))
        if not self.bound >= 0:
            raise ValueError(f"elementary bound must be nonnegative, got {self.bound!r}")


class BoundContext:
    """The memo table: reduced word -> (bound, proof).

    Keys never disappear once added; :meth:`offer` may replace an entry by a
    strictly smaller one.  A context is not thread-safe; use one per
    computation thread.
    """

    def __init__(self):
        self._table: dict[str, Entry] = {}

    def __contains__(self, g: Word) -> bool:
        return str(g) in self._table

    def __getitem__(self, g: Word) -> Entry:
        return self._table[str(g)]

    def __len__(self) -> int:
        return len(self._table)

    def get(self, g: Word) -> Optional[Entry]:
        return self._table.get(str(g))

    def items(self) -> Iterator[tuple[Word, Entry]]:
        for s, entry in self._table.items():
            yield Word._trusted(s), entry

    def assume(self, element: Word, bound: Number) -> None:
        """Record ``|element| <= bound`` as an assumption (overwrites).

        The search runs in floats, so a non-float bound is stored as the
        nearest float not below it.
        """
        x = float_at_least(bound)
        self._table[str(element)] = (x, ElementaryAxiom(element, x, None))

    def offer(self, element: Word, value: Number, proof: ProofTree) -> bool:
        """Store ``(value, proof)`` unless an entry at least as good exists."""
        key = str(element)
        old = self._table.get(key)
        if old is not None and not value < old[0]:
            return False
        self._table[key] = (value, proof)
        return True

    def copy(self) -> "BoundContext":
        new = BoundContext()
        new._table = dict(self._table)
        return new

    def bound(self, g: Word) -> Entry:
        return bound(g, self)


def float_at_least(x: Number) -> float:
    f = float(x)
    if not isinstance(x, float) and Fraction(f) < Fraction(x):
        f = math.nextafter(f, math.inf)
    return f


def with_elementary_bounds(bounds: Iterable) -> BoundContext:
    """Fresh context holding exactly the given ``|g| <= x`` assumptions.

    Accepts :class:`ElementaryBound` objects or ``(word, bound)`` pairs; a
    later entry for the same word replaces an earlier one.
    """
    ctx = BoundContext()
    for item in bounds:
        eb = item if isinstance(item, ElementaryBound) else ElementaryBound(*item)
        ctx.assume(eb.element, eb.bound)
    return ctx


def _children(w: str) -> Iterator[str]:
    yield w[1:]
    inv = _INVERSE[w[0]]
    for k in range(2, len(w)):
        if w[k] == inv:
            yield w[1:k]
            yield w[k + 1 :]


def _value(table: dict[str, Entry], s: str) -> Number:
    entry = table.get(s)
    if entry is not None:
        return entry[0]
    return 0.0 if not s else 1.0


def _proof(table: dict[str, Entry], s: str) -> ProofTree:
    entry = table.get(s)
    if entry is not None:
        return entry[1]
    return EMPTY if not s else _LETTER_PROOF[s]


def _solve(w: str, table: dict[str, Entry]) -> Entry:
    # ties keep the earlier candidate: the +1 rule first, then smallest k
    best = 1.0 + _value(table, w[1:])
    best_k = 0
    inv = _INVERSE[w[0]]
    for k in range(2, len(w)):
        if w[k] == inv:
            lam = _value(table, w[1:k]) + _value(table, w[k + 1 :])
            if lam < best:
                best, best_k = lam, k
    first = w[0]
    if best_k == 0:
        proof = Triangle(Word._trusted(w), best, _LETTER_PROOF[first], _proof(table, w[1:]))
    else:
        inner = _proof(table, w[1:best_k])
        head = Conjugacy(Word._trusted(w[: best_k + 1]), inner.value, _LETTER_WORD[first], inner)
        proof = Triangle(Word._trusted(w), best, head, _proof(table, w[best_k + 1 :]))
    return best, proof


def bound(g: Word, ctx: Optional[BoundContext] = None) -> Entry:
    """Upper bound for ``l(g)`` with its proof; memoizes into ``ctx``.

    Deterministic for a given word and context contents.  Runs on an
    explicit stack, so long words do not hit the recursion limit.
    """
    if ctx is None:
        ctx = BoundContext()
    table = ctx._table
    s = str(g)
    entry = table.get(s)
    if entry is not None:
        return entry
    if len(s) < 2:
        return _value(table, s), _proof(table, s)

    stack = [s]
    while stack:
        w = stack[-1]
        if w in table:
            stack.pop()
            continue
        missing = [c for c in _children(w) if len(c) >= 2 and c not in table]
        if missing:
            stack.extend(missing)
            continue
        table[w] = _solve(w, table)
        stack.pop()
    return table[s]

