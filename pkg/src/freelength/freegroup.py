"""Reduced words in the free group on two generators.

Letters are written in ASCII: ``a`` and ``b`` are the generators, ``A`` and
``B`` their inverses.  The empty string is the identity.

>>> w = Word("abAB")
>>> w * Word("baBA")
Word('')
>>> conjugate(Word("A"), Word("b"))
Word('bAB')
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator, Union

ALPHABET = "abAB"

_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
_INVERT_TABLE = str.maketrans("abAB", "ABab")


class WordParseError(ValueError):
    """Raised when a word string contains a character outside ``abAB``."""

    def __init__(self, text: str, index: int):
        self.text = text
        self.index = index
        super().__init__(f"invalid character {text[index]!r} at index {index} in {text!r}")


class Letter(enum.Enum):
    ALPHA = "a"
    BETA = "b"
    ALPHA_INV = "A"
    BETA_INV = "B"

    @property
    def generator(self) -> str:
        return self.value.lower()

    @property
    def inverted(self) -> bool:
        return self.value.isupper()

    @property
    def inverse(self) -> "Letter":
        return Letter(_INVERSE[self.value])

    def __str__(self):
        return self.value


LetterLike = Union[Letter, str]


def _letter_char(x: LetterLike) -> str:
    if isinstance(x, Letter):
        return x.value
    if x in _INVERSE:
        return x
    raise ValueError(f"not a letter: {x!r}")


def _reduce_str(s: str) -> str:
    # single stack pass: push, or pop when the incoming letter cancels the top
    stack: list[str] = []
    for ch in s:
        if stack and stack[-1] == _INVERSE[ch]:
            stack.pop()
        else:
            stack.append(ch)
    return "".join(stack)


def is_reduced(s: str) -> bool:
    return all(_INVERSE[x] != y for x, y in zip(s, s[1:]))


class Word:
    """An immutable reduced word.

    Constructing a ``Word`` always reduces its input, so two words compare
    equal exactly when they represent the same group element.  Slicing a
    reduced word gives a reduced word, which the bound engine relies on.
    """

    __slots__ = ("_s", "_hash")

    def __init__(self, letters: Union[str, Iterable[LetterLike]] = ""):
        if isinstance(letters, Word):
            s = letters._s
        elif isinstance(letters, str):
            for i, ch in enumerate(letters):
                if ch not in _INVERSE:
                    raise WordParseError(letters, i)
            s = _reduce_str(letters)
        else:
            s = _reduce_str("".join(_letter_char(x) for x in letters))
        self._s = s
        self._hash = hash(s)

    @classmethod
    def _trusted(cls, s: str) -> "Word":
        # caller guarantees s is a reduced string over ALPHABET
        w = cls.__new__(cls)
        w._s = s
        w._hash = hash(s)
        return w

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(Letter(ch) for ch in self._s)

    def __str__(self):
        return self._s

    def __repr__(self):
        return f"Word({self._s!r})"

    def __len__(self):
        return len(self._s)

    def __bool__(self):
        return bool(self._s)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter(ch) for ch in self._s)

    def __getitem__(self, index):
        if isinstance(index, slice):
            if index.step not in (None, 1):
                raise ValueError("only contiguous slices of a word are words")
            return Word._trusted(self._s[index])
        return Letter(self._s[index])

    def __eq__(self, other):
        if isinstance(other, Word):
            return self._s == other._s
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return power(invert(self), -n)
        return power(self, n)

    def __invert__(self) -> "Word":
        return invert(self)

    def inverse(self) -> "Word":
        return invert(self)


IDENTITY = Word._trusted("")
ALPHA = Word._trusted("a")
BETA = Word._trusted("b")
COMMUTATOR = Word._trusted("abAB")


def reduce(raw: Union[str, Iterable[LetterLike]]) -> Word:
    """Freely reduce a sequence of letters."""
    return Word(raw)


def concat(u: Word, v: Word) -> Word:
    s, t = u._s, v._s
    # cancellation only happens at the seam
    i = 0
    m = min(len(s), len(t))
    while i < m and s[len(s) - 1 - i] == _INVERSE[t[i]]:
        i += 1
    return Word._trusted(s[: len(s) - i] + t[i:])


def invert(g: Word) -> Word:
    return Word._trusted(g._s[::-1].translate(_INVERT_TABLE))


def power(g: Word, n: int) -> Word:
    if n < 0:
        raise ValueError("power expects a nonnegative exponent; invert first")
    if n == 0 or not g:
        return IDENTITY
    # g = u h u^-1 with h cyclically reduced, so g^n = u h^n u^-1
    k = _outer_cancellation(g._s)
    s = g._s
    u, h = s[:k], s[k : len(s) - k]
    return Word._trusted(u + h * n + s[len(s) - k :])


def conjugate(g: Word, by: Word) -> Word:
    """Return ``by * g * by^-1``."""
    return concat(concat(by, g), invert(by))


def _outer_cancellation(s: str) -> int:
    k = 0
    while len(s) - 2 * k >= 2 and s[k] == _INVERSE[s[len(s) - 1 - k]]:
        k += 1
    return k


def cyclically_reduce(g: Word) -> Word:
    k = _outer_cancellation(g._s)
    return Word._trusted(g._s[k : len(g._s) - k])


def cyclic_decomposition(g: Word) -> tuple[Word, Word]:
    """Split ``g`` as ``u h u^-1`` with ``h`` cyclically reduced; return ``(u, h)``."""
    k = _outer_cancellation(g._s)
    return Word._trusted(g._s[:k]), Word._trusted(g._s[k : len(g._s) - k])


def is_cyclically_reduced(g: Word) -> bool:
    return len(g) < 2 or g._s[0] != _INVERSE[g._s[-1]]


def parse_word(text: str) -> Word:
    """Parse the ASCII grammar ``(a|b|A|B)*``.

    Input that is valid but not reduced is reduced.
    """
    return Word(text)


def format_word(g: Word) -> str:
    return g._s
