"""Symmetry-reduced word enumeration and scoring of homogeneity pairs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .bounds import BoundContext, bound
from .freegroup import Word, concat, cyclically_reduce, power

DEFAULT_CAP = 12

# a < b < A < B
_ORDER = str.maketrans("abAB", "0123")
_NEXT = {"a": "abB", "b": "abA", "A": "bAB", "B": "aAB"}


def _letter_map(swap: bool, invert_a: bool, invert_b: bool) -> dict[int, int]:
    x, y = ("b", "a") if swap else ("a", "b")
    x = x.upper() if invert_a else x
    y = y.upper() if invert_b else y
    return str.maketrans("abAB", x + y + x.swapcase() + y.swapcase())


# generator transposition times inversion of either generator: 8 maps
_LETTER_MAPS = [_letter_map(*flags) for flags in itertools.product((False, True), repeat=3)]


def _key(s: str) -> str:
    return s.translate(_ORDER)


def _orbit(s: str) -> set[str]:
    out = set()
    for m in _LETTER_MAPS:
        t = s.translate(m)
        for j in range(max(len(t), 1)):
            out.add(t[j:] + t[:j])
    return out


def canonicalize(g: Word) -> Word:
    """Least word (order a < b < A < B) in the symmetry orbit of ``g``'s cyclic core."""
    s = str(cyclically_reduce(g))
    return Word._trusted(min(_orbit(s), key=_key))


@dataclass(frozen=True)
class SymmetryClass:
    representative: Word
    size: Optional[int] = None  # cyclically reduced words in the orbit


def _cyclically_reduced_words(length: int) -> Iterator[str]:
    """Cyclically reduced words of a given length, in a < b < A < B order."""
    if length == 0:
        yield ""
        return
    inverse = {"a": "A", "A": "a", "b": "B", "B": "b"}
    for head in "abAB":
        stack = [head]
        # depth-first in reverse order so output comes out sorted
        while stack:
            s = stack.pop()
            if len(s) == length:
                if length == 1 or s[0] != inverse[s[-1]]:
                    yield s
                continue
            stack.extend(s + ch for ch in reversed(_NEXT[s[-1]]))


def enumerate_classes(length: int, cap: int = DEFAULT_CAP) -> list[SymmetryClass]:
    """One class per symmetry orbit of cyclically reduced words of ``length``.

    Classes come back sorted by representative.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length > cap:
        raise ValueError(f"length {length} exceeds the enumeration cap {cap}")
    seen: set[str] = set()
    classes = []
    for s in _cyclically_reduced_words(length):
        if s in seen:
            continue
        orbit = _orbit(s)
        seen |= orbit
        # words arrive in order, so the first of an orbit is its minimum
        classes.append(SymmetryClass(Word._trusted(s), len(orbit)))
    return classes


def usefulness_ratio(g: Word, n: int, ctx: Optional[BoundContext] = None) -> float:
    """``L(g) / (L(g^n) / n)`` computed without elementary bounds.

    ``ctx`` may be passed to reuse memo entries; it must not contain any
    elementary bounds or the result is no longer the plain ratio.
    """
    if not g:
        raise ValueError("usefulness ratio is undefined for the identity")
    if n < 1:
        raise ValueError("n must be positive")
    ctx = BoundContext() if ctx is None else ctx
    lg = bound(g, ctx)[0]
    lgn = bound(power(g, n), ctx)[0]
    return lg / (lgn / n)


@dataclass(frozen=True)
class FamilyScore:
    a: Word
    b: Word
    max_rho: float
    k: int
    n: int

    def format(self) -> str:
        return f"a={self.a} b={self.b} max_rho={self.max_rho!r} at k={self.k} n={self.n}"


def family_scan(
    families: Iterable[tuple[Word, Word]],
    k_samples: Sequence[int],
    n_samples: Sequence[int],
) -> list[FamilyScore]:
    """Score each family ``a * b^k`` by its largest ratio over the grid.

    Rows are sorted by ``max_rho`` descending; equal scores keep input
    order, and within a family the first grid point (k, then n) wins ties.
    Grid points where ``a * b^k`` is trivial are skipped.
    """
    scored = []
    for index, (a, b) in enumerate(families):
        ctx = BoundContext()
        best = None
        for k, n in itertools.product(k_samples, n_samples):
            g = concat(a, power(b, k))
            if not g:
                continue
            rho = usefulness_ratio(g, n, ctx)
            if best is None or rho > best[0]:
                best = (rho, k, n)
        if best is None:
            raise ValueError(f"family a={a} b={b} has no nontrivial sample")
        scored.append((index, FamilyScore(a, b, *best)))
    scored.sort(key=lambda item: (-item[1].max_rho, item[0]))
    return [row for _, row in scored]


def format_report(rows: Iterable[FamilyScore]) -> str:
    return "".join(row.format() + "\n" for row in rows)
