"""Human-readable proof lines.

One line per distinct statement ``|w| <= x``; a line only refers to
statements already printed above it::

    |A| <= 1
    |bAB| <= 1 using |A| <= 1
    |abAB| <= 2 using |a| <= 1 and |bAB| <= 1
"""

from __future__ import annotations

from fractions import Fraction

from ..freegroup import format_word
from .tree import (
    Conjugacy,
    ElementaryAxiom,
    Mode,
    Number,
    ProofTree,
    Triangle,
    node_values,
    postorder,
)


def format_number(x: Number) -> str:
    """Shortest round-trip repr for floats, ``p/q`` (or ``p``) for rationals."""
    if isinstance(x, float):
        return repr(x)
    return str(Fraction(x))


def statement(word, value: Number) -> str:
    return f"|{format_word(word)}| <= {format_number(value)}"


def render_text(tree: ProofTree, mode: Mode = "float") -> list[str]:
    values = node_values(tree, mode)
    emitted: set[tuple[str, Number]] = set()
    lines: list[str] = []
    for node in postorder(tree):
        v = values[id(node)]
        key = (format_word(node.subject), v)
        if key in emitted:
            continue
        emitted.add(key)
        line = statement(node.subject, v)
        if isinstance(node, Triangle):
            a, b = node.first, node.second
            line += f" using {statement(a.subject, values[id(a)])} and {statement(b.subject, values[id(b)])}"
        elif isinstance(node, Conjugacy):
            line += f" using {statement(node.inner.subject, values[id(node.inner)])}"
        elif isinstance(node, ElementaryAxiom) and node.origin is not None:
            p = node.origin.proof
            line += f" using {statement(p.subject, values[id(p)])} by taking {node.origin.exponent}th power"
        lines.append(line)
    return lines
