"""Indented ``key: value`` text format for proof trees.

Layout (two spaces per level)::

    bound: |abAB| <= 2.0
    proof: triangle-inequality
    first:
      bound: |a| <= 1.0
      proof: length-is-normalized
    second:
      bound: |bAB| <= 1.0
      proof: conjugacy-invariance
      conjugated-by: b
      base:
        bound: |A| <= 1.0
        proof: length-is-normalized

A homogeneity step has ``exponent`` and a ``power-proof`` child; its base is
the word in its own ``bound`` line.  Numbers containing ``.``, ``e``, ``inf``
or ``nan`` are read back as floats, everything else as exact rationals.
Shared subtrees are written out in full.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from ..freegroup import Word, WordParseError
from .render import statement
from .tree import (
    Conjugacy,
    ElementaryAxiom,
    EmptyWordAxiom,
    NormalizedAxiom,
    Number,
    PowerJustification,
    ProofTree,
    Triangle,
)

INDENT = "  "

_KIND = {
    EmptyWordAxiom: "empty-word",
    NormalizedAxiom: "length-is-normalized",
    Triangle: "triangle-inequality",
    Conjugacy: "conjugacy-invariance",
}

_BOUND_RE = re.compile(r"^\|([abAB]*)\| <= (\S+)$")
_LINE_RE = re.compile(r"^( *)([a-z-]+):(?: (.*))?$")

_SCALAR_KEYS = {"bound", "proof", "conjugated-by", "exponent"}
_CHILD_KEYS = {"first", "second", "base", "power-proof"}


class ProofParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def serialize(tree: ProofTree) -> str:
    out: list[str] = []
    # (node, depth) work items; strings are pre-rendered header lines
    stack: list = [(tree, 0)]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        node, depth = item
        pad = INDENT * depth
        out.append(f"{pad}bound: {statement(node.subject, node.value)}")
        todo: list = []
        if isinstance(node, ElementaryAxiom):
            if node.origin is None:
                out.append(f"{pad}proof: elementary")
            else:
                out.append(f"{pad}proof: homogeneity")
                out.append(f"{pad}exponent: {node.origin.exponent}")
                todo = [f"{pad}power-proof:", (node.origin.proof, depth + 1)]
        else:
            out.append(f"{pad}proof: {_KIND[type(node)]}")
            if isinstance(node, Triangle):
                todo = [
                    f"{pad}first:", (node.first, depth + 1),
                    f"{pad}second:", (node.second, depth + 1),
                ]
            elif isinstance(node, Conjugacy):
                out.append(f"{pad}conjugated-by: {node.conjugator}".rstrip())
                todo = [f"{pad}base:", (node.inner, depth + 1)]
        stack.extend(reversed(todo))
    return "\n".join(out) + "\n"


class _Record:
    __slots__ = ("lineno", "scalars", "children")

    def __init__(self, lineno: int):
        self.lineno = lineno
        self.scalars: dict[str, tuple[str, int]] = {}
        self.children: dict[str, "_Record"] = {}


def _parse_number(text: str, lineno: int) -> Number:
    try:
        if any(t in text.lower() for t in (".", "e", "inf", "nan")):
            return float(text)
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ProofParseError(lineno, f"bad number {text!r}") from None


def _parse_records(text: str) -> _Record:
    root: Optional[_Record] = None
    # stack[d] is the record whose fields live at depth d
    stack: list[_Record] = []
    pending_child: Optional[tuple[int, _Record, str]] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        m = _LINE_RE.match(raw)
        if m is None:
            raise ProofParseError(lineno, f"expected 'key: value', got {raw!r}")
        spaces, key, value = m.groups()
        if len(spaces) % len(INDENT):
            raise ProofParseError(lineno, "indentation is not a multiple of two spaces")
        depth = len(spaces) // len(INDENT)
        if pending_child is not None:
            pdepth, parent, pkey = pending_child
            if depth != pdepth + 1:
                raise ProofParseError(lineno, f"expected an indented block under '{pkey}:'")
            rec = _Record(lineno)
            parent.children[pkey] = rec
            del stack[depth:]
            stack.append(rec)
            pending_child = None
        elif root is None:
            if depth != 0:
                raise ProofParseError(lineno, "first line must not be indented")
            root = _Record(lineno)
            stack.append(root)
        elif depth >= len(stack):
            raise ProofParseError(lineno, "unexpected indentation")
        else:
            del stack[depth + 1 :]
        rec = stack[depth]
        if key in _CHILD_KEYS:
            if value:
                raise ProofParseError(lineno, f"'{key}:' takes an indented block, not a value")
            if key in rec.children:
                raise ProofParseError(lineno, f"duplicate key '{key}'")
            pending_child = (depth, rec, key)
        elif key in _SCALAR_KEYS:
            if key in rec.scalars:
                raise ProofParseError(lineno, f"duplicate key '{key}'")
            if value is None and key != "conjugated-by":
                raise ProofParseError(lineno, f"missing value for '{key}'")
            rec.scalars[key] = (value or "", lineno)
        else:
            raise ProofParseError(lineno, f"unknown key '{key}'")
    if root is None:
        raise ProofParseError(1, "empty proof")
    if pending_child is not None:
        raise ProofParseError(pending_child[1].lineno, f"'{pending_child[2]}:' has no block")
    return root


_EXPECTED_CHILDREN = {
    "empty-word": (),
    "length-is-normalized": (),
    "elementary": (),
    "triangle-inequality": ("first", "second"),
    "conjugacy-invariance": ("base",),
    "homogeneity": ("power-proof",),
}


def _require(rec: _Record, key: str) -> tuple[str, int]:
    if key not in rec.scalars:
        raise ProofParseError(rec.lineno, f"missing '{key}'")
    return rec.scalars[key]


def _word(text: str, lineno: int) -> Word:
    try:
        return Word(text)
    except WordParseError as exc:
        raise ProofParseError(lineno, str(exc)) from None


def deserialize(text: str) -> ProofTree:
    root = _parse_records(text)
    built: dict[int, ProofTree] = {}
    stack: list[tuple[_Record, bool]] = [(root, False)]
    while stack:
        rec, ready = stack.pop()
        kind, kline = _require(rec, "proof")
        if kind not in _EXPECTED_CHILDREN:
            raise ProofParseError(kline, f"unknown proof kind {kind!r}")
        wanted = _EXPECTED_CHILDREN[kind]
        if not ready:
            if set(rec.children) != set(wanted):
                raise ProofParseError(
                    rec.lineno, f"'{kind}' needs children {list(wanted)}, got {sorted(rec.children)}"
                )
            stack.append((rec, True))
            stack.extend((rec.children[k], False) for k in wanted)
            continue
        btext, bline = _require(rec, "bound")
        m = _BOUND_RE.match(btext)
        if m is None:
            raise ProofParseError(bline, f"malformed bound {btext!r}")
        subject = _word(m.group(1), bline)
        value = _parse_number(m.group(2), bline)
        if kind == "empty-word":
            node: ProofTree = EmptyWordAxiom(subject, value)
        elif kind == "length-is-normalized":
            node = NormalizedAxiom(subject, value)
        elif kind == "elementary":
            node = ElementaryAxiom(subject, value, None)
        elif kind == "triangle-inequality":
            node = Triangle(subject, value, built[id(rec.children["first"])], built[id(rec.children["second"])])
        elif kind == "conjugacy-invariance":
            ctext, cline = _require(rec, "conjugated-by")
            node = Conjugacy(subject, value, _word(ctext, cline), built[id(rec.children["base"])])
        else:
            etext, eline = _require(rec, "exponent")
            try:
                exponent = int(etext)
            except ValueError:
                raise ProofParseError(eline, f"bad exponent {etext!r}") from None
            pj = PowerJustification(subject, exponent, built[id(rec.children["power-proof"])])
            node = ElementaryAxiom(subject, value, pj)
        allowed = {"bound", "proof"} | ({"conjugated-by"} if kind == "conjugacy-invariance" else set())
        allowed |= {"exponent"} if kind == "homogeneity" else set()
        extra = set(rec.scalars) - allowed
        if extra:
            raise ProofParseError(rec.scalars[min(extra)][1], f"key '{min(extra)}' not allowed in '{kind}'")
        built[id(rec)] = node
    return built[id(root)]
