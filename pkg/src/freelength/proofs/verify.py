"""Independent checker for proof certificates.

Nothing here calls into the bound engine or the evaluator.  Each node is
checked locally against its children:

* word algebra is redone with :mod:`freelength.freegroup`;
* the claimed value must be exactly what the node's rule produces from the
  children's claimed values, computed in :class:`Fraction` and then rounded
  to the claim's own number type (floats: correctly rounded IEEE result,
  which is what the search wrote down; rationals: no rounding);
* assumed elementary bounds must be covered by a supplied assumption.

The certified bound is recomputed exactly from the leaves and reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from ..freegroup import Word, concat, conjugate, power
from .tree import (
    Conjugacy,
    ElementaryAxiom,
    EmptyWordAxiom,
    NormalizedAxiom,
    Number,
    ProofTree,
    Triangle,
)

BAD_SUBJECT = "bad-subject"
BAD_ARITHMETIC = "bad-arithmetic"
UNJUSTIFIED = "unjustified-assumption"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    node: Optional[ProofTree] = None
    reason: Optional[str] = None
    message: str = ""
    certified: Optional[Fraction] = None  # exact root value when ok

    def __bool__(self):
        return self.ok


def _exact(x: Number) -> Fraction:
    return Fraction(x)


def _matches(claim: Number, exact: Fraction) -> bool:
    if isinstance(claim, float):
        return claim == float(exact)
    return Fraction(claim) == exact


def _children(node: ProofTree):
    if isinstance(node, Triangle):
        return (node.first, node.second)
    if isinstance(node, Conjugacy):
        return (node.inner,)
    if isinstance(node, ElementaryAxiom) and node.origin is not None:
        return (node.origin.proof,)
    return ()


def _nodes_bottom_up(tree: ProofTree):
    seen: set[int] = set()
    stack = [(tree, False)]
    while stack:
        node, done = stack.pop()
        if done:
            yield node
        elif id(node) not in seen:
            seen.add(id(node))
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(_children(node)) if id(c) not in seen)


def _fail(node, reason, message):
    return Verdict(False, node, reason, message)


def _check(node, assumed, exact) -> Optional[Verdict]:
    s, v = node.subject, node.value
    if not isinstance(s, Word):
        return _fail(node, BAD_SUBJECT, "subject is not a word")
    if isinstance(node, EmptyWordAxiom):
        if s:
            return _fail(node, BAD_SUBJECT, f"empty-word axiom about {s}")
        want = Fraction(0)
    elif isinstance(node, NormalizedAxiom):
        if len(s) != 1:
            return _fail(node, BAD_SUBJECT, f"normalization axiom about {s}, not a letter")
        want = Fraction(1)
    elif isinstance(node, Triangle):
        a, b = node.first, node.second
        if concat(a.subject, b.subject) != s:
            return _fail(node, BAD_SUBJECT, f"{a.subject} * {b.subject} is not {s}")
        if not _matches(v, _exact(a.value) + _exact(b.value)):
            return _fail(node, BAD_ARITHMETIC, f"{v!r} != {a.value!r} + {b.value!r}")
        exact[id(node)] = exact[id(a)] + exact[id(b)]
        return None
    elif isinstance(node, Conjugacy):
        h = node.inner
        if conjugate(h.subject, node.conjugator) != s:
            return _fail(node, BAD_SUBJECT, f"{node.conjugator} {h.subject} {node.conjugator}^-1 is not {s}")
        if not _matches(v, _exact(h.value)):
            return _fail(node, BAD_ARITHMETIC, f"{v!r} != {h.value!r}")
        exact[id(node)] = exact[id(h)]
        return None
    elif isinstance(node, ElementaryAxiom):
        pj = node.origin
        if pj is None:
            y = assumed.get(s)
            if y is None or y > _exact(v):
                return _fail(node, UNJUSTIFIED, f"no assumption gives |{s}| <= {v!r}")
            exact[id(node)] = _exact(v)
            return None
        if not isinstance(pj.exponent, int) or pj.exponent < 1:
            return _fail(node, BAD_ARITHMETIC, f"exponent {pj.exponent!r} is not a positive integer")
        if pj.base != s or pj.proof.subject != power(s, pj.exponent):
            return _fail(node, BAD_SUBJECT, f"power proof is about {pj.proof.subject}, not {s}^{pj.exponent}")
        if not _matches(v, _exact(pj.proof.value) / pj.exponent):
            return _fail(node, BAD_ARITHMETIC, f"{v!r} != {pj.proof.value!r} / {pj.exponent}")
        exact[id(node)] = exact[id(pj.proof)] / pj.exponent
        return None
    else:
        return _fail(node, BAD_SUBJECT, f"unknown node type {type(node).__name__}")
    if not _matches(v, want):
        return _fail(node, BAD_ARITHMETIC, f"axiom value {v!r} should be {want}")
    exact[id(node)] = want
    return None


def verify(tree: ProofTree, assumptions: Iterable = ()) -> Verdict:
    """Check a proof tree; return the first failing node (bottom-up) or ok.

    ``assumptions`` holds ``(word, bound)`` pairs or objects with ``element``
    and ``bound`` attributes.  An assumed node ``|g| <= x`` is justified by
    any assumption ``|g| <= y`` with ``y <= x``.
    """
    assumed: dict[Word, Fraction] = {}
    for item in assumptions:
        g, y = (item.element, item.bound) if hasattr(item, "element") else item
        y = _exact(y)
        if g not in assumed or y < assumed[g]:
            assumed[g] = y

    exact: dict[int, Fraction] = {}
    for node in _nodes_bottom_up(tree):
        try:
            verdict = _check(node, assumed, exact)
        except (TypeError, ValueError, OverflowError) as exc:
            verdict = Verdict(False, node, BAD_ARITHMETIC, f"unusable value: {exc}")
        if verdict is not None:
            return verdict
    return Verdict(True, certified=exact[id(tree)])


def check(tree: ProofTree, assumptions: Iterable = ()) -> Fraction:
    """Like :func:`verify` but raise on failure; returns the certified bound."""
    verdict = verify(tree, assumptions)
    if not verdict:
        raise VerificationError(verdict)
    return verdict.certified


class VerificationError(ValueError):
    def __init__(self, verdict: Verdict):
        self.verdict = verdict
        node = verdict.node
        super().__init__(f"{verdict.reason} at |{node.subject}| <= {node.value!r}: {verdict.message}")


__all__ = [
    "BAD_ARITHMETIC",
    "BAD_SUBJECT",
    "UNJUSTIFIED",
    "Verdict",
    "VerificationError",
    "check",
    "verify",
]
