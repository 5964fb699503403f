"""Proof certificates: tree types, evaluation, rendering, text format, checking."""

from .render import format_number, render_text
from .serialize import ProofParseError, deserialize, serialize
from .tree import (
    EMPTY,
    Conjugacy,
    ElementaryAxiom,
    EmptyWordAxiom,
    NormalizedAxiom,
    PowerJustification,
    ProofStructureError,
    ProofTree,
    Triangle,
    conjugacy,
    count_nodes,
    elementary,
    evaluate,
    from_power,
    normalized,
    postorder,
    triangle,
)
from .verify import BAD_ARITHMETIC, BAD_SUBJECT, UNJUSTIFIED, Verdict, VerificationError, check, verify
