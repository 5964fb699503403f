"""Certified upper bounds for conjugacy-invariant lengths on the free group F(a, b)."""

from .bounds import BoundContext, ElementaryBound, bound, with_elementary_bounds
from .exploration import SymmetryClass, canonicalize, enumerate_classes, family_scan, usefulness_ratio
from .freegroup import (
    COMMUTATOR,
    IDENTITY,
    Letter,
    Word,
    WordParseError,
    concat,
    conjugate,
    cyclically_reduce,
    format_word,
    invert,
    parse_word,
    power,
    reduce,
)
from .homogeneity import (
    HomogeneityPair,
    HomogeneitySchedule,
    MemoMode,
    ScheduleConfig,
    apply_schedule,
    build_schedule,
    commutator_bound,
    gamma,
)
from .proofs import deserialize, evaluate, render_text, serialize, verify

__version__ = "0.1.0"
