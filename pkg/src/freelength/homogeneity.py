"""Deriving elementary bounds from homogeneity pairs.

A homogeneity pair ``(g, n)`` licenses ``l(g) <= l(g^n) / n``.  Processing a
schedule of pairs in order, each step bounds ``g^n`` with everything derived
so far and records ``|g| <= L(g^n) / n`` back into the context.  Because the
lengths are conjugacy invariant, the new bound is recorded for every cyclic
conjugate of ``g`` as well (each through a conjugacy step), which is what
lets bounds for ``a(abAB)^k`` act on subwords of ``(abAB)^n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .bounds import BoundContext, bound
from .freegroup import ALPHA, COMMUTATOR, Word, concat, cyclic_decomposition, invert, power
from .proofs.tree import Conjugacy, ElementaryAxiom, Number, PowerJustification, ProofTree


class MemoMode(str, enum.Enum):
    SHARED = "shared"  # keep every memo entry across steps
    FRESH = "fresh"  # each step starts from the derived bounds only


@dataclass(frozen=True)
class HomogeneityPair:
    element: Word
    exponent: int

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError(f"exponent must be positive, got {self.exponent}")


@dataclass(frozen=True)
class HomogeneitySchedule:
    pairs: tuple[HomogeneityPair, ...]
    mode: MemoMode = MemoMode.SHARED


@dataclass(frozen=True)
class ScheduleConfig:
    max_power: int = 20
    ks: tuple[int, ...] = (1, 2, 6)
    target: Word = COMMUTATOR
    mode: MemoMode = MemoMode.SHARED

    def __post_init__(self):
        if self.max_power < 1:
            raise ValueError("max_power must be at least 1")
        if not self.ks or any(k < 1 for k in self.ks):
            raise ValueError("ks must be a nonempty list of positive integers")
        object.__setattr__(self, "ks", tuple(self.ks))
        object.__setattr__(self, "mode", MemoMode(self.mode))


@dataclass(frozen=True)
class Step:
    pair: HomogeneityPair
    value: Number
    proof: ElementaryAxiom


def gamma(k: int, target: Word = COMMUTATOR) -> Word:
    """The family member ``a * target^k``."""
    return concat(ALPHA, power(target, k))


def build_schedule(cfg: ScheduleConfig) -> HomogeneitySchedule:
    pairs = [HomogeneityPair(gamma(k, cfg.target), n) for k in cfg.ks for n in range(1, cfg.max_power + 1)]
    pairs += [HomogeneityPair(cfg.target, n) for n in range(1, cfg.max_power + 1)]
    return HomogeneitySchedule(tuple(pairs), cfg.mode)


def cyclic_conjugates(g: Word) -> list[tuple[Word, Word]]:
    """All ``(h, c)`` with ``h = c g c^-1`` a cyclic rotation of the core of ``g``.

    ``g`` itself comes first (with ``c`` empty), then the distinct rotations
    of its cyclically reduced core in order.
    """
    u, h = cyclic_decomposition(g)
    out = [(g, Word._trusted(""))]
    seen = {g}
    s = str(h)
    for j in range(len(s)):
        rot = Word._trusted(s[j:] + s[:j])
        if rot in seen:
            continue
        seen.add(rot)
        # rot = p^-1 h p with p = h[:j], and h = u^-1 g u
        by = invert(concat(u, Word._trusted(s[:j])))
        out.append((rot, by))
    return out


def record(ctx: BoundContext, proof: ElementaryAxiom) -> None:
    """Offer ``|g| <= x`` for ``g`` and all its cyclic conjugates."""
    for h, by in cyclic_conjugates(proof.subject):
        node: ProofTree = proof if not by else Conjugacy(h, proof.value, by, proof)
        ctx.offer(h, proof.value, node)


def apply_schedule(
    schedule: HomogeneitySchedule,
    ctx: Optional[BoundContext] = None,
    steps: Optional[list] = None,
) -> BoundContext:
    """Run the pairs in order and return the resulting context.

    In fresh mode the returned context holds only the derived bounds.  Pass a
    list as ``steps`` to collect a :class:`Step` per pair.
    """
    mode = MemoMode(schedule.mode)
    ctx = BoundContext() if ctx is None else ctx
    derived = ctx.copy()
    for pair in schedule.pairs:
        if mode is MemoMode.FRESH:
            ctx = derived.copy()
        v, p = bound(power(pair.element, pair.exponent), ctx)
        x = v / pair.exponent
        proof = ElementaryAxiom(pair.element, x, PowerJustification(pair.element, pair.exponent, p))
        record(ctx, proof)
        if mode is MemoMode.FRESH:
            record(derived, proof)
        if steps is not None:
            steps.append(Step(pair, x, proof))
    return derived if mode is MemoMode.FRESH else ctx


def best_power_bound(target: Word, max_power: int, ctx: BoundContext) -> tuple[Number, ElementaryAxiom]:
    """``min_n L(target^n) / n`` over ``1 <= n <= max_power``; ties go to smaller n."""
    best = None
    for n in range(1, max_power + 1):
        v, p = bound(power(target, n), ctx)
        x = v / n
        if best is None or x < best[0]:
            best = (x, ElementaryAxiom(target, x, PowerJustification(target, n, p)))
    return best


def commutator_bound(cfg: ScheduleConfig = ScheduleConfig()) -> tuple[Number, ElementaryAxiom]:
    ctx = apply_schedule(build_schedule(cfg))
    return best_power_bound(cfg.target, cfg.max_power, ctx)


def parse_config(text: str) -> ScheduleConfig:
    """Read ``key=value`` lines: max_power, ks, target, mode.  ``#`` starts a comment."""
    kwargs: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (part.strip() for part in line.partition("="))
        if not sep:
            raise ValueError(f"line {lineno}: expected key=value")
        if key == "max_power":
            kwargs["max_power"] = int(value)
        elif key == "ks":
            kwargs["ks"] = tuple(int(k) for k in value.split(","))
        elif key == "target":
            kwargs["target"] = Word(value)
        elif key == "mode":
            kwargs["mode"] = MemoMode(value)
        else:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
    return ScheduleConfig(**kwargs)


def load_config(path) -> ScheduleConfig:
    return parse_config(Path(path).read_text())
