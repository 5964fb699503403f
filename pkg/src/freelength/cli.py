"""Command line: ``freelength {bound,verify,enumerate,scan}``.

Exit status is 0 on success, 1 when a proof fails verification and 2 for
usage, input or parse errors.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .bounds import ElementaryBound, bound
from .exploration import DEFAULT_CAP, enumerate_classes, family_scan, format_report
from .freegroup import Word, WordParseError
from .homogeneity import MemoMode, ScheduleConfig, apply_schedule, best_power_bound, build_schedule, load_config
from .proofs import ProofParseError, deserialize, evaluate, format_number, render_text, serialize, verify


class UsageError(Exception):
    pass


def _word_arg(text: str) -> Word:
    try:
        return Word(text)
    except WordParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _ints_arg(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return values


def _assumption_arg(text: str) -> ElementaryBound:
    word, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected WORD=VALUE, got {text!r}")
    try:
        number = float(value) if any(c in value for c in ".eE") else Fraction(value)
        return ElementaryBound(Word(word), number)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freelength", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="bound a word, by default the commutator with homogeneity")
    p.add_argument("--config", type=Path, help="key=value file (max_power, ks, target, mode)")
    p.add_argument("--max-power", type=int, help="largest exponent N (default 20)")
    p.add_argument("--ks", type=_ints_arg, help="family indices k (default 1,2,6)")
    p.add_argument("--target", type=_word_arg, help="word to bound (default abAB)")
    p.add_argument("--mode", choices=[m.value for m in MemoMode], help="memo handling (default shared)")
    p.add_argument("--word", type=_word_arg, help="bound this word without homogeneity")
    p.add_argument("--exact", action="store_true", help="also print the exact rational bound")
    p.add_argument("--output", "--proof", dest="output", type=Path, help="write proof lines here (default stdout)")
    p.add_argument("--tree", type=Path, help="write the proof tree here (default: next to --output, .tree)")

    p = sub.add_parser("verify", help="check a serialized proof tree")
    p.add_argument("tree", type=Path)
    p.add_argument("--assume", type=_assumption_arg, action="append", default=[], metavar="WORD=VALUE")

    p = sub.add_parser("enumerate", help="symmetry classes of cyclically reduced words")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = sub.add_parser("scan", help="rank families a*b^k by usefulness ratio")
    p.add_argument("--families", type=Path, required=True, help="lines of 'a=<word> b=<word>'")
    p.add_argument("--k-samples", type=_ints_arg, default=(2, 4, 6))
    p.add_argument("--n-samples", type=_ints_arg, default=(2, 4, 6))
    return parser


def _config(args) -> ScheduleConfig:
    base = load_config(args.config) if args.config else ScheduleConfig()
    return ScheduleConfig(
        max_power=args.max_power if args.max_power is not None else base.max_power,
        ks=args.ks if args.ks is not None else base.ks,
        target=args.target if args.target is not None else base.target,
        mode=args.mode if args.mode is not None else base.mode,
    )


def _cmd_bound(args, out) -> int:
    if args.word is not None:
        value, proof = bound(args.word)
    else:
        cfg = _config(args)
        ctx = apply_schedule(build_schedule(cfg))
        value, proof = best_power_bound(cfg.target, cfg.max_power, ctx)
    out.write(f"{format_number(value)}\n")
    if args.exact:
        out.write(f"{format_number(evaluate(proof, 'rational'))}\n")
    lines = "".join(line + "\n" for line in render_text(proof, "rational" if args.exact else "float"))
    tree_path = args.tree
    if args.output is None:
        out.write(lines)
    else:
        args.output.write_text(lines)
        if tree_path is None:
            tree_path = args.output.with_suffix(".tree")
    if tree_path is not None:
        tree_path.write_text(serialize(proof))
    return 0


def _cmd_verify(args, out) -> int:
    try:
        tree = deserialize(args.tree.read_text())
    except OSError as exc:
        raise UsageError(str(exc)) from None
    except ProofParseError as exc:
        raise UsageError(f"{args.tree}: {exc}") from None
    verdict = verify(tree, args.assume)
    if not verdict:
        node = verdict.node
        sys.stderr.write(
            f"FAILED {verdict.reason} at |{node.subject}| <= {format_number(node.value)}: {verdict.message}\n"
        )
        return 1
    out.write(f"ok\n|{tree.subject}| <= {format_number(verdict.certified)}\n")
    return 0


def _cmd_enumerate(args, out) -> int:
    try:
        classes = enumerate_classes(args.length, cap=args.cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(f"{len(classes)}\n")
    for c in classes:
        out.write(f"{c.representative or '(e)'} {c.size}\n")
    return 0


def parse_families(text: str) -> list[tuple[Word, Word]]:
    families = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = dict(tok.partition("=")[::2] for tok in line.split())
        if set(fields) != {"a", "b"}:
            raise UsageError(f"line {lineno}: expected 'a=<word> b=<word>'")
        try:
            families.append((Word(fields["a"]), Word(fields["b"])))
        except WordParseError as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
    return families


def _cmd_scan(args, out) -> int:
    try:
        text = args.families.read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    rows = family_scan(parse_families(text), args.k_samples, args.n_samples)
    out.write(format_report(rows))
    return 0


_COMMANDS = {"bound": _cmd_bound, "verify": _cmd_verify, "enumerate": _cmd_enumerate, "scan": _cmd_scan}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"freelength: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
