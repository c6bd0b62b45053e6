"""Command line front end.

Exit status: 0 on success, 1 on domain errors, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import automaton, counting, rank_one, spectral
from .errors import DfaSpectraError, InvalidPartition, NotRankOne, ParseError, RegexSyntaxError
from .exact_linalg import Partition, is_equitable
from .regex import compile_regex

USAGE_ERRORS = (ParseError, RegexSyntaxError, InvalidPartition)


class UsageError(Exception):
    pass


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", help="automaton file, or '-' for stdin")
    p.add_argument("--regex", help="compile this pattern instead of reading a file")
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dfaspectra",
        description="Spectral analysis, counting and ranking for finite automata.")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_input(sub.add_parser("analyze", help="spectral analysis report"))
    _add_input(sub.add_parser("minimize", help="print the minimal automaton"))
    _add_input(sub.add_parser("rank", help="print the rank of the language"))

    p = sub.add_parser("count", help="number of words of length N")
    _add_input(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--closed-form", action="store_true",
                   help="use the rank-one closed form (fails unless the language is rank one)")

    p = sub.add_parser("rank-word", help="shortlex index of a word")
    p.add_argument("word")
    _add_input(p)

    p = sub.add_parser("unrank-word", help="word at a shortlex index")
    p.add_argument("index", type=int)
    _add_input(p)

    p = sub.add_parser("compress", help="encode a word as its index bytes")
    p.add_argument("word")
    _add_input(p)
    p.add_argument("--raw", action="store_true", help="write raw bytes instead of hex")

    p = sub.add_parser("decompress", help="decode index bytes read from stdin")
    _add_input(p)
    p.add_argument("--raw", action="store_true", help="stdin holds raw bytes instead of hex")

    _add_input(sub.add_parser("expand", help="expanded canonical automaton"))

    for name, helptext in (("quotient", "quotient automaton by a partition"),
                           ("equitable", "test whether a partition is equitable")):
        p = sub.add_parser(name, help=helptext)
        _add_input(p)
        p.add_argument("--partition", required=True, help='blocks like "0,1|2"')
    return parser


def _load(args: argparse.Namespace) -> automaton.Dfa:
    if (args.file is None) == (args.regex is None):
        raise UsageError("give exactly one input: a file, '-', or --regex")
    if args.regex is not None:
        return compile_regex(args.regex)
    if args.file == "-":
        if args.command == "decompress":
            raise UsageError("decompress reads the encoded index from stdin; pass the automaton as a file")
        return automaton.parse_dfa(sys.stdin.read())
    try:
        with open(args.file, encoding="utf-8") as fh:
            return automaton.parse_dfa(fh.read())
    except OSError as e:
        raise UsageError(f"cannot read {args.file}: {e.strerror}") from None


def _execute(args: argparse.Namespace, d: automaton.Dfa) -> Any:
    cmd = args.command
    if cmd == "analyze":
        return spectral.analyze(d)
    if cmd == "minimize":
        return automaton.minimize(d)
    if cmd == "rank":
        return spectral.language_rank(d)
    if cmd == "count":
        if args.n < 0:
            raise UsageError("-n must be nonnegative")
        if args.closed_form:
            lr = spectral.language_rank(d)
            if lr != 1:
                raise NotRankOne(f"language rank is {lr}")
            return rank_one.closed_form_count(d)(args.n)
        return counting.count_words(d, args.n)
    if cmd == "rank-word":
        return counting.rank_word(d, args.word)
    if cmd == "unrank-word":
        return counting.unrank_word(d, args.index)
    if cmd == "compress":
        return counting.compress(d, args.word)
    if cmd == "decompress":
        if args.raw:
            data = sys.stdin.buffer.read()
        else:
            text = "".join(sys.stdin.read().split())
            try:
                data = bytes.fromhex(text)
            except ValueError:
                raise UsageError("stdin is not valid hex") from None
        return counting.decompress(d, data)
    if cmd == "expand":
        return rank_one.expanded_canonical_automaton(d)
    part = Partition.parse(args.partition, d.state_count)
    if cmd == "quotient":
        return automaton.quotient_automaton(d, part)
    if cmd == "equitable":
        return is_equitable(automaton.adjacency(d), part)
    raise UsageError(f"unknown command {cmd}")


def _to_json(value: Any) -> Any:
    if isinstance(value, spectral.AnalysisReport):
        return value.to_dict()
    if isinstance(value, automaton.Dfa):
        return automaton.serialize_dfa(value)
    if isinstance(value, bytes):
        return value.hex()
    return value


def _to_text(value: Any) -> str:
    if isinstance(value, spectral.AnalysisReport):
        r = value
        lines = [
            f"states: {r.state_count}",
            f"trim: {str(r.is_trim).lower()}",
            f"minimal: {str(r.is_minimal).lower()}",
            f"rank: {r.rank}",
            f"nullity: {r.nullity}",
            f"charPoly: {r.char_poly}",
            f"languageRank: {r.language_rank}",
        ]
        if r.rank_one is None:
            lines.append("rankOne: none")
        else:
            lines.append(f"rankOne: in={list(r.rank_one.in_vector)} "
                         f"out={list(r.rank_one.out_vector)} lambda={r.rank_one.lam}")
        lines.append(f"expandedNormal: {str(r.is_expanded_normal).lower()}")
        return "\n".join(lines) + "\n"
    if isinstance(value, automaton.Dfa):
        return automaton.serialize_dfa(value)
    if isinstance(value, bool):
        return f"{str(value).lower()}\n"
    if isinstance(value, bytes):
        return value.hex() + "\n"
    return f"{value}\n"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    def fail(code: str, detail: str, status: int) -> int:
        if args.format == "json":
            stdout.write(json.dumps({"ok": False, "error": {"code": code, "detail": detail}}) + "\n")
        else:
            stderr.write(f"error: {code}: {detail}\n")
        return status

    try:
        d = _load(args)
        value = _execute(args, d)
    except UsageError as e:
        return fail("UsageError", str(e), 2)
    except USAGE_ERRORS as e:
        return fail(e.code, e.detail, 2)
    except DfaSpectraError as e:
        return fail(e.code, e.detail, 1)

    if args.format == "json":
        stdout.write(json.dumps({"ok": True, "result": _to_json(value)}) + "\n")
    elif args.command == "compress" and args.raw:
        stdout.flush()
        buf = getattr(stdout, "buffer", None)
        if buf is not None:
            buf.write(value)
            buf.flush()
        else:
            stdout.write(value.decode("latin-1"))
    else:
        stdout.write(_to_text(value))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
