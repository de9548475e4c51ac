"""``regeq`` command line.

Exit codes: 0 success or positive verdict, 1 negative verdict (reject, not
equivalent), 2 usage or syntax error, 3 state cap exceeded, 4 internal
consistency failure (the two semantics disagree).
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .automaton import ExploreCapExceeded, explore, export_dot
from .bisim import DEFAULT_STATE_CAP, StateBudgetExceeded, bisimilar_k, decide_equiv
from .language import enumerate_words, member
from .semantics import denotational, derive, operational
from .syntax import ParseError, normalize, parse, show, symbols, tree_lines

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_CAP, EXIT_INTERNAL = range(5)

EMPTY_WORD = "ε"


class UsageError(Exception):
    pass


class InternalError(Exception):
    pass


def format_word(word) -> str:
    return "".join(map(str, word)) or EMPTY_WORD


def _word(text: str) -> tuple:
    return () if text in ("", EMPTY_WORD) else tuple(text)


def _alphabet(given: str, *exprs) -> tuple:
    """The --alphabet symbols in order, followed by any other symbols the expressions use."""
    if not given:
        raise UsageError("alphabet must be non-empty")
    if len(set(given)) != len(given):
        raise UsageError(f"alphabet {given!r} has duplicate symbols")
    extra = set().union(*(symbols(e) for e in exprs)) - set(given)
    return tuple(given) + tuple(sorted(extra))


def _check_word(word: tuple, alphabet: tuple) -> None:
    stray = [a for a in word if a not in alphabet]
    if stray:
        raise UsageError(f"word symbols {''.join(stray)!r} are not in the alphabet {''.join(alphabet)!r}")


def _verdict(ok: bool) -> str:
    return "accept" if ok else "reject"


def cmd_parse(args, out) -> int:
    for line in tree_lines(parse(args.expr)):
        print(line, file=out)
    return EXIT_OK


def cmd_match(args, out) -> int:
    e = parse(args.expr)
    alphabet = _alphabet(args.alphabet, e)
    word = _word(args.word)
    _check_word(word, alphabet)
    den = member(denotational(e), word)
    op = member(operational(e), word)
    if den != op:
        raise InternalError(
            f"semantics disagree on {format_word(word)}: denotational={_verdict(den)}, operational={_verdict(op)}"
        )
    print(f"{_verdict(den)} (denotational={_verdict(den)}, operational={_verdict(op)})", file=out)
    return EXIT_OK if den else EXIT_NEGATIVE


def cmd_derive(args, out) -> int:
    e = parse(args.expr)
    alphabet = _alphabet(args.alphabet, e)
    word = _word(args.word)
    _check_word(word, alphabet)
    show_raw = args.raw or not args.norm
    show_norm = args.norm or not args.raw
    if show_raw and show_norm:
        print(f"raw: {show(derive(e, word))}", file=out)
        print(f"norm: {show(derive(e, word, norm=True))}", file=out)
    elif show_raw:
        print(show(derive(e, word)), file=out)
    else:
        print(show(derive(e, word, norm=True)), file=out)
    return EXIT_OK


def cmd_enum(args, out) -> int:
    e = parse(args.expr)
    alphabet = _alphabet(args.alphabet, e)
    if args.max_len < 0:
        raise UsageError("--max-len must be non-negative")
    for word in enumerate_words(denotational(e), alphabet, args.max_len):
        print(format_word(word), file=out)
    return EXIT_OK


def cmd_equiv(args, out) -> int:
    e1, e2 = parse(args.expr1), parse(args.expr2)
    alphabet = _alphabet(args.alphabet, e1, e2)
    result = decide_equiv(e1, e2, alphabet, cap=args.cap)
    l1, l2 = denotational(e1), denotational(e2)
    if result.equivalent:
        if not bisimilar_k(args.depth, l1, l2, alphabet):
            raise InternalError(f"decided equivalent but not bisimilar at depth {args.depth}")
        print("EQUIVALENT", file=out)
        return EXIT_OK
    if member(l1, result.witness) == member(l2, result.witness):
        raise InternalError(f"witness {format_word(result.witness)} does not distinguish the expressions")
    print(f"NOT EQUIVALENT; witness: {format_word(result.witness)}", file=out)
    return EXIT_NEGATIVE


def cmd_dfa(args, out) -> int:
    e = parse(args.expr)
    alphabet = _alphabet(args.alphabet, e)
    d = explore(e, alphabet, cap=args.cap)
    if args.dot:
        out.write(export_dot(d, show(normalize(e))))
        return EXIT_OK
    for i, state in enumerate(d.states):
        mark = "*" if i in d.accepting else " "
        moves = " ".join(f"{a}->s{d.transitions[i, a]}" for a in d.alphabet)
        print(f"{mark} s{i}  {show(state)}  {moves}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regeq",
        description="Regular expressions via Brzozowski derivatives: matching, derivatives, "
        "enumeration, equivalence and derivative automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def with_alphabet(p):
        p.add_argument("--alphabet", default="ab", help="alphabet symbols in order (default: ab)")
        return p

    p = sub.add_parser("parse", help="print the AST")
    p.add_argument("expr")
    p.set_defaults(func=cmd_parse)

    p = with_alphabet(sub.add_parser("match", help="decide membership under both semantics"))
    p.add_argument("expr")
    p.add_argument("word", help=f"word of single-character symbols; '' or {EMPTY_WORD} is the empty word")
    p.set_defaults(func=cmd_match)

    p = with_alphabet(sub.add_parser("derive", help="derivative along a word"))
    p.add_argument("expr")
    p.add_argument("word")
    p.add_argument("--raw", action="store_true", help="only the unsimplified derivative")
    p.add_argument("--norm", action="store_true", help="only the normalized derivative")
    p.set_defaults(func=cmd_derive)

    p = with_alphabet(sub.add_parser("enum", help="list member words in length-lexicographic order"))
    p.add_argument("expr")
    p.add_argument("--max-len", type=int, default=6)
    p.set_defaults(func=cmd_enum)

    p = with_alphabet(sub.add_parser("equiv", help="decide language equivalence"))
    p.add_argument("expr1")
    p.add_argument("expr2")
    p.add_argument("--depth", type=int, default=8, help="depth of the bisimilarity cross-check")
    p.add_argument("--cap", type=int, default=DEFAULT_STATE_CAP, help="state-pair budget")
    p.set_defaults(func=cmd_equiv)

    p = with_alphabet(sub.add_parser("dfa", help="build the derivative automaton"))
    p.add_argument("expr")
    p.add_argument("--cap", type=int, default=DEFAULT_STATE_CAP, help="state budget")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.set_defaults(func=cmd_dfa)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "depth", 0) < 0 or getattr(args, "cap", 1) < 1:
        print("error: --depth must be >= 0 and --cap >= 1", file=err)
        parser.print_usage(err)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (StateBudgetExceeded, ExploreCapExceeded) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CAP
    except InternalError as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())
