"""Command-line interface.

Subcommands: count, generate, verify, tree, codes, selfcheck.  Output is
deterministic for identical invocations and all word lists are sorted.
Exit codes: 0 success, 1 selfcheck failure, 2 invalid arguments, 3 brute
force cap exceeded (cap configurable via the DYCK_BRUTE_CAP variable).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import codes, counting, grammar, selfcheck, series, trees, words


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffdyck",
        description=(
            "Factor-free generalized Dyck words of slope (2m+1)/2: exact "
            "counting, generation, membership checks, the slope-5/2 tree "
            "bijection and cross-bifix-free codes."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count words of length (2m+3)n")
    p_count.add_argument("--m", type=int, required=True)
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--language", choices=("U", "D"), required=True)
    p_count.add_argument(
        "--method",
        choices=("bell", "series", "colored", "brute"),
        default="bell",
    )

    p_gen = sub.add_parser("generate", help="list all words of length (2m+3)n")
    p_gen.add_argument("--m", type=int, required=True)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--language", choices=("U", "D"), required=True)
    p_gen.add_argument("--alphabet", choices=("ab", "01"), default="ab")
    p_gen.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="membership report for one word")
    p_verify.add_argument("--m", type=int, required=True)
    p_verify.add_argument("--word", required=True)
    p_verify.add_argument("--alphabet", choices=("ab", "01"), default="ab")

    p_tree = sub.add_parser(
        "tree", help="slope-5/2 word/tree conversion (m fixed to 2)"
    )
    group = p_tree.add_mutually_exclusive_group(required=True)
    group.add_argument("--encode", metavar="WORD")
    group.add_argument("--decode", metavar="TREE_JSON")

    p_codes = sub.add_parser(
        "codes", help="cross-bifix-free binary code from D-words"
    )
    p_codes.add_argument("--m", type=int, required=True)
    p_codes.add_argument("--n-max", type=int, required=True)
    p_codes.add_argument("--format", choices=("text", "json"), default="text")
    p_codes.add_argument(
        "--verify",
        action="store_true",
        help="also run the cross-bifix-free verifier on the emitted set",
    )

    p_self = sub.add_parser("selfcheck", help="run the cross-module invariant suite")
    p_self.add_argument("--level", choices=("quick", "full"), default="quick")

    return parser


def _require_slope(parser: argparse.ArgumentParser, m: int) -> None:
    if m < 1:
        parser.error(f"--m must be >= 1, got {m}")


def _read_word(parser: argparse.ArgumentParser, word: str, alphabet: str) -> str:
    allowed = set(alphabet)
    bad = set(word) - allowed
    if bad:
        parser.error(
            f"word contains letters outside the {alphabet!r} alphabet: "
            f"{''.join(sorted(bad))!r}"
        )
    return words.from_binary(word) if alphabet == "01" else word


def _cmd_count(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _require_slope(parser, args.m)
    if args.n < 0:
        parser.error("--n must be >= 0")
    if args.method == "bell":
        value = (
            counting.count_u(args.m, args.n)
            if args.language == "U"
            else counting.count_d(args.m, args.n)
        )
    elif args.method == "series":
        poly = (
            series.u_series(args.m, args.n)
            if args.language == "U"
            else series.d_series(args.m, args.n)
        )
        value = poly[args.n]
    elif args.method == "colored":
        if args.language != "U":
            parser.error("--method colored applies to --language U only")
        value = counting.count_colored_dyck(args.m, args.n)
    else:
        enum = (
            words.brute_enumerate_u
            if args.language == "U"
            else words.brute_enumerate_d
        )
        value = len(enum(args.m, args.n))
    print(value)
    return 0


def _cmd_generate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _require_slope(parser, args.m)
    if args.n < 0:
        parser.error("--n must be >= 0")
    gen = grammar.generate_u_words if args.language == "U" else grammar.generate_d_words
    out = gen(args.m, args.n)
    if args.alphabet == "01":
        out = [words.to_binary(w) for w in out]
    if args.format == "json":
        print(json.dumps(out))
    else:
        for w in out:
            print(w)
    return 0


def _cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _require_slope(parser, args.m)
    word = _read_word(parser, args.word, args.alphabet)
    profile = words.prefix_profile(word, args.m)
    report = {
        "valuation": profile[-1],
        "min_prefix": min(profile),
        "is_dyck": words.is_dyck(word, args.m),
        "is_factor_free": words.is_factor_free(word, args.m),
        "in_U": words.is_in_u(word, args.m),
        "in_D": words.is_in_d(word, args.m),
    }
    print(json.dumps(report))
    return 0


def _cmd_tree(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.encode is not None:
        word = _read_word(parser, args.encode, "ab")
        try:
            tree = trees.word_to_tree(word)
        except (trees.NotInU, trees.MalformedTraversal) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(json.dumps(tree.to_json_obj()))
        return 0
    try:
        obj = json.loads(args.decode)
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return 2
    try:
        tree = trees.ColoredTree.from_json_obj(obj)
        print(trees.tree_to_word(tree))
    except trees.MalformedTree as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def _cmd_codes(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _require_slope(parser, args.m)
    if args.n_max < 1:
        parser.error("--n-max must be >= 1")
    code = codes.build_code(args.m, args.n_max)
    if args.format == "json":
        print(json.dumps(code.to_json_obj()))
    else:
        for w in code.words:
            print(w)
    if args.verify:
        ok, violation = codes.verify_cross_bifix_free(list(code.words))
        if not ok:
            print(f"cross-bifix violation: {violation}", file=sys.stderr)
            return 1
        print(f"cross-bifix-free: {len(code.words)} words verified", file=sys.stderr)
    return 0


def _cmd_selfcheck(args: argparse.Namespace) -> int:
    return 0 if selfcheck.run(args.level) else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            return _cmd_count(parser, args)
        if args.command == "generate":
            return _cmd_generate(parser, args)
        if args.command == "verify":
            return _cmd_verify(parser, args)
        if args.command == "tree":
            return _cmd_tree(parser, args)
        if args.command == "codes":
            return _cmd_codes(parser, args)
        return _cmd_selfcheck(args)
    except words.CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
